#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quasi_polynomial.hpp"

namespace qch {

// Central arrangement over the base ring: a list of nonzero column vectors
// alpha_1..alpha_n in O^rank. Subsets of columns are addressed by bitmask.
class Arrangement {
public:
    Arrangement(RingSpec ring, int space_rank, std::vector<std::vector<RingElement>> columns,
                std::string name = "");

    const RingSpec& ring() const { return ring_; }
    int space_rank() const { return rank_; }  // ambient rank
    int size() const { return static_cast<int>(columns_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<RingElement>& column(int i) const { return columns_[i]; }
    uint32_t full_mask() const { return (1u << size()) - 1; }

    // Partition of {0..n-1} into parallel classes (nonzero fraction-field
    // multiples), each class sorted, classes ordered by smallest member.
    const std::vector<std::vector<int>>& parallel_classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<uint32_t>& class_masks() const { return class_masks_; }
    bool parallel(int i, int j) const;

    // Additive-coordinate matrix of u -> (u*alpha)_{alpha in J}: shape
    // (e*rank) x (e*#J) with e the ring degree.
    IntMatrix coefficient_matrix(uint32_t subset_mask) const;
    Lattice image_lattice(uint32_t subset_mask) const;
    int subset_rank(uint32_t subset_mask) const;  // rank over the fraction field
    uint32_t closure(uint32_t subset_mask) const;
    std::vector<uint32_t> flats(const Limits& limits = {}) const;  // sorted by (rank, mask)

private:
    RingSpec ring_;
    int rank_;
    std::vector<std::vector<RingElement>> columns_;
    std::string name_;
    std::vector<std::vector<int>> classes_;
    std::vector<uint32_t> class_masks_;
};

// Annihilator of the torsion of Coker(G_J : O^rank -> O^J). Over Z this is
// the largest nonzero elementary divisor of G_J; the saturation-based
// general path works over every supported ring.
Ideal cokernel_torsion_annihilator(const Arrangement& a, uint32_t subset_mask);
Ideal cokernel_torsion_annihilator_general(const Arrangement& a, uint32_t subset_mask);

// lcm over all nonempty subsets J of the torsion annihilators.
Ideal lcm_period(const Arrangement& a, const Limits& limits = {});

// #{u in (O/ideal)^rank : u*alpha = 0 for all alpha in J}, exact for any
// norm via the kernel-counting lattice path.
Int count_H(const Arrangement& a, uint32_t subset_mask, const Ideal& ideal);
// Same count by direct point enumeration (resource bounded).
Int count_H_enumerate(const Arrangement& a, uint32_t subset_mask, const Ideal& ideal,
                      const Limits& limits = {});
// Z-only closed form q^(rank - r) * prod gcd(d_j, q).
Int count_H_elementary(const Arrangement& a, uint32_t subset_mask, const Int& q);

// Complement count #((O/ideal)^rank \ union of hyperplanes) by enumeration.
Int characteristic_brute(const Arrangement& a, const Ideal& ideal, const Limits& limits = {});
// Same value as the alternating subset sum over count_H.
Int characteristic_by_counting(const Arrangement& a, const Ideal& ideal);

QuasiPolynomial characteristic_quasi_polynomial(const Arrangement& a, const Limits& limits = {});

// Memoizing counter used by the quasi-polynomial constructions: caches the
// per-subset elementary divisors (Z) / coefficient matrices (quadratic).
class SubsetCounter {
public:
    explicit SubsetCounter(const Arrangement& a) : arr_(a) {}
    const Arrangement& arrangement() const { return arr_; }
    Int count(uint32_t subset_mask, const Ideal& ideal);

private:
    const Arrangement& arr_;
    std::map<uint32_t, std::vector<Int>> z_divisors_;
    std::map<uint32_t, IntMatrix> matrices_;
    std::map<std::pair<uint32_t, Ideal>, Int> memo_;
};

}  // namespace qch
