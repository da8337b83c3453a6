#pragma once

#include <vector>

#include "errors.hpp"
#include "int_matrix.hpp"

namespace qch {

// Sublattice of Z^ambient given by the integer row span of a basis matrix.
// The stored basis is canonical: row Hermite normal form with zero rows
// removed, so equal lattices compare equal componentwise.
class Lattice {
public:
    Lattice() : ambient_(0) {}

    static Lattice from_rows(int ambient, const IntMatrix& rows);
    static Lattice from_rows(int ambient, const std::vector<std::vector<Int>>& rows);
    static Lattice full(int ambient);
    static Lattice zero(int ambient) { return from_rows(ambient, IntMatrix(0, ambient)); }

    int ambient() const { return ambient_; }
    int rank() const { return basis_.rows(); }
    bool full_rank() const { return rank() == ambient_; }
    const IntMatrix& basis() const { return basis_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    bool contains(std::vector<Int> v) const;
    bool contains(const Lattice& other) const;
    // Canonical residue: pivot coordinates reduced into [0, pivot).
    std::vector<Int> reduce(std::vector<Int> v) const;

    Lattice sum(const Lattice& other) const;
    Lattice intersect(const Lattice& other) const;
    Lattice scaled(const Int& k) const;
    Int covolume() const;  // |det| of the basis; full-rank lattices only

    bool operator==(const Lattice& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }
    bool operator!=(const Lattice& other) const { return !(*this == other); }

private:
    int ambient_;
    IntMatrix basis_;
    std::vector<int> pivots_;
};

// {x : x * m = 0}, x a row vector of length m.rows().
Lattice kernel_lattice(const IntMatrix& m);

// {x : x * m in target}, target a lattice in Z^{m.cols()}.
Lattice preimage_lattice(const IntMatrix& m, const Lattice& target);

// Smallest lattice containing l whose quotient in Z^ambient is torsion-free.
Lattice saturation(const Lattice& l);

// [sup : sub] for full-rank nested lattices.
Int lattice_index(const Lattice& sup, const Lattice& sub);

// Cardinality of the kernel of the map (Z^a / domain) -> (Z^b / target)
// induced by x -> x*m. domain must be full rank (finite quotient) and must
// itself map into target.
Int count_kernel(const IntMatrix& m, const Lattice& target, const Lattice& domain);

// Coset representatives of sub inside sup (full rank, nested). Throws
// resource_error when the index exceeds limit.
std::vector<std::vector<Int>> quotient_representatives(const Lattice& sup, const Lattice& sub,
                                                       long long limit);

// Block-diagonal lattice: `copies` shifted copies of base inside Z^{copies*ambient}.
Lattice power_lattice(const Lattice& base, int copies);

}  // namespace qch
