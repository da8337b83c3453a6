#pragma once

#include "arrangement.hpp"

namespace qch {

// One layer: a coset of pi(H_{F,K}) meeting the rho-torsion points, where F
// is the flat labelling the defining subspace. The representative numerator
// w encodes the point w / N(rho) and is the lexicographically least member.
struct Layer {
    uint32_t flat = 0;
    uint32_t defining_subset = 0;  // {alpha : layer contained in H_alpha}
    std::vector<Int> rep;
    int dim = 0;
    int atom_count = 0;
};

// The finite poset of layers, built from the rho-torsion points; index 0 is
// the ambient layer (the minimum). Ordering is reverse set inclusion.
class LayerPoset {
public:
    static LayerPoset build(const Arrangement& a, const Limits& limits = {});

    const Arrangement& arrangement() const { return arr_; }
    const Ideal& period() const { return rho_; }
    const Int& denominator() const { return n_; }

    int size() const { return static_cast<int>(layers_.size()); }
    const Layer& layer(int i) const { return layers_[i]; }
    int bottom() const { return 0; }
    bool leq(int i, int j) const { return leq_[i][j]; }
    const Int& mobius(int i, int j) const { return mobius_[i][j]; }
    std::vector<int> atoms() const;

    // Membership vector of the torsion subposet L[a + rho].
    std::vector<char> torsion_members(const Ideal& a) const;
    // Coboundary polynomial of L[kappa] in (t, x): the subposet Mobius sum
    // with x recording full-poset atom counts.
    BiPoly poset_constituent(const Ideal& kappa) const;
    // Characteristic polynomial of L[kappa].
    UniPoly poset_characteristic(const Ideal& kappa) const;
    // # M(Z)[a] via the Mobius-alternating norm sum over L[a + rho].
    Int complement_count(int layer_index, const Ideal& a) const;

    // Point-level access for the lemma-level checks.
    int point_count() const { return static_cast<int>(points_.size()); }
    const std::vector<Int>& point(int k) const { return points_[k]; }
    uint32_t point_hyperplanes(int k) const { return point_masks_[k]; }
    bool point_is_torsion(int k, const Ideal& a) const;
    bool point_in_layer(int k, int layer_index) const;
    int minimal_layer_of_point(int k) const;
    int point_weight(int k) const;  // weight of the induced word u*G

    // (u - v) * G_F lies in the image of G_F, both points given as numerators.
    bool coset_equivalent(const std::vector<Int>& wu, const std::vector<Int>& wv,
                          uint32_t flat) const;

    std::string dot() const;
    std::string point_str(const std::vector<Int>& w) const;

private:
    explicit LayerPoset(Arrangement a) : arr_(std::move(a)) {}
    std::vector<Int> torsion_action(const RingElement& g, const std::vector<Int>& w) const;
    std::vector<std::vector<Int>> subposet_mobius(const std::vector<char>& members) const;

    Arrangement arr_;
    Ideal rho_ = Ideal::unit(RingSpec::integers());
    Int n_ = 1;
    std::vector<Layer> layers_;
    std::vector<std::vector<char>> leq_;
    std::vector<std::vector<Int>> mobius_;
    std::vector<std::vector<Int>> points_;
    std::vector<uint32_t> point_masks_;
    struct FlatData {
        IntMatrix matrix;        // additive matrix of G_F
        Lattice scaled_image;    // N * (image lattice of G_F)
        int rank = 0;
    };
    std::map<uint32_t, FlatData> flat_data_;
};

}  // namespace qch
