#pragma once

#include "arrangement.hpp"

namespace qch {

// Linear code over a residue ring, stored extensionally as a sorted list of
// codewords (canonical representatives).
class Code {
public:
    Code(ResidueRing ring, int length, std::vector<std::vector<RingElement>> words);

    const ResidueRing& ring() const { return ring_; }
    int length() const { return length_; }
    const std::vector<std::vector<RingElement>>& words() const { return words_; }
    long long size() const { return static_cast<long long>(words_.size()); }
    bool contains(const std::vector<RingElement>& word) const;

private:
    ResidueRing ring_;
    int length_;
    std::vector<std::vector<RingElement>> words_;
};

// {u * G mod ideal : u in (O/ideal)^rank}, deduplicated.
Code image_code(const Arrangement& a, const Ideal& ideal, const Limits& limits = {});

// Homogeneous enumerators in (x, y): x^(len - wt) y^wt summed over codewords.
BiPoly hamming_weight_enumerator(const Code& c);
BiPoly class_weight_enumerator(const Code& c, const std::vector<std::vector<int>>& classes);

// Annihilator code {u : u . v = 0 for all v in C}; asserts the duality
// #C * #dual == (ring size)^length on every computation.
Code dual_code(const Code& c, const Limits& limits = {});

// W_C(x,y) == W_dual(x + (#R-1)y, x - y) / #dual, as exact polynomials.
bool macwilliams_identity_holds(const Code& c, const Limits& limits = {},
                                std::string* detail = nullptr);

struct Section4Row {
    long q = 0;
    std::string image_enumerator;
    std::string dual_enumerator;
    bool dual_matches_hom_construction = false;
    bool macwilliams = false;
};
struct Section4Report {
    bool ok = false;
    std::vector<Section4Row> rows;
};
// Fixed experiment: the two-vector arrangement {(2,0), (0,1)} over Z with
// its Hom-side dual {(c, 0) : 2c = 0 mod q}, for q = 2..12.
Section4Report section4_dual_experiment(const Limits& limits = {});

}  // namespace qch
