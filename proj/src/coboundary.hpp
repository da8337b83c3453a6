#pragma once

#include "arrangement.hpp"

namespace qch {

// Number of parallel classes on which the word is nonzero at every member.
int codeword_weight(const std::vector<RingElement>& word, const ResidueRing& ring,
                    const std::vector<std::vector<int>>& classes);

// B_i(ideal) = #{u : weight(u*G) = p(A) - i}, i = 0..p(A).
std::vector<Int> coboundary_counts_brute(const Arrangement& a, const Ideal& ideal,
                                         const Limits& limits = {});
// Same values through the subset inclusion-exclusion, usable at any norm.
std::vector<Int> coboundary_counts(const Arrangement& a, const Ideal& ideal,
                                   const Limits& limits = {});
std::vector<Int> coboundary_counts(SubsetCounter& counter, const Ideal& ideal,
                                   const Limits& limits = {});

struct CoboundaryResult {
    BivariateQuasiPolynomial quasi;                         // chi-bar constituents in (t, x)
    std::map<Ideal, std::vector<UniPoly>> b_constituents;   // per divisor: B_0(t)..B_p(t)
};
CoboundaryResult coboundary_quasi_polynomial(const Arrangement& a, const Limits& limits = {});

// Tutte polynomial of the arrangement over the fraction field; the ground
// set is the set of distinct hyperplanes, i.e. one element per parallel
// class. Variables are (x, y).
BiPoly tutte_polynomial(const Arrangement& a, const Limits& limits = {});

// chi-bar^O((x-1)(y-1), y) == (x-1)^(rank - r) * (y-1)^rank * T(x, y).
bool tutte_coboundary_identity_holds(const Arrangement& a, const Limits& limits = {},
                                     std::string* detail = nullptr);

// chi-bar(ideal, x) == #Ker G_ideal * W_{Image}(x, 1) with the class weight.
bool kernel_weight_identity_holds(const Arrangement& a, const Ideal& ideal,
                                  const Limits& limits = {}, std::string* detail = nullptr);

}  // namespace qch
