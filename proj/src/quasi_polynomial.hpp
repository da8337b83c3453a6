#pragma once

#include <map>

#include "polynomial.hpp"
#include "ring.hpp"

namespace qch {

// Function on nonzero ideals determined by one polynomial constituent per
// divisor of the period: for a with a + period = kappa, the value is
// constituents[kappa] evaluated at N(a).
struct QuasiPolynomial {
    Ideal period;
    std::map<Ideal, UniPoly> constituents;

    const UniPoly& constituent_for(const Ideal& a) const {
        Ideal kappa = a.sum(period);
        auto it = constituents.find(kappa);
        if (it == constituents.end())
            throw std::logic_error("QuasiPolynomial: missing constituent for " + kappa.str());
        return it->second;
    }

    Int operator()(const Ideal& a) const { return constituent_for(a)(a.norm()); }
};

// Bivariate variant; evaluating the first variable at N(a) leaves a
// polynomial in the second variable.
struct BivariateQuasiPolynomial {
    Ideal period;
    std::map<Ideal, BiPoly> constituents;

    const BiPoly& constituent_for(const Ideal& a) const {
        Ideal kappa = a.sum(period);
        auto it = constituents.find(kappa);
        if (it == constituents.end())
            throw std::logic_error("BivariateQuasiPolynomial: missing constituent for " + kappa.str());
        return it->second;
    }

    UniPoly operator()(const Ideal& a) const { return constituent_for(a).evaluate_first(a.norm()); }
};

}  // namespace qch
