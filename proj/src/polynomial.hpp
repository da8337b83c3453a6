#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int_matrix.hpp"

namespace qch {

// Univariate integer polynomial, coefficients indexed by degree, no stored
// leading zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coefficients);
    static UniPoly monomial(int degree, const Int& coefficient);
    static UniPoly constant(const Int& c) { return monomial(0, c); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Int coeff(int i) const;
    const std::vector<Int>& coefficients() const { return c_; }

    Int operator()(const Int& t) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Int> c_;
};

// Integer polynomial in two variables; sparse, no stored zero coefficients.
// The variables are positional -- callers name them at rendering time.
class BiPoly {
public:
    BiPoly() = default;
    static BiPoly monomial(int d1, int d2, const Int& coefficient);
    static BiPoly constant(const Int& c) { return monomial(0, 0, c); }
    static BiPoly from_unipoly(const UniPoly& p, bool in_second_variable = false);

    bool is_zero() const { return terms_.empty(); }
    Int coeff(int d1, int d2) const;
    int degree1() const;
    int degree2() const;
    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
    // Terms in canonical rendering order: first variable degree descending,
    // second variable degree ascending.
    std::vector<std::tuple<int, int, Int>> ordered_terms() const;

    UniPoly coefficient_of_second(int d2) const;  // polynomial in the first variable
    UniPoly evaluate_first(const Int& value) const;  // polynomial in the second variable
    Int operator()(const Int& v1, const Int& v2) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly pow(int e) const;
    // Substitute polynomials for both variables.
    BiPoly substituted(const BiPoly& first, const BiPoly& second) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var1 = "t", const std::string& var2 = "x") const;

private:
    void add_term(int d1, int d2, const Int& c);
    std::map<std::pair<int, int>, Int> terms_;
};

// Unique polynomial of degree <= degree_bound through the samples, computed
// in exact rational arithmetic. Throws input_error on duplicate nodes or too
// few samples, interpolation_error when the result has a non-integer
// coefficient or exceeds the degree bound.
UniPoly interpolate(const std::vector<std::pair<Int, Int>>& samples, int degree_bound);

}  // namespace qch
