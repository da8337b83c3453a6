#include "polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qch {

namespace {

void trim(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// One power-product "3*t^2*x" given variable names; sign handled by caller.
std::string term_str(const Int& coeff, int d1, const std::string& v1, int d2,
                     const std::string& v2) {
    Int a = abs(coeff);
    std::ostringstream os;
    bool printed = false;
    if (a != 1 || (d1 == 0 && d2 == 0)) {
        os << a.get_str();
        printed = true;
    }
    auto var = [&](const std::string& v, int d) {
        if (d == 0) return;
        if (printed) os << "*";
        os << v;
        if (d > 1) os << "^" << d;
        printed = true;
    };
    var(v1, d1);
    var(v2, d2);
    return os.str();
}

std::string join_terms(const std::vector<std::tuple<int, int, Int>>& terms, const std::string& v1,
                       const std::string& v2) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d1, d2, c] : terms) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << term_str(c, d1, v1, d2, v2);
    }
    return os.str();
}

}  // namespace

UniPoly::UniPoly(std::vector<Int> coefficients) : c_(std::move(coefficients)) { trim(c_); }

UniPoly UniPoly::monomial(int degree, const Int& coefficient) {
    if (coefficient == 0) return UniPoly();
    std::vector<Int> c(degree + 1, Int(0));
    c[degree] = coefficient;
    return UniPoly(std::move(c));
}

Int UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Int UniPoly::operator()(const Int& t) const {
    Int acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * t + c_[i];
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
    std::vector<std::tuple<int, int, Int>> terms;
    for (int i = degree(); i >= 0; --i)
        if (c_[i] != 0) terms.emplace_back(i, 0, c_[i]);
    return join_terms(terms, var, "");
}

BiPoly BiPoly::monomial(int d1, int d2, const Int& coefficient) {
    BiPoly p;
    p.add_term(d1, d2, coefficient);
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p, bool in_second_variable) {
    BiPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (in_second_variable)
            out.add_term(0, i, p.coeff(i));
        else
            out.add_term(i, 0, p.coeff(i));
    }
    return out;
}

void BiPoly::add_term(int d1, int d2, const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(d1, d2);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int BiPoly::coeff(int d1, int d2) const {
    auto it = terms_.find(std::make_pair(d1, d2));
    return it == terms_.end() ? Int(0) : it->second;
}

int BiPoly::degree1() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree2() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

std::vector<std::tuple<int, int, Int>> BiPoly::ordered_terms() const {
    std::vector<std::tuple<int, int, Int>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(k.first, k.second, c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    return out;
}

UniPoly BiPoly::coefficient_of_second(int d2) const {
    std::vector<Int> c;
    for (const auto& [k, v] : terms_) {
        if (k.second != d2) continue;
        if (static_cast<int>(c.size()) <= k.first) c.resize(k.first + 1, Int(0));
        c[k.first] = v;
    }
    return UniPoly(std::move(c));
}

UniPoly BiPoly::evaluate_first(const Int& value) const {
    std::vector<Int> c;
    for (const auto& [k, v] : terms_) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), k.first);
        if (static_cast<int>(c.size()) <= k.second) c.resize(k.second + 1, Int(0));
        c[k.second] += v * p;
    }
    return UniPoly(std::move(c));
}

Int BiPoly::operator()(const Int& v1, const Int& v2) const {
    Int acc = 0;
    for (const auto& [k, c] : terms_) {
        Int p1, p2;
        mpz_pow_ui(p1.get_mpz_t(), v1.get_mpz_t(), k.first);
        mpz_pow_ui(p2.get_mpz_t(), v2.get_mpz_t(), k.second);
        acc += c * p1 * p2;
    }
    return acc;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, Int(-c));
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return out;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly acc = BiPoly::constant(1);
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BiPoly BiPoly::substituted(const BiPoly& first, const BiPoly& second) const {
    std::map<int, BiPoly> pow1, pow2;
    auto power = [](std::map<int, BiPoly>& memo, const BiPoly& base, int e) -> const BiPoly& {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        BiPoly value = base.pow(e);
        return memo.emplace(e, std::move(value)).first->second;
    };
    BiPoly out;
    for (const auto& [k, c] : terms_)
        out = out + BiPoly::constant(c) * power(pow1, first, k.first) * power(pow2, second, k.second);
    return out;
}

std::string BiPoly::str(const std::string& var1, const std::string& var2) const {
    return join_terms(ordered_terms(), var1, var2);
}

UniPoly interpolate(const std::vector<std::pair<Int, Int>>& samples, int degree_bound) {
    if (degree_bound < 0) throw input_error("interpolate: negative degree bound");
    if (static_cast<int>(samples.size()) < degree_bound + 1)
        throw input_error("interpolate: need at least degree_bound+1 samples");
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw input_error("interpolate: duplicate interpolation nodes");

    const size_t k = samples.size();
    std::vector<Rat> acc(k, Rat(0));
    std::vector<Rat> num;
    for (size_t i = 0; i < k; ++i) {
        num.assign(1, Rat(1));
        Rat den(1);
        for (size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            // num *= (t - node_j)
            num.push_back(Rat(0));
            for (size_t d = num.size() - 1; d > 0; --d)
                num[d] = num[d - 1] - Rat(samples[j].first) * num[d];
            num[0] = -Rat(samples[j].first) * num[0];
            den *= Rat(samples[i].first) - Rat(samples[j].first);
        }
        Rat scale = Rat(samples[i].second) / den;
        scale.canonicalize();
        for (size_t d = 0; d < num.size(); ++d) acc[d] += scale * num[d];
    }
    std::vector<Int> coeffs(k, Int(0));
    for (size_t d = 0; d < k; ++d) {
        Rat c = acc[d];
        c.canonicalize();
        if (c.get_den() != 1)
            throw interpolation_error("interpolate: non-integer coefficient at degree " +
                                      std::to_string(d));
        coeffs[d] = c.get_num();
    }
    UniPoly out{std::move(coeffs)};
    if (out.degree() > degree_bound)
        throw interpolation_error("interpolate: samples exceed the claimed degree bound");
    return out;
}

}  // namespace qch
