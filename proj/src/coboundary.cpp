#include "coboundary.hpp"

#include <sstream>

#include "codes.hpp"

namespace qch {

namespace {

Int int_pow(const Int& base, unsigned long e) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

}  // namespace

int codeword_weight(const std::vector<RingElement>& word, const ResidueRing& ring,
                    const std::vector<std::vector<int>>& classes) {
    int weight = 0;
    for (const auto& cls : classes) {
        bool all_nonzero = true;
        for (int i : cls) {
            if (i < 0 || i >= static_cast<int>(word.size()))
                throw input_error("codeword_weight: word length does not match the class partition");
            if (ring.is_zero(word[i])) {
                all_nonzero = false;
                break;
            }
        }
        if (all_nonzero) ++weight;
    }
    return weight;
}

std::vector<Int> coboundary_counts_brute(const Arrangement& a, const Ideal& ideal,
                                         const Limits& limits) {
    ResidueRing r(ideal);
    Int total = int_pow(r.cardinality(), a.space_rank());
    if (total > to_int(limits.max_enumeration))
        throw resource_error("coboundary_counts_brute: point count exceeds enumeration bound");
    std::vector<RingElement> reps = r.representatives(limits.max_enumeration);
    const int p = a.class_count();
    std::vector<Int> b(p + 1, Int(0));
    std::vector<size_t> idx(a.space_rank(), 0);
    std::vector<RingElement> word(a.size(), RingElement::zero(a.ring()));
    while (true) {
        for (int c = 0; c < a.size(); ++c) {
            RingElement s = RingElement::zero(a.ring());
            for (int i = 0; i < a.space_rank(); ++i) s = s + reps[idx[i]] * a.column(c)[i];
            word[c] = s;
        }
        int wt = codeword_weight(word, r, a.parallel_classes());
        b[p - wt] += 1;
        int i = a.space_rank() - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < reps.size()) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return b;
}

std::vector<Int> coboundary_counts(SubsetCounter& counter, const Ideal& ideal,
                                   const Limits& limits) {
    const Arrangement& a = counter.arrangement();
    if (a.size() > limits.max_vectors)
        throw resource_error("coboundary_counts: arrangement exceeds the subset bound");
    const int n = a.size();
    const int p = a.class_count();
    const uint32_t subsets = 1u << n;
    // h[J] = #H_J, then the signed superset sum g[J] = sum_{K >= J} (-1)^{|K|-|J|} h[K]
    // counts the points whose vanishing set is exactly J.
    std::vector<Int> g(subsets);
    for (uint32_t mask = 0; mask < subsets; ++mask) g[mask] = counter.count(mask, ideal);
    for (int bit = 0; bit < n; ++bit)
        for (uint32_t mask = 0; mask < subsets; ++mask)
            if (!(mask & (1u << bit))) g[mask] -= g[mask | (1u << bit)];
    std::vector<Int> b(p + 1, Int(0));
    for (uint32_t mask = 0; mask < subsets; ++mask) {
        int untouched = 0;  // classes disjoint from J have every member nonzero
        for (uint32_t cm : a.class_masks())
            if ((cm & mask) == 0) ++untouched;
        b[p - untouched] += g[mask];
    }
    return b;
}

std::vector<Int> coboundary_counts(const Arrangement& a, const Ideal& ideal,
                                   const Limits& limits) {
    SubsetCounter counter(a);
    return coboundary_counts(counter, ideal, limits);
}

CoboundaryResult coboundary_quasi_polynomial(const Arrangement& a, const Limits& limits) {
    CoboundaryResult out{BivariateQuasiPolynomial{lcm_period(a, limits), {}}, {}};
    SubsetCounter counter(a);
    const int ell = a.space_rank();
    const int p = a.class_count();
    for (const Ideal& kappa : divisors(out.quasi.period, limits.max_divisor_norm)) {
        std::vector<Ideal> samples = sample_ideals(kappa, out.quasi.period, ell + 1);
        std::vector<std::vector<Int>> values;  // per sample: B_0..B_p
        for (const Ideal& sample : samples)
            values.push_back(coboundary_counts(counter, sample, limits));
        std::vector<UniPoly> constituents_b;
        BiPoly chi_bar;
        for (int i = 0; i <= p; ++i) {
            std::vector<std::pair<Int, Int>> nodes;
            for (size_t s = 0; s < samples.size(); ++s)
                nodes.emplace_back(samples[s].norm(), values[s][i]);
            UniPoly bi = interpolate(nodes, ell);
            for (int d = 0; d <= bi.degree(); ++d)
                chi_bar = chi_bar + BiPoly::monomial(d, i, bi.coeff(d));
            constituents_b.push_back(std::move(bi));
        }
        out.b_constituents.emplace(kappa, std::move(constituents_b));
        out.quasi.constituents.emplace(kappa, std::move(chi_bar));
    }
    return out;
}

BiPoly tutte_polynomial(const Arrangement& a, const Limits& limits) {
    if (a.class_count() > limits.max_vectors)
        throw resource_error("tutte_polynomial: arrangement exceeds the subset bound");
    const int p = a.class_count();
    // One representative column per distinct hyperplane.
    std::vector<int> reps;
    for (const auto& cls : a.parallel_classes()) reps.push_back(cls.front());
    auto rank_of = [&](uint32_t class_mask) {
        uint32_t cols = 0;
        for (int c = 0; c < p; ++c)
            if (class_mask & (1u << c)) cols |= 1u << reps[c];
        return a.subset_rank(cols);
    };
    const int total_rank = rank_of((1u << p) - 1);
    BiPoly x_minus_1 = BiPoly::monomial(1, 0, 1) - BiPoly::constant(1);
    BiPoly y_minus_1 = BiPoly::monomial(0, 1, 1) - BiPoly::constant(1);
    std::map<int, BiPoly> xp, yp;
    auto cached_pow = [](std::map<int, BiPoly>& memo, const BiPoly& base, int e) -> const BiPoly& {
        auto it = memo.find(e);
        if (it == memo.end()) it = memo.emplace(e, base.pow(e)).first;
        return it->second;
    };
    BiPoly t;
    for (uint32_t mask = 0; mask < (1u << p); ++mask) {
        const int rb = rank_of(mask);
        const int cardinality = __builtin_popcount(mask);
        t = t + cached_pow(xp, x_minus_1, total_rank - rb) * cached_pow(yp, y_minus_1, cardinality - rb);
    }
    return t;
}

bool tutte_coboundary_identity_holds(const Arrangement& a, const Limits& limits,
                                     std::string* detail) {
    CoboundaryResult cb = coboundary_quasi_polynomial(a, limits);
    const BiPoly& chi_bar = cb.quasi.constituents.at(Ideal::unit(a.ring()));
    BiPoly x = BiPoly::monomial(1, 0, 1);
    BiPoly y = BiPoly::monomial(0, 1, 1);
    BiPoly x_minus_1 = x - BiPoly::constant(1);
    BiPoly y_minus_1 = y - BiPoly::constant(1);
    BiPoly lhs = chi_bar.substituted(x_minus_1 * y_minus_1, y);
    const int r = a.subset_rank(a.full_mask());
    BiPoly rhs = x_minus_1.pow(a.space_rank() - r) * y_minus_1.pow(a.space_rank()) *
                 tutte_polynomial(a, limits);
    if (lhs == rhs) return true;
    if (detail) {
        std::ostringstream os;
        os << "substituted coboundary " << lhs.str("x", "y") << " != " << rhs.str("x", "y");
        *detail = os.str();
    }
    return false;
}

bool kernel_weight_identity_holds(const Arrangement& a, const Ideal& ideal, const Limits& limits,
                                  std::string* detail) {
    std::vector<Int> b = coboundary_counts(a, ideal, limits);
    Int kernel = count_H(a, a.full_mask(), ideal);
    Code code = image_code(a, ideal, limits);
    BiPoly w = class_weight_enumerator(code, a.parallel_classes());
    UniPoly weight_side;  // kernel * W(x, 1) as a polynomial in x
    {
        std::vector<Int> c(a.class_count() + 1, Int(0));
        for (const auto& [key, coeff] : w.terms()) c[key.first] += kernel * coeff;
        weight_side = UniPoly(std::move(c));
    }
    UniPoly counts_side{std::vector<Int>(b.begin(), b.end())};
    if (counts_side == weight_side) return true;
    if (detail) {
        std::ostringstream os;
        os << "counts " << counts_side.str("x") << " != kernel*weights " << weight_side.str("x");
        *detail = os.str();
    }
    return false;
}

}  // namespace qch
