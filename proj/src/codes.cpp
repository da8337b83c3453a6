#include "codes.hpp"

#include <algorithm>
#include <sstream>

namespace qch {

namespace {

Int int_pow(const Int& base, unsigned long e) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

bool word_less(const std::vector<RingElement>& a, const std::vector<RingElement>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

int hamming_weight(const std::vector<RingElement>& word, const ResidueRing& r) {
    int wt = 0;
    for (const RingElement& x : word)
        if (!r.is_zero(x)) ++wt;
    return wt;
}

}  // namespace

Code::Code(ResidueRing ring, int length, std::vector<std::vector<RingElement>> words)
    : ring_(std::move(ring)), length_(length), words_(std::move(words)) {
    for (auto& w : words_) {
        if (static_cast<int>(w.size()) != length_) throw input_error("Code: ragged codeword");
        for (auto& x : w) x = ring_.reduce(x);
    }
    std::sort(words_.begin(), words_.end(), word_less);
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const std::vector<RingElement>& word) const {
    std::vector<RingElement> reduced;
    reduced.reserve(word.size());
    for (const RingElement& x : word) reduced.push_back(ring_.reduce(x));
    return std::binary_search(words_.begin(), words_.end(), reduced, word_less);
}

Code image_code(const Arrangement& a, const Ideal& ideal, const Limits& limits) {
    ResidueRing r(ideal);
    Int total = int_pow(r.cardinality(), a.space_rank());
    if (total > to_int(limits.max_enumeration))
        throw resource_error("image_code: point count exceeds enumeration bound");
    std::vector<RingElement> reps = r.representatives(limits.max_enumeration);
    std::vector<std::vector<RingElement>> words;
    std::vector<size_t> idx(a.space_rank(), 0);
    while (true) {
        std::vector<RingElement> word(a.size(), RingElement::zero(a.ring()));
        for (int c = 0; c < a.size(); ++c) {
            RingElement s = RingElement::zero(a.ring());
            for (int i = 0; i < a.space_rank(); ++i) s = s + reps[idx[i]] * a.column(c)[i];
            word[c] = r.reduce(s);
        }
        words.push_back(std::move(word));
        int i = a.space_rank() - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < reps.size()) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return Code(std::move(r), a.size(), std::move(words));
}

BiPoly hamming_weight_enumerator(const Code& c) {
    BiPoly w;
    for (const auto& word : c.words()) {
        int wt = hamming_weight(word, c.ring());
        w = w + BiPoly::monomial(c.length() - wt, wt, 1);
    }
    return w;
}

BiPoly class_weight_enumerator(const Code& c, const std::vector<std::vector<int>>& classes) {
    BiPoly w;
    const int p = static_cast<int>(classes.size());
    for (const auto& word : c.words()) {
        int wt = 0;
        for (const auto& cls : classes) {
            bool all_nonzero = true;
            for (int i : cls) {
                if (i < 0 || i >= c.length())
                    throw input_error("class_weight_enumerator: class index out of range");
                if (c.ring().is_zero(word[i])) {
                    all_nonzero = false;
                    break;
                }
            }
            if (all_nonzero) ++wt;
        }
        w = w + BiPoly::monomial(p - wt, wt, 1);
    }
    return w;
}

Code dual_code(const Code& c, const Limits& limits) {
    const ResidueRing& r = c.ring();
    const RingSpec& ring = r.ideal().ring();
    const int n = c.length();
    const int e = ring.degree();
    Int ambient = int_pow(r.cardinality(), n);
    std::vector<std::vector<RingElement>> words;
    if (ambient <= 10'000) {
        // Brute filter over the whole ambient space.
        std::vector<RingElement> reps = r.representatives(limits.max_enumeration);
        std::vector<size_t> idx(n, 0);
        while (true) {
            std::vector<RingElement> u(n, RingElement::zero(ring));
            for (int i = 0; i < n; ++i) u[i] = reps[idx[i]];
            bool annihilates = true;
            for (const auto& v : c.words()) {
                RingElement s = RingElement::zero(ring);
                for (int i = 0; i < n; ++i) s = s + u[i] * v[i];
                if (!r.is_zero(s)) {
                    annihilates = false;
                    break;
                }
            }
            if (annihilates) words.push_back(std::move(u));
            int i = n - 1;
            for (; i >= 0; --i) {
                if (++idx[i] < reps.size()) break;
                idx[i] = 0;
            }
            if (i < 0) break;
        }
    } else {
        // Lattice pullback: {z : z . M_v in ideal for every codeword v},
        // then SNF coset enumeration of the quotient by ideal^n.
        Lattice pre = Lattice::full(e * n);
        for (const auto& v : c.words()) {
            IntMatrix mv(e * n, e);
            for (int j = 0; j < n; ++j) {
                IntMatrix block = multiplication_matrix(v[j]);
                for (int rr = 0; rr < e; ++rr)
                    for (int cc = 0; cc < e; ++cc) mv.at(e * j + rr, cc) = block.at(rr, cc);
            }
            pre = pre.intersect(preimage_lattice(mv, r.ideal().lattice()));
        }
        Lattice blocked = power_lattice(r.ideal().lattice(), n);
        for (const auto& rep : quotient_representatives(pre, blocked, limits.max_enumeration)) {
            std::vector<RingElement> u(n, RingElement::zero(ring));
            for (int j = 0; j < n; ++j) {
                std::vector<Int> comp(rep.begin() + e * j, rep.begin() + e * (j + 1));
                u[j] = r.reduce(RingElement::from_coords(ring, comp));
            }
            words.push_back(std::move(u));
        }
    }
    Code dual(r, n, std::move(words));
    if (to_int(c.size()) * to_int(dual.size()) != ambient)
        throw std::logic_error("dual_code: #C * #dual != (ring size)^n");
    return dual;
}

bool macwilliams_identity_holds(const Code& c, const Limits& limits, std::string* detail) {
    Code dual = dual_code(c, limits);
    BiPoly w_c = hamming_weight_enumerator(c);
    BiPoly w_dual = hamming_weight_enumerator(dual);
    BiPoly x = BiPoly::monomial(1, 0, 1), y = BiPoly::monomial(0, 1, 1);
    BiPoly rhs = w_dual.substituted(x + BiPoly::constant(c.ring().cardinality() - 1) * y, x - y);
    // Exact division by #dual.
    BiPoly quotient;
    for (const auto& [key, coeff] : rhs.terms()) {
        if (coeff % to_int(dual.size()) != 0) {
            if (detail) *detail = "transformed dual enumerator not divisible by #dual";
            return false;
        }
        quotient = quotient + BiPoly::monomial(key.first, key.second, coeff / to_int(dual.size()));
    }
    if (quotient == w_c) return true;
    if (detail) {
        std::ostringstream os;
        os << "W_C = " << w_c.str("x", "y") << " but transform gives " << quotient.str("x", "y");
        *detail = os.str();
    }
    return false;
}

Section4Report section4_dual_experiment(const Limits& limits) {
    RingSpec z = RingSpec::integers();
    auto el = [&](long v) { return RingElement::integer(z, v); };
    Arrangement a(z, 2, {{el(2), el(0)}, {el(0), el(1)}}, "section4");
    Section4Report report;
    report.ok = true;
    for (long q = 2; q <= 12; ++q) {
        Ideal ideal = Ideal::principal_integer(z, q);
        ResidueRing r(ideal);
        Code image = image_code(a, ideal, limits);
        Code dual = dual_code(image, limits);
        // Hom-construction image: {(c, 0) : 2c = 0 mod q}.
        std::vector<std::vector<RingElement>> hom_words;
        for (long cval = 0; cval < q; ++cval)
            if ((2 * cval) % q == 0) hom_words.push_back({el(cval), el(0)});
        Code hom_image(r, 2, std::move(hom_words));
        Section4Row row;
        row.q = q;
        row.image_enumerator = hamming_weight_enumerator(image).str("x", "y");
        row.dual_enumerator = hamming_weight_enumerator(dual).str("x", "y");
        row.dual_matches_hom_construction = hom_image.words() == dual.words();
        row.macwilliams = macwilliams_identity_holds(image, limits);
        report.ok = report.ok && row.dual_matches_hom_construction && row.macwilliams;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace qch
