#include "arrangement.hpp"

#include <algorithm>
#include <numeric>

namespace qch {

namespace {

int popcount(uint32_t m) { return __builtin_popcount(m); }

Int int_pow(const Int& base, unsigned long e) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

void check_subset_bound(const Arrangement& a, const Limits& limits, const char* where) {
    if (a.size() > limits.max_vectors)
        throw resource_error(std::string(where) + ": arrangement exceeds the subset bound");
}

}  // namespace

Arrangement::Arrangement(RingSpec ring, int space_rank,
                         std::vector<std::vector<RingElement>> columns, std::string name)
    : ring_(ring), rank_(space_rank), columns_(std::move(columns)), name_(std::move(name)) {
    if (rank_ < 1) throw input_error("Arrangement: ambient rank must be positive");
    if (columns_.size() > 31) throw input_error("Arrangement: too many vectors");
    for (const auto& col : columns_) {
        if (static_cast<int>(col.size()) != rank_)
            throw input_error("Arrangement: column length does not match ambient rank");
        bool zero = true;
        for (const RingElement& x : col) {
            if (x.ring() != ring_) throw input_error("Arrangement: entry from a different ring");
            if (!x.is_zero()) zero = false;
        }
        if (zero) throw input_error("Arrangement: zero column");
    }
    // Parallel classes by union-find over the pairwise rank-1 test.
    const int n = size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (parallel(i, j)) parent[find(i)] = find(j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> classes;
    for (auto& [root, members] : groups) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    classes_ = std::move(classes);
    for (const auto& cls : classes_) {
        uint32_t m = 0;
        for (int i : cls) m |= 1u << i;
        class_masks_.push_back(m);
    }
}

bool Arrangement::parallel(int i, int j) const {
    // alpha_i and alpha_j span a rank-1 space over K iff all 2x2 minors vanish.
    for (int r = 0; r < rank_; ++r)
        for (int s = r + 1; s < rank_; ++s)
            if (columns_[i][r] * columns_[j][s] != columns_[i][s] * columns_[j][r]) return false;
    return true;
}

IntMatrix Arrangement::coefficient_matrix(uint32_t subset_mask) const {
    const int e = ring_.degree();
    std::vector<int> sel;
    for (int i = 0; i < size(); ++i)
        if (subset_mask & (1u << i)) sel.push_back(i);
    IntMatrix m(e * rank_, e * static_cast<int>(sel.size()));
    for (size_t j = 0; j < sel.size(); ++j)
        for (int i = 0; i < rank_; ++i) {
            IntMatrix block = multiplication_matrix(columns_[sel[j]][i]);
            for (int r = 0; r < e; ++r)
                for (int c = 0; c < e; ++c) m.at(e * i + r, e * j + c) = block.at(r, c);
        }
    return m;
}

Lattice Arrangement::image_lattice(uint32_t subset_mask) const {
    IntMatrix m = coefficient_matrix(subset_mask);
    return Lattice::from_rows(m.cols(), m);
}

int Arrangement::subset_rank(uint32_t subset_mask) const {
    const int r = rank(coefficient_matrix(subset_mask));
    if (r % ring_.degree() != 0)
        throw std::logic_error("subset_rank: additive rank not divisible by the ring degree");
    return r / ring_.degree();
}

uint32_t Arrangement::closure(uint32_t subset_mask) const {
    const int base = subset_rank(subset_mask);
    uint32_t out = 0;
    for (int i = 0; i < size(); ++i) {
        uint32_t bit = 1u << i;
        if ((subset_mask & bit) || subset_rank(subset_mask | bit) == base) out |= bit;
    }
    return out;
}

std::vector<uint32_t> Arrangement::flats(const Limits& limits) const {
    check_subset_bound(*this, limits, "flats");
    std::vector<int> ranks(1u << size());
    for (uint32_t m = 0; m < (1u << size()); ++m) ranks[m] = subset_rank(m);
    std::vector<uint32_t> out;
    for (uint32_t m = 0; m < (1u << size()); ++m) {
        uint32_t cl = m;
        for (int i = 0; i < size(); ++i) {
            uint32_t bit = 1u << i;
            if (!(cl & bit) && ranks[m | bit] == ranks[m]) cl |= bit;
        }
        if (cl == m) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [&](uint32_t a, uint32_t b) {
        if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
        return a < b;
    });
    return out;
}

Ideal cokernel_torsion_annihilator_general(const Arrangement& a, uint32_t subset_mask) {
    if (subset_mask == 0)
        throw input_error("cokernel_torsion_annihilator: empty subset");
    const RingSpec& ring = a.ring();
    const int e = ring.degree();
    Lattice image = a.image_lattice(subset_mask);
    Lattice sat = saturation(image);
    // Annihilator of sat/image: ring elements x with x*s in image for every
    // basis vector s of the saturation.
    Lattice ann = Lattice::full(e);
    for (int i = 0; i < sat.rank(); ++i) {
        std::vector<Int> s = sat.basis().row(i);
        const int k = sat.ambient() / e;
        IntMatrix ms(e, sat.ambient());
        for (int j = 0; j < k; ++j) {
            std::vector<Int> comp(s.begin() + e * j, s.begin() + e * (j + 1));
            IntMatrix block = multiplication_matrix(RingElement::from_coords(ring, comp));
            for (int r = 0; r < e; ++r)
                for (int c = 0; c < e; ++c) ms.at(r, e * j + c) = block.at(r, c);
        }
        ann = ann.intersect(preimage_lattice(ms, image));
    }
    return Ideal::from_lattice(ring, ann);
}

Ideal cokernel_torsion_annihilator(const Arrangement& a, uint32_t subset_mask) {
    if (subset_mask == 0)
        throw input_error("cokernel_torsion_annihilator: empty subset");
    if (a.ring().degree() != 1) return cokernel_torsion_annihilator_general(a, subset_mask);
    SnfResult snf = smith_normal_form(a.coefficient_matrix(subset_mask));
    Int largest = 1;
    for (const Int& d : snf.divisors)
        if (d != 0) largest = d;  // divisor chain: the last nonzero one is the lcm
    return Ideal::principal_integer(a.ring(), largest);
}

Ideal lcm_period(const Arrangement& a, const Limits& limits) {
    check_subset_bound(a, limits, "lcm_period");
    Ideal acc = Ideal::unit(a.ring());
    for (uint32_t mask = 1; mask <= a.full_mask() && a.size() > 0; ++mask)
        acc = acc.intersect(cokernel_torsion_annihilator(a, mask));
    return acc;
}

Int count_H(const Arrangement& a, uint32_t subset_mask, const Ideal& ideal) {
    if (ideal.ring() != a.ring()) throw input_error("count_H: ring mismatch");
    const int k = popcount(subset_mask);
    if (k == 0) return int_pow(ideal.norm(), a.space_rank());
    return count_kernel(a.coefficient_matrix(subset_mask), power_lattice(ideal.lattice(), k),
                        power_lattice(ideal.lattice(), a.space_rank()));
}

Int count_H_enumerate(const Arrangement& a, uint32_t subset_mask, const Ideal& ideal,
                      const Limits& limits) {
    ResidueRing r(ideal);
    Int total = int_pow(r.cardinality(), a.space_rank());
    if (total > to_int(limits.max_enumeration))
        throw resource_error("count_H_enumerate: point count exceeds enumeration bound");
    std::vector<RingElement> reps = r.representatives(limits.max_enumeration);
    std::vector<int> sel;
    for (int i = 0; i < a.size(); ++i)
        if (subset_mask & (1u << i)) sel.push_back(i);
    std::vector<size_t> idx(a.space_rank(), 0);
    Int count = 0;
    while (true) {
        bool all_zero = true;
        for (int c : sel) {
            RingElement s = RingElement::zero(a.ring());
            for (int i = 0; i < a.space_rank(); ++i) s = s + reps[idx[i]] * a.column(c)[i];
            if (!r.is_zero(s)) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) ++count;
        int i = a.space_rank() - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < reps.size()) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return count;
}

Int count_H_elementary(const Arrangement& a, uint32_t subset_mask, const Int& q) {
    if (a.ring().degree() != 1)
        throw input_error("count_H_elementary: integer arrangements only");
    SnfResult snf = smith_normal_form(a.coefficient_matrix(subset_mask));
    int r = 0;
    Int out = 1;
    for (const Int& d : snf.divisors) {
        if (d == 0) continue;
        ++r;
        Int g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
        out *= g;
    }
    return out * int_pow(q, a.space_rank() - r);
}

Int characteristic_brute(const Arrangement& a, const Ideal& ideal, const Limits& limits) {
    ResidueRing r(ideal);
    Int total = int_pow(r.cardinality(), a.space_rank());
    if (total > to_int(limits.max_enumeration))
        throw resource_error("characteristic_brute: point count exceeds enumeration bound");
    std::vector<RingElement> reps = r.representatives(limits.max_enumeration);
    std::vector<size_t> idx(a.space_rank(), 0);
    Int count = 0;
    while (true) {
        bool off_every_hyperplane = true;
        for (int c = 0; c < a.size(); ++c) {
            RingElement s = RingElement::zero(a.ring());
            for (int i = 0; i < a.space_rank(); ++i) s = s + reps[idx[i]] * a.column(c)[i];
            if (r.is_zero(s)) {
                off_every_hyperplane = false;
                break;
            }
        }
        if (off_every_hyperplane) ++count;
        int i = a.space_rank() - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < reps.size()) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return count;
}

Int characteristic_by_counting(const Arrangement& a, const Ideal& ideal) {
    SubsetCounter counter(a);
    Int acc = 0;
    for (uint32_t mask = 0; mask <= a.full_mask(); ++mask) {
        Int term = counter.count(mask, ideal);
        acc += (popcount(mask) % 2) ? -term : term;
        if (a.size() == 0) break;
    }
    return acc;
}

Int SubsetCounter::count(uint32_t subset_mask, const Ideal& ideal) {
    auto key = std::make_pair(subset_mask, ideal);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    Int value;
    if (subset_mask == 0) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), ideal.norm().get_mpz_t(), arr_.space_rank());
        value = p;
    } else if (arr_.ring().degree() == 1) {
        auto it = z_divisors_.find(subset_mask);
        if (it == z_divisors_.end())
            it = z_divisors_
                     .emplace(subset_mask,
                              smith_normal_form(arr_.coefficient_matrix(subset_mask)).divisors)
                     .first;
        const Int q = ideal.norm();
        int r = 0;
        value = 1;
        for (const Int& d : it->second) {
            if (d == 0) continue;
            ++r;
            Int g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
            value *= g;
        }
        Int p;
        mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), arr_.space_rank() - r);
        value *= p;
    } else {
        auto it = matrices_.find(subset_mask);
        if (it == matrices_.end())
            it = matrices_.emplace(subset_mask, arr_.coefficient_matrix(subset_mask)).first;
        const int k = popcount(subset_mask);
        value = count_kernel(it->second, power_lattice(ideal.lattice(), k),
                             power_lattice(ideal.lattice(), arr_.space_rank()));
    }
    memo_.emplace(std::move(key), value);
    return value;
}

QuasiPolynomial characteristic_quasi_polynomial(const Arrangement& a, const Limits& limits) {
    QuasiPolynomial out{lcm_period(a, limits), {}};
    SubsetCounter counter(a);
    const int ell = a.space_rank();
    for (const Ideal& kappa : divisors(out.period, limits.max_divisor_norm)) {
        std::vector<std::pair<Int, Int>> samples;
        for (const Ideal& sample : sample_ideals(kappa, out.period, ell + 1)) {
            Int value = 0;
            for (uint32_t mask = 0; mask <= a.full_mask(); ++mask) {
                Int term = counter.count(mask, sample);
                value += (popcount(mask) % 2) ? -term : term;
                if (a.size() == 0) break;
            }
            samples.emplace_back(sample.norm(), value);
        }
        out.constituents.emplace(kappa, interpolate(samples, ell));
    }
    return out;
}

}  // namespace qch
