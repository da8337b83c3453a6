#include "lattice.hpp"

#include <stdexcept>

namespace qch {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Lattice Lattice::from_rows(int ambient, const IntMatrix& rows) {
    if (rows.cols() != ambient && rows.rows() != 0)
        throw std::invalid_argument("Lattice: generator width does not match ambient rank");
    Lattice l;
    l.ambient_ = ambient;
    IntMatrix h = hermite_normal_form(rows).h;
    int r = 0;
    std::vector<int> pivots;
    for (int i = 0; i < h.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < ambient; ++j)
            if (h.at(i, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) break;  // zero rows trail in HNF
        pivots.push_back(p);
        ++r;
    }
    IntMatrix basis(r, ambient);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < ambient; ++j) basis.at(i, j) = h.at(i, j);
    l.basis_ = basis;
    l.pivots_ = pivots;
    return l;
}

Lattice Lattice::from_rows(int ambient, const std::vector<std::vector<Int>>& rows) {
    return from_rows(ambient, IntMatrix::from_rows(rows, ambient));
}

Lattice Lattice::full(int ambient) { return from_rows(ambient, IntMatrix::identity(ambient)); }

bool Lattice::contains(std::vector<Int> v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("Lattice::contains: dimension mismatch");
    for (int i = 0; i < rank(); ++i) {
        const int p = pivots_[i];
        if (v[p] == 0) continue;
        if (v[p] % basis_.at(i, p) != 0) return false;
        Int q = v[p] / basis_.at(i, p);
        for (int j = p; j < ambient_; ++j) v[j] -= q * basis_.at(i, j);
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

bool Lattice::contains(const Lattice& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("Lattice::contains: ambient mismatch");
    for (int i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::vector<Int> Lattice::reduce(std::vector<Int> v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("Lattice::reduce: dimension mismatch");
    for (int i = 0; i < rank(); ++i) {
        const int p = pivots_[i];
        Int q = floor_div(v[p], basis_.at(i, p));
        if (q == 0) continue;
        for (int j = p; j < ambient_; ++j) v[j] -= q * basis_.at(i, j);
    }
    return v;
}

Lattice Lattice::sum(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Lattice::sum: ambient mismatch");
    IntMatrix stacked(rank() + other.rank(), ambient_);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
    for (int i = 0; i < other.rank(); ++i)
        for (int j = 0; j < ambient_; ++j) stacked.at(rank() + i, j) = other.basis_.at(i, j);
    return from_rows(ambient_, stacked);
}

Lattice Lattice::intersect(const Lattice& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("Lattice::intersect: ambient mismatch");
    const int r1 = rank(), r2 = other.rank();
    IntMatrix stacked(r1 + r2, ambient_);
    for (int i = 0; i < r1; ++i)
        for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
    for (int i = 0; i < r2; ++i)
        for (int j = 0; j < ambient_; ++j) stacked.at(r1 + i, j) = -other.basis_.at(i, j);
    Lattice ker = kernel_lattice(stacked);
    // (y, z) in the kernel means y*B1 = z*B2; project to y*B1.
    IntMatrix gens(ker.rank(), ambient_);
    for (int i = 0; i < ker.rank(); ++i)
        for (int j = 0; j < ambient_; ++j) {
            Int s = 0;
            for (int k = 0; k < r1; ++k) s += ker.basis().at(i, k) * basis_.at(k, j);
            gens.at(i, j) = s;
        }
    return from_rows(ambient_, gens);
}

Lattice Lattice::scaled(const Int& k) const {
    if (k == 0) throw std::invalid_argument("Lattice::scaled: zero factor");
    IntMatrix b = basis_;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b.at(i, j) *= k;
    return from_rows(ambient_, b);
}

Int Lattice::covolume() const {
    if (!full_rank()) throw std::invalid_argument("Lattice::covolume: lattice not full rank");
    Int det = 1;
    for (int i = 0; i < rank(); ++i) det *= basis_.at(i, pivots_[i]);
    return det;
}

Lattice kernel_lattice(const IntMatrix& m) {
    HnfResult hr = hermite_normal_form(m);
    std::vector<std::vector<Int>> gens;
    for (int i = 0; i < hr.h.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < hr.h.cols(); ++j)
            if (hr.h.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) gens.push_back(hr.u.row(i));
    }
    return Lattice::from_rows(m.rows(), IntMatrix::from_rows(gens, m.rows()));
}

Lattice preimage_lattice(const IntMatrix& m, const Lattice& target) {
    if (target.ambient() != m.cols())
        throw std::invalid_argument("preimage_lattice: target ambient mismatch");
    const int a = m.rows(), s = target.rank();
    IntMatrix stacked(a + s, m.cols());
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < m.cols(); ++j) stacked.at(i, j) = m.at(i, j);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < m.cols(); ++j) stacked.at(a + i, j) = target.basis().at(i, j);
    Lattice ker = kernel_lattice(stacked);
    IntMatrix gens(ker.rank(), a);
    for (int i = 0; i < ker.rank(); ++i)
        for (int j = 0; j < a; ++j) gens.at(i, j) = ker.basis().at(i, j);
    return Lattice::from_rows(a, gens);
}

Lattice saturation(const Lattice& l) {
    if (l.rank() == 0) return l;
    SnfResult snf = smith_normal_form(l.basis());
    int s = 0;
    for (const Int& d : snf.divisors)
        if (d != 0) ++s;
    IntMatrix gens(s, l.ambient());
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < l.ambient(); ++j) gens.at(i, j) = snf.v_inv.at(i, j);
    return Lattice::from_rows(l.ambient(), gens);
}

Int lattice_index(const Lattice& sup, const Lattice& sub) {
    if (sup.ambient() != sub.ambient())
        throw std::invalid_argument("lattice_index: ambient mismatch");
    if (!sup.full_rank() || !sub.full_rank())
        throw std::invalid_argument("lattice_index: lattices must be full rank");
    Int a = sub.covolume(), b = sup.covolume();
    if (a % b != 0) throw std::logic_error("lattice_index: covolumes not nested");
    return a / b;
}

Int count_kernel(const IntMatrix& m, const Lattice& target, const Lattice& domain) {
    if (domain.ambient() != m.rows())
        throw std::invalid_argument("count_kernel: domain ambient mismatch");
    if (!domain.full_rank())
        throw std::invalid_argument("count_kernel: domain quotient is infinite");
    Lattice pre = preimage_lattice(m, target);
    if (!pre.contains(domain))
        throw std::invalid_argument("count_kernel: domain relations do not map into target");
    return lattice_index(pre, domain);
}

std::vector<std::vector<Int>> quotient_representatives(const Lattice& sup, const Lattice& sub,
                                                       long long limit) {
    if (sup.ambient() != sub.ambient())
        throw std::invalid_argument("quotient_representatives: ambient mismatch");
    if (sup.rank() != sub.rank())
        throw std::invalid_argument("quotient_representatives: infinite quotient");
    const int r = sup.rank();
    // Express each sub basis row in the sup basis (echelon back-substitution).
    IntMatrix x(r, r);
    for (int i = 0; i < r; ++i) {
        std::vector<Int> v = sub.basis().row(i);
        for (int k = 0; k < r; ++k) {
            const int p = sup.pivot_columns()[k];
            if (v[p] % sup.basis().at(k, p) != 0)
                throw std::invalid_argument("quotient_representatives: sub not contained in sup");
            Int q = v[p] / sup.basis().at(k, p);
            x.at(i, k) = q;
            for (int j = 0; j < sup.ambient(); ++j) v[j] -= q * sup.basis().at(k, j);
        }
        for (const Int& c : v)
            if (c != 0)
                throw std::invalid_argument("quotient_representatives: sub not contained in sup");
    }
    SnfResult snf = smith_normal_form(x);
    Int total = 1;
    for (const Int& d : snf.divisors) {
        if (d == 0) throw std::invalid_argument("quotient_representatives: infinite quotient");
        total *= d;
    }
    if (total > to_int(limit)) throw resource_error("quotient_representatives: quotient order exceeds limit");

    // Generators of the cyclic factors, mapped back to ambient coordinates.
    std::vector<std::vector<Int>> gens(r, std::vector<Int>(sup.ambient(), Int(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < sup.ambient(); ++j) {
            Int s = 0;
            for (int k = 0; k < r; ++k) s += snf.v_inv.at(i, k) * sup.basis().at(k, j);
            gens[i][j] = s;
        }

    std::vector<std::vector<Int>> reps;
    reps.reserve(total.get_ui());
    std::vector<Int> counter(r, Int(0));
    while (true) {
        std::vector<Int> v(sup.ambient(), Int(0));
        for (int i = 0; i < r; ++i) {
            if (counter[i] == 0) continue;
            for (int j = 0; j < sup.ambient(); ++j) v[j] += counter[i] * gens[i][j];
        }
        reps.push_back(std::move(v));
        int i = r - 1;
        for (; i >= 0; --i) {
            counter[i] += 1;
            if (counter[i] < snf.divisors[i]) break;
            counter[i] = 0;
        }
        if (i < 0) break;
    }
    return reps;
}

Lattice power_lattice(const Lattice& base, int copies) {
    const int e = base.ambient();
    IntMatrix gens(base.rank() * copies, e * copies);
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < base.rank(); ++i)
            for (int j = 0; j < e; ++j)
                gens.at(c * base.rank() + i, c * e + j) = base.basis().at(i, j);
    return Lattice::from_rows(e * copies, gens);
}

}  // namespace qch
