#include "ring.hpp"

#include <algorithm>
#include <sstream>

namespace qch {

namespace {

bool squarefree(long d) {
    long n = d < 0 ? -d : d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

long mod4(long d) { return ((d % 4) + 4) % 4; }

}  // namespace

RingSpec RingSpec::quadratic(long d) {
    if (d == 0 || d == 1) throw input_error("quadratic ring: d must differ from 0 and 1");
    if (!squarefree(d)) throw input_error("quadratic ring: d must be squarefree");
    RingSpec s;
    s.kind = Kind::quadratic;
    s.d = d;
    return s;
}

bool RingSpec::half_trace_basis() const {
    return kind == Kind::quadratic && mod4(d) == 1;
}

Int RingSpec::omega_sq_c0() const {
    if (kind != Kind::quadratic) throw std::logic_error("omega over Z");
    return half_trace_basis() ? Int((d - 1) / 4) : Int(d);
}

Int RingSpec::omega_sq_c1() const {
    if (kind != Kind::quadratic) throw std::logic_error("omega over Z");
    return half_trace_basis() ? Int(1) : Int(0);
}

std::string RingSpec::str() const {
    if (kind == Kind::integers) return "Z";
    std::ostringstream os;
    if (half_trace_basis())
        os << "Z[(1+sqrt(" << d << "))/2]";
    else
        os << "Z[sqrt(" << d << ")]";
    return os.str();
}

RingElement::RingElement(const RingSpec& ring, Int a, Int b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
    if (ring_.kind == RingSpec::Kind::integers && b_ != 0)
        throw input_error("RingElement: omega coordinate over Z");
}

RingElement RingElement::from_coords(const RingSpec& ring, const std::vector<Int>& coords) {
    if (static_cast<int>(coords.size()) != ring.degree())
        throw input_error("RingElement: coordinate count mismatch");
    return ring.degree() == 1 ? RingElement(ring, coords[0]) : RingElement(ring, coords[0], coords[1]);
}

std::vector<Int> RingElement::coords() const {
    if (ring_.degree() == 1) return {a_};
    return {a_, b_};
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (ring_ != o.ring_) throw input_error("RingElement: ring mismatch");
    return RingElement(ring_, a_ + o.a_, b_ + o.b_);
}

RingElement RingElement::operator-(const RingElement& o) const {
    if (ring_ != o.ring_) throw input_error("RingElement: ring mismatch");
    return RingElement(ring_, a_ - o.a_, b_ - o.b_);
}

RingElement RingElement::operator-() const { return RingElement(ring_, -a_, -b_); }

RingElement RingElement::operator*(const RingElement& o) const {
    if (ring_ != o.ring_) throw input_error("RingElement: ring mismatch");
    if (ring_.degree() == 1) return RingElement(ring_, a_ * o.a_);
    // (a1 + b1 w)(a2 + b2 w) with w^2 = c0 + c1 w
    Int cross = b_ * o.b_;
    Int a = a_ * o.a_ + cross * ring_.omega_sq_c0();
    Int b = a_ * o.b_ + b_ * o.a_ + cross * ring_.omega_sq_c1();
    return RingElement(ring_, std::move(a), std::move(b));
}

bool RingElement::operator==(const RingElement& o) const {
    return ring_ == o.ring_ && a_ == o.a_ && b_ == o.b_;
}

bool RingElement::operator<(const RingElement& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
}

RingElement RingElement::times_omega() const {
    if (ring_.degree() == 1) throw std::logic_error("times_omega over Z");
    // (a + b w) w = b*c0 + (a + b*c1) w
    return RingElement(ring_, b_ * ring_.omega_sq_c0(), a_ + b_ * ring_.omega_sq_c1());
}

std::string RingElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (a_ != 0) os << a_.get_str();
    if (b_ != 0) {
        if (a_ != 0)
            os << (b_ > 0 ? "+" : "-");
        else if (b_ < 0)
            os << "-";
        Int ab = abs(b_);
        if (ab != 1) os << ab.get_str() << "*";
        os << "w";
    }
    return os.str();
}

IntMatrix multiplication_matrix(const RingElement& g) {
    const RingSpec& ring = g.ring();
    if (ring.degree() == 1) {
        IntMatrix m(1, 1);
        m.at(0, 0) = g.a();
        return m;
    }
    IntMatrix m(2, 2);
    RingElement one_g = g;                       // 1 * g
    RingElement omega_g = g.times_omega();       // w * g
    m.at(0, 0) = one_g.a();
    m.at(0, 1) = one_g.b();
    m.at(1, 0) = omega_g.a();
    m.at(1, 1) = omega_g.b();
    return m;
}

Ideal Ideal::from_generators(const RingSpec& ring, const std::vector<RingElement>& gens) {
    std::vector<std::vector<Int>> rows;
    for (const RingElement& g : gens) {
        if (g.ring() != ring) throw input_error("Ideal: generator from a different ring");
        if (g.is_zero()) continue;
        rows.push_back(g.coords());
        if (ring.degree() == 2) rows.push_back(g.times_omega().coords());
    }
    if (rows.empty()) throw input_error("Ideal: zero ideal");
    return from_lattice(ring, Lattice::from_rows(ring.degree(), rows));
}

Ideal Ideal::from_lattice(const RingSpec& ring, const Lattice& lattice) {
    if (lattice.ambient() != ring.degree()) throw input_error("Ideal: lattice ambient mismatch");
    if (!lattice.full_rank()) throw input_error("Ideal: zero ideal");
    if (ring.degree() == 2) {
        for (int i = 0; i < lattice.rank(); ++i) {
            RingElement b = RingElement::from_coords(ring, lattice.basis().row(i));
            if (!lattice.contains(b.times_omega().coords()))
                throw input_error("Ideal: lattice not closed under multiplication by w");
        }
    }
    Ideal a;
    a.ring_ = ring;
    a.lat_ = lattice;
    return a;
}

Ideal Ideal::unit(const RingSpec& ring) {
    return from_lattice(ring, Lattice::full(ring.degree()));
}

Ideal Ideal::principal(const RingElement& g) { return from_generators(g.ring(), {g}); }

Ideal Ideal::principal_integer(const RingSpec& ring, const Int& m) {
    return principal(RingElement::integer(ring, m));
}

bool Ideal::is_unit() const { return norm() == 1; }

Ideal Ideal::sum(const Ideal& o) const {
    if (ring_ != o.ring_) throw input_error("Ideal::sum: ring mismatch");
    return from_lattice(ring_, lat_.sum(o.lat_));
}

Ideal Ideal::product(const Ideal& o) const {
    if (ring_ != o.ring_) throw input_error("Ideal::product: ring mismatch");
    std::vector<std::vector<Int>> rows;
    for (const RingElement& x : basis_elements())
        for (const RingElement& y : o.basis_elements()) rows.push_back((x * y).coords());
    return from_lattice(ring_, Lattice::from_rows(ring_.degree(), rows));
}

Ideal Ideal::intersect(const Ideal& o) const {
    if (ring_ != o.ring_) throw input_error("Ideal::intersect: ring mismatch");
    return from_lattice(ring_, lat_.intersect(o.lat_));
}

bool Ideal::divides(const Ideal& a) const {
    if (ring_ != a.ring_) throw input_error("Ideal::divides: ring mismatch");
    return lat_.contains(a.lat_);
}

bool Ideal::contains(const RingElement& x) const {
    if (x.ring() != ring_) throw input_error("Ideal::contains: ring mismatch");
    return lat_.contains(x.coords());
}

std::vector<RingElement> Ideal::basis_elements() const {
    std::vector<RingElement> out;
    for (int i = 0; i < lat_.rank(); ++i)
        out.push_back(RingElement::from_coords(ring_, lat_.basis().row(i)));
    return out;
}

bool Ideal::operator<(const Ideal& o) const {
    Int n1 = norm(), n2 = o.norm();
    if (n1 != n2) return n1 < n2;
    for (int i = 0; i < lat_.rank(); ++i)
        for (int j = 0; j < lat_.ambient(); ++j) {
            const Int &a = lat_.basis().at(i, j), &b = o.lat_.basis().at(i, j);
            if (a != b) return a < b;
        }
    return false;
}

std::string Ideal::str() const {
    std::ostringstream os;
    os << "<";
    bool first = true;
    for (const RingElement& b : basis_elements()) {
        if (!first) os << ", ";
        os << b.str();
        first = false;
    }
    os << ">";
    return os.str();
}

Ideal ideal_lcm(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw input_error("ideal_lcm: empty list");
    Ideal acc = ideals.front();
    for (size_t i = 1; i < ideals.size(); ++i) acc = acc.intersect(ideals[i]);
    return acc;
}

namespace {

std::vector<long long> positive_divisors(long long n) {
    std::vector<long long> out;
    for (long long p = 1; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        if (p != n / p) out.push_back(n / p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All omega-stable full-rank HNF superlattices of `floor` (or of nothing)
// whose index in Z^e divides / is at most the given bound.
std::vector<Ideal> enumerate_ideals(const RingSpec& ring, long long bound, const Lattice* floor,
                                    bool index_divides) {
    std::vector<Ideal> out;
    std::vector<long long> ps;
    if (index_divides)
        ps = positive_divisors(bound);
    else
        for (long long p = 1; p <= bound; ++p) ps.push_back(p);
    if (ring.degree() == 1) {
        for (long long p : ps) {
            Lattice cand = Lattice::from_rows(1, {{to_int(p)}});
            if (floor && !cand.contains(*floor)) continue;
            out.push_back(Ideal::from_lattice(ring, cand));
        }
        return out;
    }
    for (long long p : ps) {
        for (long long r = 1; p * r <= bound; ++r) {
            if (index_divides && bound % (p * r)) continue;
            for (long long b = 0; b < r; ++b) {
                Lattice cand = Lattice::from_rows(2, {{to_int(p), to_int(b)}, {Int(0), to_int(r)}});
                if (floor && !cand.contains(*floor)) continue;
                bool stable = true;
                for (int i = 0; i < 2 && stable; ++i) {
                    RingElement e = RingElement::from_coords(ring, cand.basis().row(i));
                    stable = cand.contains(e.times_omega().coords());
                }
                if (!stable) continue;
                out.push_back(Ideal::from_lattice(ring, cand));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Ideal> divisors(const Ideal& a, long long norm_bound) {
    Int n = a.norm();
    if (n > to_int(norm_bound)) throw resource_error("divisors: ideal norm exceeds enumeration bound");
    long long nn = n.get_si();
    return enumerate_ideals(a.ring(), nn, &a.lattice(), /*index_divides=*/true);
}

std::vector<Ideal> sample_ideals(const Ideal& kappa, const Ideal& rho, int count) {
    if (kappa.ring() != rho.ring()) throw input_error("sample_ideals: ring mismatch");
    if (!kappa.divides(rho)) throw input_error("sample_ideals: kappa does not divide rho");
    Int nrho = rho.norm();
    std::vector<Ideal> out;
    for (Int m = 1; static_cast<int>(out.size()) < count; ++m) {
        Int g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), nrho.get_mpz_t());
        if (g != 1) continue;
        Ideal sample = kappa.product(Ideal::principal_integer(kappa.ring(), m));
        if (sample.sum(rho) != kappa)
            throw std::logic_error("sample_ideals: generated ideal has the wrong class");
        out.push_back(std::move(sample));
    }
    return out;
}

std::vector<Ideal> ideals_with_norm_up_to(const RingSpec& ring, long long bound) {
    return enumerate_ideals(ring, bound, nullptr, /*index_divides=*/false);
}

ResidueRing::ResidueRing(const Ideal& a) : ideal_(a), card_(a.norm()) {}

RingElement ResidueRing::reduce(const RingElement& x) const {
    if (x.ring() != ideal_.ring()) throw input_error("ResidueRing::reduce: ring mismatch");
    return RingElement::from_coords(ideal_.ring(), ideal_.lattice().reduce(x.coords()));
}

std::vector<RingElement> ResidueRing::representatives(long long limit) const {
    if (card_ > to_int(limit)) throw resource_error("ResidueRing: cardinality exceeds enumeration bound");
    const RingSpec& ring = ideal_.ring();
    std::vector<RingElement> out;
    if (ring.degree() == 1) {
        for (Int a = 0; a < card_; ++a) out.push_back(RingElement::integer(ring, a));
        return out;
    }
    const IntMatrix& b = ideal_.lattice().basis();
    // Box representatives for the HNF lattice [[p, q], [0, r]].
    for (Int a = 0; a < b.at(0, 0); ++a)
        for (Int c = 0; c < b.at(1, 1); ++c) out.push_back(RingElement(ring, a, c));
    return out;
}

}  // namespace qch
