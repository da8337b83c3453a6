#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace qch {

// Base ring: Z, or the full ring of integers of Q(sqrt(d)) for squarefree d.
// The additive Z-basis is {1, w} with w = sqrt(d) when d != 1 (mod 4) and
// w = (1+sqrt(d))/2 when d == 1 (mod 4); only maximal orders are supported.
struct RingSpec {
    enum class Kind { integers, quadratic };
    Kind kind = Kind::integers;
    long d = 0;

    static RingSpec integers() { return RingSpec{}; }
    static RingSpec quadratic(long d);  // validates d squarefree, d != 0, 1

    int degree() const { return kind == Kind::integers ? 1 : 2; }
    bool half_trace_basis() const;  // w = (1+sqrt(d))/2
    // w^2 = c0 + c1*w
    Int omega_sq_c0() const;
    Int omega_sq_c1() const;

    bool operator==(const RingSpec& o) const { return kind == o.kind && d == o.d; }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }
    std::string str() const;
};

// a + b*w in additive coordinates; b is fixed at 0 over Z.
class RingElement {
public:
    RingElement() = default;
    RingElement(const RingSpec& ring, Int a, Int b = 0);
    static RingElement from_coords(const RingSpec& ring, const std::vector<Int>& coords);
    static RingElement integer(const RingSpec& ring, const Int& a) { return RingElement(ring, a); }
    static RingElement zero(const RingSpec& ring) { return RingElement(ring, 0); }
    static RingElement one(const RingSpec& ring) { return RingElement(ring, 1); }

    const RingSpec& ring() const { return ring_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    std::vector<Int> coords() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& o) const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }
    bool operator<(const RingElement& o) const;  // lexicographic on (a, b)

    RingElement times_omega() const;
    std::string str() const;  // "0", "-2", "w", "1-2*w", ...

private:
    RingSpec ring_;
    Int a_ = 0, b_ = 0;
};

// Right-multiplication matrix: coords(x * g) = coords(x) * matrix.
IntMatrix multiplication_matrix(const RingElement& g);

// Nonzero ideal, canonically represented by the Hermite form of its
// additive lattice in the {1, w} coordinates. Construction checks that the
// lattice is full rank and closed under multiplication by w.
class Ideal {
public:
    static Ideal from_generators(const RingSpec& ring, const std::vector<RingElement>& gens);
    static Ideal from_lattice(const RingSpec& ring, const Lattice& lattice);
    static Ideal unit(const RingSpec& ring);
    static Ideal principal(const RingElement& g);
    static Ideal principal_integer(const RingSpec& ring, const Int& m);

    const RingSpec& ring() const { return ring_; }
    const Lattice& lattice() const { return lat_; }
    Int norm() const { return lat_.covolume(); }
    bool is_unit() const;

    Ideal sum(const Ideal& o) const;        // ideal gcd
    Ideal product(const Ideal& o) const;
    Ideal intersect(const Ideal& o) const;  // ideal lcm
    bool divides(const Ideal& a) const;     // this | a, i.e. a subset of this
    bool contains(const RingElement& x) const;

    std::vector<RingElement> basis_elements() const;
    bool operator==(const Ideal& o) const { return ring_ == o.ring_ && lat_ == o.lat_; }
    bool operator!=(const Ideal& o) const { return !(*this == o); }
    bool operator<(const Ideal& o) const;  // (norm, basis) order, usable as map key
    std::string str() const;               // "<6>", "<1+w, 2*w>"

private:
    Ideal() = default;
    RingSpec ring_;
    Lattice lat_;
};

Ideal ideal_lcm(const std::vector<Ideal>& ideals);  // throws input_error on empty list

// All ideals containing a, including the unit ideal and a itself, sorted by
// (norm, basis). Enforces the divisor-norm resource bound.
std::vector<Ideal> divisors(const Ideal& a, long long norm_bound = 1'000'000);

// Ideals kappa * <m> for the `count` smallest positive m coprime to N(rho);
// each satisfies (sample + rho) == kappa and the norms are pairwise distinct.
std::vector<Ideal> sample_ideals(const Ideal& kappa, const Ideal& rho, int count);

// Every ideal of norm <= bound, sorted by (norm, basis).
std::vector<Ideal> ideals_with_norm_up_to(const RingSpec& ring, long long bound);

// The finite ring O/a with canonical boxed representatives.
class ResidueRing {
public:
    explicit ResidueRing(const Ideal& a);

    const Ideal& ideal() const { return ideal_; }
    const Int& cardinality() const { return card_; }

    RingElement reduce(const RingElement& x) const;
    bool is_zero(const RingElement& x) const { return reduce(x).is_zero(); }
    RingElement add(const RingElement& x, const RingElement& y) const { return reduce(x + y); }
    RingElement mul(const RingElement& x, const RingElement& y) const { return reduce(x * y); }
    RingElement neg(const RingElement& x) const { return reduce(-x); }

    // All representatives in a fixed lexicographic order; guarded by limit.
    std::vector<RingElement> representatives(long long limit = 10'000'000) const;

private:
    Ideal ideal_;
    Int card_;
};

}  // namespace qch
