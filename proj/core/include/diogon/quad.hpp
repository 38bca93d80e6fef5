#pragma once

// Numbers of the form rat + coeff*sqrt(D) with D square-free, and points with
// such coordinates. Everything here is exact; sign and comparison never touch
// floating point.
//
// Canonical form invariants:
//   - D >= 1 and square-free; construction folds square factors into coeff.
//   - coeff == 0 forces D == 1, and D == 1 folds coeff into rat.
// Two values in canonical form are equal iff their fields are equal.
//
// Values from different fields Q(sqrt(D1)) != Q(sqrt(D2)) cannot be combined;
// arithmetic between them throws std::domain_error ("mismatched radicands")
// unless one operand is plain rational (D folds to the other side).

#include "diogon/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace diogon {

class QuadScalar {
  public:
    QuadScalar() : rat_(0), coeff_(0), d_(1) {}
    QuadScalar(const Rational& r) : rat_(r), coeff_(0), d_(1) {}
    QuadScalar(const Int& n) : rat_(n), coeff_(0), d_(1) {}
    QuadScalar(long long n) : rat_(n), coeff_(0), d_(1) {}

    // General constructor; radicand may be any integer >= 0 and is normalized
    // (square part into coeff, D in {0,1} folded away). Negative D throws.
    QuadScalar(const Rational& rat, const Rational& coeff, const Int& radicand);

    const Rational& rat_part() const { return rat_; }
    const Rational& surd_coeff() const { return coeff_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return coeff_ == 0; }
    // Exact rational value; throws std::domain_error if a surd is present.
    const Rational& as_rational() const;

    // Exact sign (-1, 0, +1) of rat + coeff*sqrt(D).
    int sign() const;

    double to_double() const;

    QuadScalar operator-() const;
    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;

    QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
    QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
    QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }

    bool operator==(const QuadScalar& o) const {
        return rat_ == o.rat_ && coeff_ == o.coeff_ && d_ == o.d_;
    }
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }

    // Order comparisons go through sign(*this - o) and therefore require the
    // operands to live in one field.
    bool operator<(const QuadScalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadScalar& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadScalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadScalar& o) const { return (*this - o).sign() >= 0; }

    // Shared radicand of two combinable values; throws on a true mismatch.
    static Int common_radicand(const QuadScalar& a, const QuadScalar& b);

  private:
    Rational rat_;
    Rational coeff_;
    Int d_;
};

// Sign of r + s*sqrt(g) for g >= 0, all three in one field. Exact; used as
// the inner step of the nested-radical comparison below.
int sign_r_plus_s_sqrt(const QuadScalar& r, const QuadScalar& s, const QuadScalar& g);

// Exact three-way comparison of sqrt(a) + sqrt(b) against sqrt(c) + sqrt(d)
// for non-negative combinable values: -1, 0, +1. Works by isolating one
// radical at a time and squaring, with every intermediate sign taken exactly.
int compare_sqrt_sums(const QuadScalar& a, const QuadScalar& b,
                      const QuadScalar& c, const QuadScalar& d);

class QuadPoint {
  public:
    QuadPoint() = default;
    // Coordinates must be combinable (same field, or one of them rational).
    QuadPoint(QuadScalar x, QuadScalar y);

    const QuadScalar& x() const { return x_; }
    const QuadScalar& y() const { return y_; }

    // Field of the point: the shared radicand of its coordinates (1 if both
    // coordinates are rational).
    const Int& radicand() const { return d_; }

    bool operator==(const QuadPoint& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const QuadPoint& o) const { return !(*this == o); }

  private:
    QuadScalar x_, y_;
    Int d_ = 1;
};

// |pq|^2, exact. Throws std::domain_error when the points live in
// incompatible fields.
QuadScalar distance_squared(const QuadPoint& p, const QuadPoint& q);

// The distance |pq| when it is a natural number >= 1; absent when the
// distance is irrational, a non-integer rational, or zero (coincident
// points -- distances in this library are naturals).
std::optional<Int> integer_distance(const QuadPoint& p, const QuadPoint& q);

}  // namespace diogon
