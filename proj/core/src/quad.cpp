#include "diogon/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace diogon {

QuadScalar::QuadScalar(const Rational& rat, const Rational& coeff, const Int& radicand)
    : rat_(rat), coeff_(coeff), d_(radicand) {
    if (d_ < 0) throw std::domain_error("QuadScalar: negative radicand");
    if (d_ == 0) {
        coeff_ = 0;
        d_ = 1;
    }
    if (coeff_ == 0) {
        d_ = 1;
        return;
    }
    if (d_ > 1) {
        auto [sf, f] = squarefree_decompose(d_);
        d_ = sf;
        if (f != 1) coeff_ *= Rational(f);
    }
    if (d_ == 1) {
        rat_ += coeff_;
        coeff_ = 0;
    }
}

const Rational& QuadScalar::as_rational() const {
    if (!is_rational())
        throw std::domain_error("QuadScalar::as_rational: value has a surd part");
    return rat_;
}

Int QuadScalar::common_radicand(const QuadScalar& a, const QuadScalar& b) {
    if (a.coeff_ == 0) return b.d_;
    if (b.coeff_ == 0) return a.d_;
    if (a.d_ == b.d_) return a.d_;
    throw std::domain_error("QuadScalar: mismatched radicands");
}

int QuadScalar::sign() const {
    int sr = sign_of(rat_);
    int sc = sign_of(coeff_);
    if (sc == 0) return sr;
    if (sr == 0) return sc;
    if (sr == sc) return sr;
    // Opposite signs: |rat| vs |coeff|*sqrt(D) decided by squares.
    Rational lhs = rat_ * rat_;
    Rational rhs = coeff_ * coeff_ * Rational(d_);
    if (lhs == rhs) return 0;  // unreachable for square-free D > 1
    return lhs > rhs ? sr : sc;
}

double QuadScalar::to_double() const {
    double v = rat_.convert_to<double>();
    if (coeff_ != 0)
        v += coeff_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
    return v;
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r;
    r.rat_ = -rat_;
    r.coeff_ = -coeff_;
    r.d_ = d_;
    return r;
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
    Int d = common_radicand(*this, o);
    QuadScalar r;
    r.rat_ = rat_ + o.rat_;
    r.coeff_ = coeff_ + o.coeff_;
    r.d_ = r.coeff_ == 0 ? Int(1) : d;
    return r;
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const { return *this + (-o); }

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    Int d = common_radicand(*this, o);
    QuadScalar r;
    // (p + q*sqrt(D)) * (p' + q'*sqrt(D)); the q*q' term only fires when both
    // surds are present, in which case d is their shared radicand.
    r.rat_ = rat_ * o.rat_ + coeff_ * o.coeff_ * Rational(d);
    r.coeff_ = rat_ * o.coeff_ + coeff_ * o.rat_;
    r.d_ = r.coeff_ == 0 ? Int(1) : d;
    return r;
}

int sign_r_plus_s_sqrt(const QuadScalar& r, const QuadScalar& s, const QuadScalar& g) {
    int sg = g.sign();
    if (sg < 0) throw std::domain_error("sign_r_plus_s_sqrt: negative radicand");
    if (sg == 0 || s.sign() == 0) return r.sign();
    int sr = r.sign();
    int ss = s.sign();
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // r and s*sqrt(g) pull in opposite directions; square both sides.
    QuadScalar lhs = r * r;
    QuadScalar rhs = s * s * g;
    int c = (lhs - rhs).sign();
    if (c == 0) return 0;
    return c > 0 ? sr : ss;
}

int compare_sqrt_sums(const QuadScalar& a, const QuadScalar& b,
                      const QuadScalar& c, const QuadScalar& d) {
    if (a.sign() < 0 || b.sign() < 0 || c.sign() < 0 || d.sign() < 0)
        throw std::domain_error("compare_sqrt_sums: negative operand");
    // sqrt(a)+sqrt(b) vs sqrt(c)+sqrt(d), both non-negative, so compare
    // squares: T := (a+b-c-d) + 2*sqrt(ab) against 2*sqrt(cd).
    QuadScalar e = a + b - c - d;
    QuadScalar g1 = a * b;
    QuadScalar g2 = c * d;
    int t = sign_r_plus_s_sqrt(e, QuadScalar(2), g1);
    if (t < 0) return -1;
    if (t == 0) return g2.sign() > 0 ? -1 : 0;
    // T > 0: compare T^2 = e^2 + 4*g1 + 4*e*sqrt(g1) against 4*g2.
    QuadScalar r = e * e + QuadScalar(4) * g1 - QuadScalar(4) * g2;
    return sign_r_plus_s_sqrt(r, QuadScalar(4) * e, g1);
}

QuadPoint::QuadPoint(QuadScalar x, QuadScalar y)
    : x_(std::move(x)), y_(std::move(y)) {
    d_ = QuadScalar::common_radicand(x_, y_);  // throws on a field mismatch
    if (x_.is_rational() && y_.is_rational()) d_ = 1;
}

QuadScalar distance_squared(const QuadPoint& p, const QuadPoint& q) {
    QuadScalar dx = p.x() - q.x();
    QuadScalar dy = p.y() - q.y();
    return dx * dx + dy * dy;
}

std::optional<Int> integer_distance(const QuadPoint& p, const QuadPoint& q) {
    QuadScalar ds = distance_squared(p, q);
    if (!ds.is_rational()) return std::nullopt;
    auto root = rational_sqrt(ds.as_rational());
    if (!root) return std::nullopt;
    if (den(*root) != 1) return std::nullopt;
    Int d = num(*root);
    if (d < 1) return std::nullopt;
    return d;
}

}  // namespace diogon
