#pragma once

// Exact scalar layer: arbitrary-precision integers and rationals plus the
// square-detection helpers everything else leans on. Rationals are always
// kept in lowest terms with positive denominator; zero is 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace diogon {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Int& n) { return n.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

// Exact integer square root test. Returns r with r*r == n, absent if n is
// not a perfect square (negative inputs are never squares).
std::optional<Int> is_perfect_square(const Int& n);

// Exact rational square root: present iff numerator and denominator are both
// perfect squares. Throws std::domain_error on negative input.
std::optional<Rational> rational_sqrt(const Rational& q);

// Decomposes n >= 1 as n = s * f^2 with s square-free. Returns {s, f}.
// Trial division up to `trial_bound`, then a perfect-square fallback for the
// remaining cofactor m: m prime or semiprime (m < trial_bound^3) is
// square-free, m a perfect square folds into f. Anything larger throws
// rather than answering wrong; throws std::domain_error on n < 1 too.
std::pair<Int, Int> squarefree_decompose(const Int& n,
                                         const Int& trial_bound = Int(1000000));

// Canonical text form "num/den", always with the slash ("3/2", "-5/3", "0/1").
std::string to_string(const Rational& q);

// Strict inverse of to_string; also accepts a bare integer "n". Throws
// std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(std::string_view s);

}  // namespace diogon
