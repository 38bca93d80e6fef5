#include "diogon/rational.hpp"

#include <stdexcept>

namespace diogon {

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return Int(0);
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) throw std::domain_error("rational_sqrt: negative input");
    auto rn = is_perfect_square(num(q));
    if (!rn) return std::nullopt;
    auto rd = is_perfect_square(den(q));
    if (!rd) return std::nullopt;
    // gcd(num, den) = 1 implies gcd of the roots is 1; already reduced.
    return Rational(*rn, *rd);
}

std::pair<Int, Int> squarefree_decompose(const Int& n, const Int& trial_bound) {
    if (n < 1) throw std::domain_error("squarefree_decompose: input must be >= 1");
    Int rest = n;
    Int square_free = 1;
    Int root = 1;  // invariant: n == square_free * root^2 * rest

    auto strip = [&](const Int& p) {
        unsigned exp = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exp;
        }
        for (unsigned i = 0; i + 1 < exp; i += 2) root *= p;
        if (exp & 1u) square_free *= p;
    };

    strip(Int(2));
    Int p = 3;
    bool bounded_out = false;
    while (p * p <= rest) {
        if (p > trial_bound) {
            bounded_out = true;
            break;
        }
        strip(p);
        p += 2;
    }

    if (!bounded_out) {
        // rest is 1 or a prime above the tested range.
        if (rest > 1) square_free *= rest;
        return {square_free, root};
    }

    // Cofactor with all prime factors > trial_bound.
    if (auto r = is_perfect_square(rest)) {
        root *= *r;
        return {square_free, root};
    }
    if (rest < trial_bound * trial_bound * trial_bound) {
        // At most two prime factors and not a square: square-free.
        square_free *= rest;
        return {square_free, root};
    }
    throw std::domain_error(
        "squarefree_decompose: cofactor exceeds the certified factorization range");
}

std::string to_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

Rational rational_from_string(std::string_view s) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("rational_from_string: malformed input '" +
                                    std::string(s) + "'");
    };
    if (s.empty()) return fail();

    auto parse_int = [&](std::string_view t, bool allow_sign) -> Int {
        if (t.empty()) fail();
        std::size_t i = 0;
        bool neg = false;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) fail();
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') fail();
        Int v{std::string(t.substr(i))};
        return neg ? -v : v;
    };

    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, true));
    Int n = parse_int(s.substr(0, slash), true);
    Int d = parse_int(s.substr(slash + 1), false);
    if (d == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(n, d);
}

}  // namespace diogon
