#pragma once

// Exact scalars. Integers and rationals are GMP-backed; mpq keeps every value
// in canonical form (positive denominator, coprime parts, zero as 0/1).

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace radix {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

inline std::string to_string(const Integer& z) { return z.str(); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rational make_rational(const Integer& n, const Integer& d) { return Rational(n, d); }

/// Exact k-th root of a nonnegative integer, if it exists.
inline std::optional<Integer> exact_root(const Integer& n, unsigned k) {
    if (n.sign() < 0 || k == 0) return std::nullopt;
    Integer r;
    if (mpz_root(r.backend().data(), n.backend().data(), k) == 0) return std::nullopt;
    return r;
}

/// Exact k-th root of a nonnegative rational, if it exists.
inline std::optional<Rational> exact_root(const Rational& q, unsigned k) {
    if (q.sign() < 0) return std::nullopt;
    auto n = exact_root(num(q), k);
    if (!n) return std::nullopt;
    auto d = exact_root(den(q), k);
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

inline Integer abs_int(const Integer& z) { return z.sign() < 0 ? Integer(-z) : z; }

/// Positive divisors of |n| in ascending order; n must be nonzero.
/// Trial division, which is fine for the coefficient sizes this library sees.
inline std::vector<Integer> divisors(const Integer& n) {
    Integer m = abs_int(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (m > 1) factors.emplace_back(m, 1);

    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace radix
