#pragma once

#include <set>
#include <vector>

#include "radix/fp_poly.hpp"
#include "radix/polynomial.hpp"

namespace radix {

namespace detail {

/// Degrees d in [1, n-1] that a factor could have given a mod-p factor pattern:
/// the proper subset sums of the pattern.
inline std::set<int> possible_factor_degrees(const CycleType& t) {
    std::set<int> sums{0};
    for (int part : t.parts) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + part);
        sums = std::move(next);
    }
    const int n = t.total();
    std::set<int> out;
    for (int s : sums)
        if (s > 0 && s < n) out.insert(s);
    return out;
}

/// Search for an integer quadratic factor u x^2 + v x + w of the primitive
/// integer polynomial z (degree 4 or 5, no rational roots). u runs over the
/// divisors of the leading coefficient, w over the divisors of the constant
/// term, and v is constrained by (u+v+w) | z(1) and (u-v+w) | z(-1), then
/// clipped to |v| <= 2^deg * (1 + max|coeff|).
inline bool has_quadratic_factor(const std::vector<Integer>& z) {
    const Polynomial f = from_integers(z);
    const int n = f.degree();
    Integer height = 0;
    for (const auto& c : z) height = std::max(height, abs_int(c));
    const Integer bound = (Integer(1) << n) * (height + 1);
    const Integer f1 = num(f(Rational(1)));
    const Integer fm1 = num(f(Rational(-1)));
    if (f1 == 0 || fm1 == 0 || z.front() == 0) return true;  // rational root at 1, -1 or 0

    const auto lead_divs = divisors(z.back());
    const auto const_divs = divisors(z.front());
    const auto f1_divs = divisors(f1);
    for (const auto& u : lead_divs) {
        for (const auto& wa : const_divs) {
            for (int ws : {1, -1}) {
                const Integer w = wa * ws;
                for (const auto& da : f1_divs) {
                    for (int ds : {1, -1}) {
                        const Integer v = da * ds - u - w;
                        if (abs_int(v) > bound) continue;
                        const Integer at_m1 = u - v + w;
                        if (at_m1 == 0 || fm1 % at_m1 != 0) continue;
                        const Polynomial q({Rational(w), Rational(v), Rational(u)});
                        if (divmod(f, q).second.is_zero()) return true;
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace detail

/// Irreducibility over Q for degrees 1..5.
inline bool is_irreducible_Q(const Polynomial& f) {
    const int n = f.degree();
    if (n < 1 || n > 5) throw PreconditionError("is_irreducible_Q: degree must be in [1, 5]");
    if (n == 1) return true;
    if (!is_squarefree(f)) return false;
    if (!rational_roots(f).empty()) return false;
    if (n <= 3) return true;

    // Mod-p evidence: any factorization over Q must be compatible with every
    // factor pattern mod p. A linear factor is already excluded, and so is its
    // complement of degree n-1.
    std::set<int> candidates;
    for (int d = 2; d <= n - 2; ++d) candidates.insert(d);
    for (auto p : usable_primes(f, 30)) {
        const CycleType t = factor_degree_pattern(reduce_mod_p(f, p));
        if (t.parts.size() == 1) return true;
        const auto allowed = detail::possible_factor_degrees(t);
        std::set<int> kept;
        for (int d : candidates)
            if (allowed.count(d)) kept.insert(d);
        candidates = std::move(kept);
        if (candidates.empty()) return true;
    }

    // With no linear factor, a reducible quartic or quintic has a quadratic factor.
    return !detail::has_quadratic_factor(integer_primitive(f));
}

}  // namespace radix
