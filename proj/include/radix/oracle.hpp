#pragma once

// Independent numeric ground truth: Durand-Kerner simultaneous iteration and a
// verifier that matches radical roots against it. Shares only the big-float
// primitives with the radical evaluator.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "radix/errors.hpp"
#include "radix/numeric.hpp"
#include "radix/polynomial.hpp"
#include "radix/radical.hpp"

namespace radix {

struct OracleResult {
    std::vector<ComplexApprox> roots;
    bool converged = false;
    int iterations = 0;
};

namespace detail {

inline Complex horner(const std::vector<Complex>& c, const Complex& z) {
    Complex acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace detail

inline constexpr int kDurandKernerMaxIterations = 10000;

/// All complex roots of a squarefree f. Working precision is twice the
/// requested precision; iteration starts on the Cauchy-bound circle with a
/// fixed angular offset and stops once every correction is below
/// 2^-precision_bits (relative to max(1, |z|)) or after the iteration cap.
inline OracleResult durand_kerner(const Polynomial& f, unsigned precision_bits) {
    if (f.degree() < 1) throw PreconditionError("durand_kerner: degree must be at least 1");
    const auto n = static_cast<std::size_t>(f.degree());
    const unsigned work = 2 * precision_bits;
    PrecisionScope scope(work);

    std::vector<Complex> c;
    const Polynomial g = f.monic();
    for (const auto& q : g.coeffs()) c.emplace_back(q);

    BigFloat radius = 0;
    for (std::size_t i = 0; i < n; ++i) radius = boost::multiprecision::max(radius, abs(c[i]));
    radius += 1;

    std::vector<Complex> z(n);
    const BigFloat two_pi = 2 * pi();
    for (std::size_t k = 0; k < n; ++k) {
        Complex u = expi(BigFloat(two_pi * k / n + BigFloat("0.4")));
        z[k] = {radius * u.re, radius * u.im};
    }

    const BigFloat target = pow2(-static_cast<long>(precision_bits));
    OracleResult out;
    std::vector<BigFloat> last(n, BigFloat(0));
    for (int it = 1; it <= kDurandKernerMaxIterations; ++it) {
        BigFloat worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex denom(BigFloat(1), BigFloat(0));
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) denom = denom * (z[k] - z[j]);
            if (denom.re == 0 && denom.im == 0) continue;
            Complex step = detail::horner(c, z[k]) / denom;
            z[k] = z[k] - step;
            last[k] = abs(step);
            worst = boost::multiprecision::max(worst, BigFloat(last[k] / boost::multiprecision::max(BigFloat(1), abs(z[k]))));
        }
        out.iterations = it;
        if (worst < target) {
            out.converged = true;
            break;
        }
    }

    const BigFloat floor = pow2(-static_cast<long>(work) + 4) * static_cast<long>(n);
    for (std::size_t k = 0; k < n; ++k) {
        ComplexApprox a;
        a.real = z[k].re;
        a.imag = z[k].im;
        a.error_radius = 8 * last[k] + floor * boost::multiprecision::max(BigFloat(1), abs(z[k]));
        a.precision_bits = precision_bits;
        out.roots.push_back(std::move(a));
    }
    return out;
}

/// Oracle roots of any nonzero f with multiplicity: the squarefree part is
/// handed to Durand-Kerner and the repeated factor is processed recursively.
inline OracleResult oracle_roots(const Polynomial& f, unsigned precision_bits) {
    const auto parts = squarefree_part(f);
    OracleResult out = durand_kerner(parts.squarefree, precision_bits);
    if (parts.repeated_factor.degree() > 0) {
        OracleResult rep = oracle_roots(parts.repeated_factor, precision_bits);
        out.converged = out.converged && rep.converged;
        out.iterations += rep.iterations;
        out.roots.insert(out.roots.end(), rep.roots.begin(), rep.roots.end());
    }
    return out;
}

struct RootPairing {
    std::size_t radical_index;
    std::size_t oracle_index;
    BigFloat distance;
};

struct VerificationReport {
    BigFloat max_residual{0};
    std::vector<RootPairing> pairing;
    bool all_matched = false;
    unsigned precision_bits = 0;
};

/// |f(z)| in complex arithmetic at the current precision.
inline BigFloat residual(const Polynomial& f, const Complex& z) {
    std::vector<Complex> c;
    for (const auto& q : f.coeffs()) c.emplace_back(q);
    return abs(detail::horner(c, z));
}

/// Greedy minimal-distance perfect matching of two equally long point sets.
inline std::vector<RootPairing> greedy_matching(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    struct Candidate {
        BigFloat d;
        std::size_t i, j;
    };
    std::vector<Candidate> all;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) all.push_back({abs(a[i] - b[j]), i, j});
    std::stable_sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) { return x.d < y.d; });
    std::vector<bool> used_a(a.size()), used_b(b.size());
    std::vector<RootPairing> out;
    for (const auto& cand : all) {
        if (used_a[cand.i] || used_b[cand.j]) continue;
        used_a[cand.i] = used_b[cand.j] = true;
        out.push_back({cand.i, cand.j, cand.d});
    }
    std::sort(out.begin(), out.end(), [](const RootPairing& x, const RootPairing& y) { return x.radical_index < y.radical_index; });
    return out;
}

/// Evaluates each radical root, computes residuals and matches the values
/// against the oracle. all_matched requires every pair distance to be within
/// tolerance plus both error radii.
inline VerificationReport verify_solution_set(const std::vector<Expr>& roots, const Polynomial& f, unsigned precision_bits,
                                              const BigFloat& tolerance) {
    if (f.degree() < 1 || roots.size() != static_cast<std::size_t>(f.degree()))
        throw PreconditionError("verify_solution_set: number of roots must equal the degree");
    std::vector<ComplexApprox> values;
    for (const auto& r : roots) values.push_back(eval_numeric(r, precision_bits));
    OracleResult oracle = oracle_roots(f, precision_bits);

    PrecisionScope scope(4 * precision_bits);
    VerificationReport rep;
    rep.precision_bits = precision_bits;
    std::vector<Complex> a, b;
    for (const auto& v : values) {
        a.push_back(v.value());
        rep.max_residual = boost::multiprecision::max(rep.max_residual, residual(f, v.value()));
    }
    for (const auto& o : oracle.roots) b.push_back(o.value());
    rep.pairing = greedy_matching(a, b);
    rep.all_matched = oracle.converged && rep.pairing.size() == roots.size();
    for (const auto& p : rep.pairing) {
        const BigFloat allowed = tolerance + values[p.radical_index].error_radius + oracle.roots[p.oracle_index].error_radius;
        if (p.distance > allowed) rep.all_matched = false;
    }
    return rep;
}

}  // namespace radix
