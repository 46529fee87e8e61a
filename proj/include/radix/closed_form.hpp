#pragma once

// Exact radical solutions for degrees 1 through 4.
//
// Functions taking a Depressed* value return roots of the depressed
// polynomial (in y); functions taking a Polynomial return roots of that
// polynomial (in x = y - shift).

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radix/errors.hpp"
#include "radix/polynomial.hpp"
#include "radix/radical.hpp"

namespace radix {

enum class Method { Linear, Quadratic, Cardano, Ferrari, Euler, Biquadratic };
enum class RootClass { FourReal, TwoRealTwoComplex, TwoConjugatePairs };
enum class MethodPreference { Auto, Ferrari, Euler };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Linear: return "linear";
        case Method::Quadratic: return "quadratic";
        case Method::Cardano: return "cardano";
        case Method::Ferrari: return "ferrari";
        case Method::Euler: return "euler";
        case Method::Biquadratic: return "biquadratic";
    }
    return "?";
}

inline std::string to_string(RootClass c) {
    switch (c) {
        case RootClass::FourReal: return "four_real";
        case RootClass::TwoRealTwoComplex: return "two_real_two_complex";
        case RootClass::TwoConjugatePairs: return "two_conjugate_pairs";
    }
    return "?";
}

struct SolutionSet {
    std::vector<Expr> roots;  ///< with multiplicity
    Method method = Method::Linear;
    bool casus_irreducibilis = false;  ///< cubic only
    std::optional<RootClass> classification;
    /// Resolvent cubic used by Ferrari or Euler, when one was built.
    std::optional<Polynomial> resolvent;
};

namespace detail {

/// Precision used for the solver's own numeric decisions (root ordering, sign tests).
inline constexpr unsigned kDecisionBits = 128;

inline std::vector<Expr> simplified(std::vector<Expr> v) {
    for (auto& e : v) e = simplify(e);
    return v;
}

/// Roots of the monic quadratic x^2 + B x + C: -B/2 + sqrt(B^2/4 - C) first,
/// then -B/2 - sqrt(B^2/4 - C).
inline std::pair<Expr, Expr> monic_quadratic_roots(const Expr& B, const Expr& C) {
    Expr half = Expr::mul({Expr::constant(Rational(-1, 2)), B});
    Expr disc = Expr::add({Expr::mul({Expr::constant(Rational(1, 4)), B, B}), Expr::neg(C)});
    Expr s = Expr::sqrt(simplify(disc));
    return {simplify(half + s), simplify(half - s)};
}

inline std::vector<Expr> shifted(const std::vector<Expr>& roots, const Rational& shift) {
    if (shift == 0) return roots;
    std::vector<Expr> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.push_back(simplify(r + Expr::constant(Rational(-shift))));
    return out;
}

/// Sorts by numeric real part, then imaginary part.
inline void sort_numerically(std::vector<Expr>& v) {
    std::vector<std::pair<ComplexApprox, Expr>> keyed;
    for (auto& e : v) keyed.emplace_back(eval_numeric(e, kDecisionBits), e);
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.real != b.first.real) return a.first.real < b.first.real;
        return a.first.imag < b.first.imag;
    });
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
}

inline bool numerically_positive_real(const Expr& e) {
    ComplexApprox a = eval_numeric(e, kDecisionBits);
    PrecisionScope scope(2 * kDecisionBits);
    BigFloat tol = pow2(-static_cast<long>(kDecisionBits) / 2) * (1 + boost::multiprecision::abs(a.real));
    return boost::multiprecision::abs(a.imag) <= tol && a.real > tol;
}

}  // namespace detail

inline SolutionSet solve_linear(const Rational& a, const Rational& b) {
    if (a == 0) throw PreconditionError("solve_linear: leading coefficient is zero");
    SolutionSet s;
    s.method = Method::Linear;
    s.roots = {Expr::constant(Rational(-b / a))};
    return s;
}

/// a x^2 + b x + c = 0; the "+" root comes first.
inline SolutionSet solve_quadratic(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0) throw PreconditionError("solve_quadratic: leading coefficient is zero");
    auto [r1, r2] = detail::monic_quadratic_roots(Expr::constant(Rational(b / a)), Expr::constant(Rational(c / a)));
    SolutionSet s;
    s.method = Method::Quadratic;
    s.roots = {r1, r2};
    return s;
}

/// (p/3)^3 + (q/2)^2 < 0, strictly.
inline bool cubic_casus_flag(const DepressedCubic& d) {
    const Rational a = d.p / 3, b = d.q / 2;
    return a * a * a + b * b < 0;
}

/// Roots of y^3 + p y + q in the order x1, x2, x3. v1 is built as the quotient
/// -p / (3 u1) rather than as a second cube root, so only the pairings with
/// u v = -p/3 can be expressed.
inline SolutionSet cardano_depressed(const DepressedCubic& d) {
    SolutionSet s;
    s.method = Method::Cardano;
    s.casus_irreducibilis = cubic_casus_flag(d);
    if (d.p == 0) {
        if (d.q == 0) {
            s.roots.assign(3, Expr::constant(0));
            return s;
        }
        const Expr c = Expr::constant(Rational(-d.q));
        s.roots = detail::simplified({Expr::root(c, 3, 0), Expr::root(c, 3, 1), Expr::root(c, 3, 2)});
        return s;
    }
    const Rational disc = d.q * d.q / 4 + d.p * d.p * d.p / 27;
    const Expr u_cubed = Expr::add({Expr::constant(Rational(-d.q / 2)), Expr::sqrt(Expr::constant(disc))});
    const Expr u1 = simplify(Expr::root(u_cubed, 3, 0));
    const Expr v1 = simplify(Expr::mul({Expr::constant(Rational(-d.p / 3)), Expr::inv(u1)}));
    const Expr e1 = Expr::unity(3, 1);
    const Expr e2 = Expr::unity(3, 2);
    s.roots = detail::simplified({u1 + v1, e1 * u1 + e2 * v1, e2 * u1 + e1 * v1});
    return s;
}

inline SolutionSet solve_cubic(const Polynomial& f) {
    if (f.degree() != 3) throw PreconditionError("solve_cubic: degree must be 3");
    const DepressedCubic d = depress_cubic(f.monic());
    SolutionSet s = cardano_depressed(d);
    s.roots = detail::shifted(s.roots, d.shift);
    return s;
}

/// The classical closed form x = cbrt(sqrt(D) + q/2) - cbrt(sqrt(D) - q/2),
/// D = (p/3)^3 + (q/2)^2, for x^3 + p x = q. Left unsimplified for display.
inline Expr cardano_display_formula(const Rational& p, const Rational& q) {
    const Rational a = p / 3, b = q / 2;
    const Expr sq = Expr::sqrt(Expr::constant(Rational(a * a * a + b * b)));
    return Expr::add({Expr::root(Expr::add({sq, Expr::constant(b)}), 3),
                      Expr::neg(Expr::root(Expr::add({sq, Expr::constant(Rational(-b))}), 3))});
}

/// Resolvent of x^4 + a x^2 + b x + c from the perfect-square condition on
/// (x^2 + a/2 + y)^2 = 2y x^2 - b x + (y^2 + a y + a^2/4 - c):
/// y^3 + a y^2 + (a^2/4 - c) y - b^2/8.
inline Polynomial ferrari_resolvent(const Polynomial& f) {
    if (f.degree() != 4 || !f.is_monic() || f.coeff(3) != 0)
        throw PreconditionError("ferrari_resolvent: expected a monic quartic with no cubic term");
    const Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    return Polynomial({Rational(-b * b / 8), Rational(a * a / 4 - c), a, Rational(1)});
}

/// The same resolvent with the unknown measured from -a/2, i.e. built from
/// (x^2 + a + t)^2. For x^4 + 6x^2 - 60x + 36 this is t^3 + 15t^2 + 36t - 450.
inline Polynomial ferrari_resolvent_classical(const Polynomial& f) {
    return taylor_shift(ferrari_resolvent(f), f.coeff(2) / 2);
}

inline Polynomial euler_resolvent(const DepressedQuartic& d) {
    return Polynomial({Rational(-d.q * d.q / 64), Rational(d.p * d.p / 16 - d.r / 4), Rational(d.p / 2), Rational(1)});
}

/// Roots of y^4 + p y^2 + r via t = y^2: sqrt(t1), -sqrt(t1), sqrt(t2), -sqrt(t2).
inline SolutionSet solve_biquadratic(const DepressedQuartic& d) {
    if (d.q != 0) throw PreconditionError("solve_biquadratic: q must be zero");
    auto [t1, t2] = detail::monic_quadratic_roots(Expr::constant(d.p), Expr::constant(d.r));
    const Expr s1 = simplify(Expr::sqrt(t1));
    const Expr s2 = simplify(Expr::sqrt(t2));
    SolutionSet s;
    s.method = Method::Biquadratic;
    s.roots = detail::simplified({s1, -s1, s2, -s2});
    return s;
}

namespace detail {

/// Roots of a monic cubic resolvent as expressions: rational roots ascending,
/// then the remaining ones sorted numerically.
inline std::vector<Expr> resolvent_roots(const Polynomial& R) {
    std::vector<Expr> exact;
    Polynomial rest = R;
    for (const auto& r : rational_roots(R)) {
        while (rest.degree() > 0 && rest(r) == 0) {
            rest = divmod(rest, Polynomial::linear_factor(r)).first;
            exact.push_back(Expr::constant(r));
        }
    }
    std::vector<Expr> others;
    if (rest.degree() == 1) {
        others = solve_linear(rest.coeff(1), rest.coeff(0)).roots;
    } else if (rest.degree() == 2) {
        others = solve_quadratic(rest.coeff(2), rest.coeff(1), rest.coeff(0)).roots;
    } else if (rest.degree() == 3) {
        others = solve_cubic(rest).roots;
    }
    sort_numerically(others);
    exact.insert(exact.end(), others.begin(), others.end());
    return exact;
}

}  // namespace detail

/// Euler's method for y^4 + p y^2 + q y + r, q != 0, squarefree. u0 and v0 are
/// principal square roots of the first two resolvent roots and w0 is the
/// quotient (-q/8) / (u0 v0), so u0 v0 w0 = -q/8 holds by construction.
inline SolutionSet solve_quartic_euler(const DepressedQuartic& d) {
    if (d.q == 0) throw PreconditionError("solve_quartic_euler: q = 0, use solve_biquadratic");
    if (!is_squarefree(d.polynomial())) throw MultipleRoots("solve_quartic_euler: quartic has a multiple root");
    const Polynomial R = euler_resolvent(d);
    const std::vector<Expr> z = detail::resolvent_roots(R);
    const Expr u = simplify(Expr::sqrt(z[0]));
    const Expr v = simplify(Expr::sqrt(z[1]));
    const Expr w = simplify(Expr::mul({Expr::constant(Rational(-d.q / 8)), Expr::inv(u * v)}));
    SolutionSet s;
    s.method = Method::Euler;
    s.resolvent = R;
    s.roots = detail::simplified({Expr::add({u, v, w}), Expr::add({u, -v, -w}), Expr::add({-u, v, -w}), Expr::add({-u, -v, w})});
    return s;
}

/// Reality of the roots of y^4 + p y^2 + q y + r from its Euler resolvent, in
/// exact arithmetic: three positive real resolvent roots give four real roots,
/// three real with two negative give two conjugate pairs, and one real root
/// with a conjugate pair gives two real and two complex roots.
inline RootClass classify_quartic(const DepressedQuartic& d) {
    if (d.q == 0) throw PreconditionError("classify_quartic: q must be nonzero");
    if (!is_squarefree(d.polynomial())) throw MultipleRoots("classify_quartic: quartic has a multiple root");
    const DepressedCubic rd = depress_cubic(euler_resolvent(d));
    const Rational a = rd.p / 3, b = rd.q / 2;
    const Rational delta = a * a * a + b * b;
    if (delta == 0) throw MultipleRoots("classify_quartic: resolvent has a multiple root");
    if (delta > 0) return RootClass::TwoRealTwoComplex;
    // Three real roots with product q^2/64 > 0: all positive exactly when the
    // elementary symmetric functions -p/2 and p^2/16 - r/4 are positive.
    const bool all_positive = -d.p / 2 > 0 && d.p * d.p / 16 - d.r / 4 > 0;
    return all_positive ? RootClass::FourReal : RootClass::TwoConjugatePairs;
}

/// Ferrari's method. The resolvent root y0 is a positive rational root when
/// one exists, otherwise the first Cardano root of the resolvent that is
/// numerically real and positive. The quartic then splits into
/// x^2 + a/2 + y0 = +-(s x - b/(2s)), s = sqrt(2 y0).
inline SolutionSet solve_quartic_ferrari(const Polynomial& f) {
    if (f.degree() != 4) throw PreconditionError("solve_quartic_ferrari: degree must be 4");
    const DepressedQuartic d = depress_quartic(f.monic());
    if (d.q == 0) {
        SolutionSet s = solve_biquadratic(d);
        s.roots = detail::shifted(s.roots, d.shift);
        return s;
    }
    const Polynomial R = ferrari_resolvent(d.polynomial());
    std::optional<Expr> y0;
    for (const auto& r : rational_roots(R)) {
        if (r > 0) {
            y0 = Expr::constant(r);
            break;
        }
    }
    if (!y0) {
        for (const auto& cand : solve_cubic(R).roots) {
            if (detail::numerically_positive_real(cand)) {
                y0 = cand;
                break;
            }
        }
    }
    if (!y0) throw Error("solve_quartic_ferrari: no positive real resolvent root found");

    const Expr s = simplify(Expr::sqrt(Expr::mul({Expr::constant(2), *y0})));
    const Expr t = simplify(Expr::mul({Expr::constant(Rational(d.q / 2)), Expr::inv(s)}));
    const Expr base = Expr::add({Expr::constant(Rational(d.p / 2)), *y0});
    // x^2 - s x + (a/2 + y0 + b/(2s)) = 0  and  x^2 + s x + (a/2 + y0 - b/(2s)) = 0
    auto [r1, r2] = detail::monic_quadratic_roots(-s, base + t);
    auto [r3, r4] = detail::monic_quadratic_roots(s, base - t);

    SolutionSet out;
    out.method = Method::Ferrari;
    out.resolvent = R;
    out.roots = detail::shifted({r1, r2, r3, r4}, d.shift);
    return out;
}

namespace detail {

inline SolutionSet solve_squarefree(const Polynomial& g, MethodPreference pref) {
    switch (g.degree()) {
        case 1:
            return solve_linear(g.coeff(1), g.coeff(0));
        case 2:
            return solve_quadratic(g.coeff(2), g.coeff(1), g.coeff(0));
        case 3:
            return solve_cubic(g);
        case 4:
            break;
        default:
            throw PreconditionError("solve_any: degree must be between 1 and 4");
    }
    const DepressedQuartic d = depress_quartic(g.monic());
    SolutionSet s;
    if (d.q == 0) {
        s = solve_biquadratic(d);
        s.roots = shifted(s.roots, d.shift);
        return s;
    }
    if (pref == MethodPreference::Ferrari) {
        s = solve_quartic_ferrari(g);
    } else {
        s = solve_quartic_euler(d);
        s.roots = shifted(s.roots, d.shift);
    }
    s.classification = classify_quartic(d);
    return s;
}

}  // namespace detail

/// Dispatcher for degrees 1-4. Repeated factors are split off first and
/// solved recursively; their roots are appended after the squarefree part's.
inline SolutionSet solve_any(const Polynomial& f, MethodPreference pref = MethodPreference::Auto) {
    if (f.degree() < 1 || f.degree() > 4)
        throw PreconditionError("solve_any: degree must be between 1 and 4 (use the Galois analysis for degree 5)");
    const auto parts = squarefree_part(f);
    if (parts.repeated_factor.degree() == 0) return detail::solve_squarefree(f.monic(), pref);
    SolutionSet s = detail::solve_squarefree(parts.squarefree, pref);
    SolutionSet rep = solve_any(parts.repeated_factor, pref);
    s.roots.insert(s.roots.end(), rep.roots.begin(), rep.roots.end());
    s.classification.reset();
    return s;
}

}  // namespace radix
