// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "numeric_helpers.hpp"
#include "oracles.hpp"
#include "radix/closed_form.hpp"
#include "radix/oracle.hpp"
#include "radix/solvability.hpp"

using namespace radix;
using testutil::multiset_distance;
using testutil::tol;

namespace {

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

Polynomial P(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Polynomial(std::move(c));
}

BigFloat min_distance_to(const std::vector<Expr>& roots, const Complex& target, unsigned bits) {
    PrecisionScope scope(4 * bits);
    BigFloat best = 1e100;
    for (const auto& r : roots) best = boost::multiprecision::min(best, abs(eval_numeric(r, bits).value() - target));
    return best;
}

Polynomial random_monic(std::mt19937_64& rng, int deg, int lo, int hi) {
    std::vector<Rational> c;
    for (int k = 0; k < deg; ++k) c.emplace_back(oracle::random_int(rng, lo, hi));
    c.emplace_back(1);
    return Polynomial(std::move(c));
}

/// Random squarefree depressed quartic y^4 + p y^2 + q y + r with q != 0.
DepressedQuartic random_depressed(std::mt19937_64& rng) {
    for (;;) {
        DepressedQuartic d{Rational(oracle::random_int(rng, -20, 20)), Rational(oracle::random_int(rng, -20, 20)),
                           Rational(oracle::random_int(rng, -20, 20)), Rational(0)};
        if (d.q != 0 && is_squarefree(d.polynomial())) return d;
    }
}

int real_root_count_numeric(const Polynomial& f) {
    int n = 0;
    PrecisionScope scope(1024);
    for (const auto& z : durand_kerner(f, 256).roots)
        if (boost::multiprecision::abs(z.imag) <= z.error_radius + tol(120)) ++n;
    return n;
}

// ---- criteria ----

void bhaskara() {
    const Polynomial f = P({-9999, -400, -2, 0, 1});
    const auto roots = solve_any(f).roots;
    bool exact = false;
    for (const auto& r : roots)
        if (r.is_const() && r.value() == 11) exact = true;
    require(exact || min_distance_to(roots, Complex(BigFloat(11), BigFloat(0)), 128) <= tol(100), "root 11 not found");
}

void pacioli() {
    const Polynomial f = P({-81600, 2, 3, 2, 1});
    const Expr target = Expr::constant(Rational(-1, 2)) + Expr::sqrt(Expr::constant(Rational(-3, 4)) + Expr::sqrt(Expr::constant(81601)));
    const Complex t = eval_numeric(target, 256).value();
    require(min_distance_to(solve_any(f).roots, t, 128) <= tol(100), "no root within 2^-100 of the expected value");
}

void ferrari_golden() {
    const Polynomial f = P({36, -60, 6, 0, 1});
    require(ferrari_resolvent_classical(f) == P({-450, 36, 15, 1}), "classical resolvent is " + to_string(ferrari_resolvent_classical(f), "y"));
    const auto sol = solve_quartic_ferrari(f);
    require(sol.roots.size() == 4, "expected four roots");
    for (const auto& r : sol.roots) {
        const Complex z = eval_numeric(r, 128).value();
        PrecisionScope scope(128);
        const BigFloat res = residual(f, z);
        require(res <= tol(100), "residual " + to_decimal(res, 6));
    }
}

void euler_resolvent_exact() {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        // Independent closed form for arbitrary (p, q, r).
        const Rational p = oracle::random_rational(rng, 100, 12), q = oracle::random_rational(rng, 100, 12),
                       r = oracle::random_rational(rng, 100, 12);
        const DepressedQuartic d{p, q, r, Rational(0)};
        const Polynomial expected({-(q * q) / 64, (p * p - 4 * r) / 16, p / 2, Rational(1)});
        require(euler_resolvent(d) == expected, "closed form mismatch at case " + std::to_string(i));

        // Construction from roots: y = +-u +-v +-w with u v w = -q/8 has
        // resolvent roots u^2, v^2, w^2.
        const Rational u = oracle::random_rational(rng, 30, 5), v = oracle::random_rational(rng, 30, 5),
                       w = oracle::random_rational(rng, 30, 5);
        const Polynomial quartic(oracle::from_roots({u + v + w, u - v - w, -u + v - w, -u - v + w}));
        const DepressedQuartic e{quartic.coeff(2), quartic.coeff(1), quartic.coeff(0), Rational(0)};
        require(quartic.coeff(3) == 0, "constructed quartic not depressed");
        require(euler_resolvent(e) == Polynomial(oracle::from_roots({u * u, v * v, w * w})),
                "root construction mismatch at case " + std::to_string(i));
    }
}

void cardano_and_casus() {
    const auto a = solve_cubic(P({-20, 6, 0, 1}));
    require(min_distance_to(a.roots, Complex(BigFloat(2), BigFloat(0)), 128) <= tol(100), "2 is not a root of x^3+6x-20");
    const auto b = solve_cubic(P({-4, -15, 0, 1}));
    require(b.casus_irreducibilis, "casus flag not set for x^3-15x-4");
    PrecisionScope scope(512);
    const BigFloat r3 = boost::multiprecision::sqrt(BigFloat(3));
    const std::vector<Complex> expected{Complex(BigFloat(4), BigFloat(0)), Complex(BigFloat(-2 + r3), BigFloat(0)),
                                        Complex(BigFloat(-2 - r3), BigFloat(0))};
    require(multiset_distance(testutil::values(b.roots), expected) <= tol(100), "roots are not {4, -2+-sqrt(3)}");
}

void classification() {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 500; ++i) {
        const DepressedQuartic d = random_depressed(rng);
        const Polynomial f = d.polynomial();
        const int sturm = oracle::sturm_real_root_count(f.coeffs());
        const int numeric = real_root_count_numeric(f);
        require(sturm == numeric, "oracles disagree on " + to_string(f));
        const RootClass c = classify_quartic(d);
        const int claimed = c == RootClass::FourReal ? 4 : c == RootClass::TwoRealTwoComplex ? 2 : 0;
        require(claimed == numeric, to_string(f) + " classified " + to_string(c) + ", oracle counts " + std::to_string(numeric));
    }
}

void ferrari_vs_euler() {
    std::mt19937_64 rng(707);
    int done = 0;
    while (done < 500) {
        const Polynomial f = random_monic(rng, 4, -20, 20);
        if (!is_squarefree(f)) continue;
        ++done;
        const auto fe = solve_quartic_ferrari(f);
        const auto eu = solve_any(f, MethodPreference::Euler);
        const BigFloat dist = multiset_distance(testutil::values(fe.roots), testutil::values(eu.roots));
        require(dist <= tol(64), to_string(f) + ": distance " + to_decimal(dist, 6));
    }
}

Permutation cyc(std::size_t n, std::initializer_list<std::vector<int>> cycles) { return Permutation::from_cycles(n, cycles); }

void quintic_and_groups() {
    const Polynomial f = P({2, -4, 0, 0, 0, 1});
    const auto v = quintic_verdict(f, 50);
    const auto* w = std::get_if<NotSolvableByRadicals>(&v);
    require(w != nullptr, "x^5-4x+2 not reported NotSolvable");
    const auto p = static_cast<std::int64_t>(w->prime);
    const auto naive = oracle::naive_factor_degrees(oracle::reduce(integer_primitive(f), p), p);
    require(naive == w->certificate.parts, "witness pattern differs from naive factorization mod " + std::to_string(p));
    require(!allowed_in_solvable_quintic(CycleType(naive)), "witness pattern occurs in F20");

    const PermGroup s5 = group_closure({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
    const PermGroup a5 = group_closure({cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
    const PermGroup s4 = group_closure({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
    const PermGroup s3 = group_closure({cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
    const PermGroup d5 = group_closure({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})});
    const PermGroup f20 = group_closure({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})});
    const PermGroup c5 = group_closure({cyc(5, {{0, 1, 2, 3, 4}})});
    require(s5.order() == 120 && a5.order() == 60 && s4.order() == 24 && s3.order() == 6 && d5.order() == 10 &&
                f20.order() == 20 && c5.order() == 5,
            "unexpected group orders");
    require(!is_solvable(s5) && !is_solvable(a5), "S5 or A5 reported solvable");
    require(is_solvable(s4) && is_solvable(s3) && is_solvable(d5) && is_solvable(f20) && is_solvable(c5),
            "a solvable group reported non-solvable");
    for (const PermGroup* g : {&s5, &a5, &s4, &s3, &d5, &f20, &c5})
        require(is_solvable(*g) == oracle::brute_is_solvable(*g), "disagrees with brute-force derived series");
}

void random_verification() {
    std::mt19937_64 rng(909);
    int done = 0;
    while (done < 1000) {
        const Polynomial f = random_monic(rng, oracle::random_int(rng, 2, 4), -20, 20);
        if (!is_squarefree(f)) continue;
        ++done;
        const auto rep = verify_solution_set(solve_any(f).roots, f, 128, tol(64));
        require(rep.all_matched, to_string(f) + " not matched, max residual " + to_decimal(rep.max_residual, 6));
    }
}

void corruption_and_soundness() {
    std::mt19937_64 rng(1010);
    int done = 0;
    while (done < 100) {
        const Polynomial f = random_monic(rng, oracle::random_int(rng, 2, 4), -20, 20);
        if (!is_squarefree(f)) continue;
        ++done;
        const auto roots = solve_any(f).roots;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            auto bad = roots;
            bad[i] = bad[i] + Expr::constant(Rational(1, 1000));
            require(!verify_solution_set(bad, f, 128, tol(64)).all_matched, to_string(f) + ": corrupted root " + std::to_string(i) + " accepted");
        }
    }
    for (std::size_t n = 1; n <= 50; ++n)
        require(!std::holds_alternative<NotSolvableByRadicals>(quintic_verdict(P({-2, 0, 0, 0, 0, 1}), n)),
                "x^5-2 reported NotSolvable with " + std::to_string(n) + " primes");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"1 bhaskara root 11", bhaskara},
        {"2 pacioli root", pacioli},
        {"3 ferrari golden resolvent and residuals", ferrari_golden},
        {"4 euler resolvent exact on 1000 inputs", euler_resolvent_exact},
        {"5 cardano root and casus irreducibilis", cardano_and_casus},
        {"6 quartic classification vs oracle on 500 inputs", classification},
        {"7 ferrari vs euler on 500 quartics", ferrari_vs_euler},
        {"8 quintic witness and group solvability", quintic_and_groups},
        {"9 oracle verification on 1000 polynomials", random_verification},
        {"10 corrupted roots rejected, x^5-2 never NotSolvable", corruption_and_soundness},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            fn();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << secs << " s)";
        if (!ok) line << "  " << detail;
        std::cout << line.str() << std::endl;
        failures += !ok;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/" << criteria.size() << " in " << total
              << " s" << std::endl;
    return failures ? 1 : 0;
}
