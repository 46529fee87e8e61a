#include <gtest/gtest.h>

#include <random>

#include "numeric_helpers.hpp"
#include "oracles.hpp"
#include "radix/closed_form.hpp"
#include "radix/oracle.hpp"

using namespace radix;
using testutil::cx;
using testutil::multiset_distance;
using testutil::tol;

namespace {

Polynomial P(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Polynomial(std::move(c));
}

std::vector<Complex> oracle_values(const Polynomial& f, unsigned bits = 128) {
    std::vector<Complex> out;
    for (const auto& r : durand_kerner(f, bits).roots) out.push_back(r.value());
    return out;
}

BigFloat big_tol() { return tol(64); }

}  // namespace

TEST(DurandKerner, Examples) {
    auto r = durand_kerner(P({-1, 0, 1}), 128);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(multiset_distance(oracle_values(P({-1, 0, 1})), {cx("1"), cx("-1")}), tol(120));

    PrecisionScope scope(512);
    const BigFloat r3 = boost::multiprecision::sqrt(BigFloat(3));
    EXPECT_LT(multiset_distance(oracle_values(P({-4, -15, 0, 1})),
                                {cx("4"), Complex(BigFloat(-2 + r3), BigFloat(0)), Complex(BigFloat(-2 - r3), BigFloat(0))}),
              tol(120));
}

TEST(DurandKerner, QuinticHasThreeRealRoots) {
    auto r = durand_kerner(P({2, -4, 0, 0, 0, 1}), 128);
    ASSERT_TRUE(r.converged);
    int real = 0;
    for (const auto& z : r.roots) {
        PrecisionScope scope(512);
        if (boost::multiprecision::abs(z.imag) <= z.error_radius + tol(100)) ++real;
    }
    EXPECT_EQ(real, 3);
    EXPECT_EQ(oracle::sturm_real_root_count(P({2, -4, 0, 0, 0, 1}).coeffs()), 3);
}

TEST(DurandKerner, Deterministic) {
    auto a = durand_kerner(P({7, -3, 2, 0, 1, 1}), 128);
    auto b = durand_kerner(P({7, -3, 2, 0, 1, 1}), 128);
    ASSERT_EQ(a.roots.size(), b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        EXPECT_EQ(a.roots[i].real, b.roots[i].real);
        EXPECT_EQ(a.roots[i].imag, b.roots[i].imag);
        EXPECT_EQ(a.roots[i].error_radius, b.roots[i].error_radius);
    }
    EXPECT_EQ(a.iterations, b.iterations);
}

// Expanding prod (x - z_i) numerically reproduces the monic coefficients.
TEST(DurandKerner, ProductOfLinearFactorsReproducesPolynomial) {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 200; ++i) {
        const int deg = oracle::random_int(rng, 1, 5);
        std::vector<Rational> c;
        for (int k = 0; k <= deg; ++k) c.emplace_back(oracle::random_int(rng, -20, 20));
        if (c.back() == 0) c.back() = 1;
        const Polynomial f(c);
        if (!is_squarefree(f)) continue;
        auto roots = oracle_values(f);
        PrecisionScope scope(512);
        std::vector<Complex> prod{Complex(BigFloat(1), BigFloat(0))};
        for (const auto& z : roots) {
            std::vector<Complex> next(prod.size() + 1);
            for (std::size_t k = 0; k < prod.size(); ++k) {
                next[k + 1] = next[k + 1] + prod[k];
                next[k] = next[k] - z * prod[k];
            }
            prod = std::move(next);
        }
        const Polynomial g = f.monic();
        BigFloat scale = 1;
        for (const auto& a : g.coeffs()) scale = boost::multiprecision::max(scale, abs(Complex(a)));
        for (std::size_t k = 0; k < prod.size(); ++k)
            EXPECT_LE(abs(prod[k] - Complex(g.coeff(k))), tol(64) * scale) << to_string(f);
    }
}

TEST(DurandKerner, ResidualsAreSmall) {
    std::mt19937_64 rng(79);
    for (int i = 0; i < 200; ++i) {
        const int deg = oracle::random_int(rng, 1, 5);
        std::vector<Rational> c;
        for (int k = 0; k <= deg; ++k) c.emplace_back(oracle::random_rational(rng, 30, 4));
        if (c.back() == 0) c.back() = 1;
        const Polynomial f(c);
        if (!is_squarefree(f)) continue;
        auto result = durand_kerner(f, 128);
        EXPECT_TRUE(result.converged);
        PrecisionScope scope(512);
        BigFloat maxc = 0;
        for (const auto& a : f.coeffs()) maxc = boost::multiprecision::max(maxc, abs(Complex(a)));
        for (const auto& z : result.roots) EXPECT_LE(residual(f, z.value()), tol(64) * maxc) << to_string(f);
    }
}

TEST(OracleRoots, RepeatedRootsWithMultiplicity) {
    // (x - 1)^2 (x + 2)
    auto r = oracle_roots(P({2, -3, 0, 1}), 128);
    std::vector<Complex> v;
    for (const auto& z : r.roots) v.push_back(z.value());
    EXPECT_LT(multiset_distance(v, {cx("1"), cx("1"), cx("-2")}), tol(100));
}

TEST(Verify, CardanoRootsMatch) {
    const Polynomial f = P({-20, 6, 0, 1});
    auto rep = verify_solution_set(solve_cubic(f).roots, f, 128, big_tol());
    EXPECT_TRUE(rep.all_matched);
    EXPECT_EQ(rep.pairing.size(), 3u);
    EXPECT_EQ(rep.precision_bits, 128u);
    PrecisionScope scope(512);
    EXPECT_LT(rep.max_residual, tol(100));
}

TEST(Verify, CorruptedRootsFail) {
    const Polynomial f = P({-20, 6, 0, 1});
    auto roots = solve_cubic(f).roots;
    roots[0] = -roots[0];
    EXPECT_FALSE(verify_solution_set(roots, f, 128, big_tol()).all_matched);

    auto dup = solve_cubic(f).roots;
    dup[2] = dup[1];
    EXPECT_FALSE(verify_solution_set(dup, f, 128, big_tol()).all_matched);

    EXPECT_THROW(verify_solution_set({Expr::constant(2)}, f, 128, big_tol()), PreconditionError);
}

TEST(Verify, FerrariAndEulerMatchTheSameOracle) {
    const Polynomial f = P({36, -60, 6, 0, 1});
    auto fe = solve_quartic_ferrari(f);
    auto eu = solve_any(f, MethodPreference::Euler);
    auto a = verify_solution_set(fe.roots, f, 128, big_tol());
    auto b = verify_solution_set(eu.roots, f, 128, big_tol());
    EXPECT_TRUE(a.all_matched);
    EXPECT_TRUE(b.all_matched);
}

TEST(Verify, PairingIsPerfectMatching) {
    const Polynomial f = P({-9999, -400, -2, 0, 1});
    auto rep = verify_solution_set(solve_any(f).roots, f, 128, big_tol());
    ASSERT_TRUE(rep.all_matched);
    std::set<std::size_t> a, b;
    for (const auto& p : rep.pairing) {
        a.insert(p.radical_index);
        b.insert(p.oracle_index);
        PrecisionScope scope(512);
        EXPECT_LE(p.distance, big_tol() + pow2(-100));
    }
    EXPECT_EQ(a.size(), 4u);
    EXPECT_EQ(b.size(), 4u);
}
