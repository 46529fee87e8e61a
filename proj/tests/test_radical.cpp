#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "radix/closed_form.hpp"
#include "radix/radical.hpp"

using namespace radix;

namespace {

Expr C(long n, long d = 1) { return Expr::constant(Rational(n, d)); }

BigFloat distance(const ComplexApprox& a, const ComplexApprox& b) {
    PrecisionScope scope(4 * std::max(a.precision_bits, b.precision_bits));
    return abs(a.value() - b.value());
}

class TreeGen {
   public:
    explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

    Expr leaf() {
        switch (pick(0, 3)) {
            case 0:
                return C(pick(-9, 9), pick(1, 4));
            case 1: {
                static const long orders[] = {2, 3, 4, 6};
                const long k = orders[pick(0, 3)];
                return Expr::unity(k, pick(0, static_cast<int>(k) - 1));
            }
            default:
                return Expr::root(C(pick(0, 12), pick(1, 3)), pick(2, 3), 0);
        }
    }

    Expr tree(int depth) {
        if (depth <= 1 || pick(0, 4) == 0) return leaf();
        switch (pick(0, 5)) {
            case 0:
                return Expr::add({tree(depth - 1), tree(depth - 1)});
            case 1:
                return Expr::mul({tree(depth - 1), tree(depth - 1)});
            case 2:
                return Expr::neg(tree(depth - 1));
            case 3: {
                Expr x = tree(depth - 1);
                if (x.is_const(0)) return x;
                return Expr::inv(x);
            }
            default: {
                const long k = pick(2, 3);
                return Expr::root(tree(depth - 1), k, pick(0, static_cast<int>(k) - 1));
            }
        }
    }

   private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937_64 rng_;
};

}  // namespace

TEST(Simplify, Examples) {
    Expr cube = simplify(Expr::root(C(8), 3));
    ASSERT_TRUE(cube.is_const());
    EXPECT_EQ(cube.value(), 2);

    Expr x = Expr::sqrt(C(2));
    EXPECT_TRUE(identical(simplify(C(0) + x), x));

    Expr one = simplify(Expr::unity(3, 1) * Expr::unity(3, 2));
    ASSERT_TRUE(one.is_const());
    EXPECT_EQ(one.value(), 1);

    Expr unit = simplify(Expr::unity(5, 0));
    ASSERT_TRUE(unit.is_const());
    EXPECT_EQ(unit.value(), 1);

    EXPECT_TRUE(identical(simplify(-(-x)), x));
    EXPECT_TRUE(identical(simplify(C(1) * x), x));
    EXPECT_EQ(simplify(Expr::root(C(9, 4), 2)).value(), Rational(3, 2));
}

TEST(Simplify, NegativeRadicandBecomesUnityFactor) {
    // principal sqrt(-4) = 2i
    Expr s = simplify(Expr::sqrt(C(-4)));
    EXPECT_EQ(render(s), "2*i");
    Expr t = simplify(Expr::root(C(-8), 3));
    EXPECT_EQ(render(t), "2*w(6)^1");
    ComplexApprox v = eval_numeric(t, 128);
    PrecisionScope scope(512);
    EXPECT_LT(abs(v.value() - Complex(BigFloat(1), boost::multiprecision::sqrt(BigFloat(3)))), pow2(-120));
}

TEST(Render, Examples) {
    EXPECT_EQ(render(Expr::root(C(2), 2, 0)), "sqrt(2)");
    EXPECT_EQ(render(Expr::unity(3, 1)), "w(3)^1");
    EXPECT_EQ(render(Expr::unity(3, 1), RenderFormat::Latex), "\\omega_{3}^{1}");
    EXPECT_EQ(render(Expr::root(C(5), 3, 2)), "root(3, 5, branch=2)");
    EXPECT_EQ(render(cardano_display_formula(Rational(6), Rational(20)), RenderFormat::Latex),
              "\\sqrt[3]{\\sqrt{108}+10}-\\sqrt[3]{\\sqrt{108}-10}");
    EXPECT_EQ(render(cardano_display_formula(Rational(6), Rational(20))), "root(3, sqrt(108)+10)-root(3, sqrt(108)-10)");
}

TEST(Render, PacioliRoot) {
    Expr e = simplify(C(-1, 2) + Expr::sqrt(C(-3, 4) + Expr::sqrt(C(81601))));
    EXPECT_EQ(render(e), "sqrt(sqrt(81601)-3/4)-1/2");
    EXPECT_EQ(render(e, RenderFormat::Latex), "\\sqrt{\\sqrt{81601}-\\frac{3}{4}}-\\frac{1}{2}");
}

TEST(Render, InjectiveOnCanonicalTrees) {
    TreeGen gen(101);
    std::map<std::string, Expr> seen;
    int collisions = 0, distinct = 0;
    for (int i = 0; i < 3000; ++i) {
        Expr e = simplify(gen.tree(4));
        for (auto fmt : {RenderFormat::Text, RenderFormat::Latex}) {
            const std::string key = (fmt == RenderFormat::Text ? "T:" : "L:") + render(e, fmt);
            auto [it, inserted] = seen.emplace(key, e);
            if (inserted)
                ++distinct;
            else if (!identical(it->second, e)) {
                ++collisions;
                ADD_FAILURE() << "two trees render as " << key;
            }
        }
    }
    EXPECT_EQ(collisions, 0);
    EXPECT_GT(distinct, 1000);
}

TEST(Eval, Examples) {
    ComplexApprox r2 = eval_numeric(Expr::sqrt(C(2)), 128);
    {
        PrecisionScope scope(512);
        EXPECT_LT(boost::multiprecision::abs(r2.real - boost::multiprecision::sqrt(BigFloat(2))), pow2(-125));
        EXPECT_LE(boost::multiprecision::abs(r2.imag), r2.error_radius);
        EXPECT_LT(r2.error_radius, pow2(-128));
    }

    ComplexApprox e1 = eval_numeric(Expr::unity(3, 1), 128);
    {
        PrecisionScope scope(512);
        EXPECT_LT(boost::multiprecision::abs(e1.real + BigFloat(0.5)), pow2(-125));
        EXPECT_LT(boost::multiprecision::abs(e1.imag - boost::multiprecision::sqrt(BigFloat(3)) / 2), pow2(-125));
    }
}

TEST(Eval, PacioliValue) {
    // 40 significant digits from an independent multiprecision evaluation.
    Expr e = C(-1, 2) + Expr::sqrt(C(-3, 4) + Expr::sqrt(C(81601)));
    ComplexApprox v = eval_numeric(e, 128);
    PrecisionScope scope(512);
    const BigFloat expected("16.37924428066779521591800397033703305679");
    EXPECT_LT(boost::multiprecision::abs(v.real - expected), BigFloat("1e-38"));
    EXPECT_EQ(v.imag, 0);
}

TEST(Eval, BranchSelection) {
    // root(3, 8, branch=1) = 2 w(3)^1
    ComplexApprox a = eval_numeric(Expr::root(C(8), 3, 1), 128);
    ComplexApprox b = eval_numeric(C(2) * Expr::unity(3, 1), 128);
    EXPECT_LT(distance(a, b), a.error_radius + b.error_radius);
    // principal square root of -1 is +i
    ComplexApprox i = eval_numeric(Expr::sqrt(C(-1)), 128);
    EXPECT_GT(i.imag, 0);
}

TEST(Eval, PrincipalBranchOfNonnegativeConstantsIsReal) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const long k = oracle::random_int(rng, 2, 7);
        Expr e = Expr::root(C(oracle::random_int(rng, 0, 1000), oracle::random_int(rng, 1, 50)), k, 0);
        ComplexApprox v = eval_numeric(e, 96);
        EXPECT_LE(boost::multiprecision::abs(v.imag), v.error_radius);
        EXPECT_GE(v.real, -v.error_radius);
    }
}

TEST(Eval, DivisionNearZeroIsReported) {
    Expr x = Expr::sqrt(C(2));
    Expr zero_ish = x - x;  // not folded by simplify
    EXPECT_THROW(eval_numeric(Expr::inv(zero_ish), 64), DivisionNearZero);
    EXPECT_THROW(Expr::inv(C(0)), PreconditionError);
    EXPECT_THROW(eval_numeric(x, 16), PreconditionError);
}

TEST(Eval, InvalidNodesRejected) {
    EXPECT_THROW(Expr::root(C(2), 1), PreconditionError);
    EXPECT_THROW(Expr::root(C(2), 3, 3), PreconditionError);
    EXPECT_EQ(Expr::unity(3, 4).power(), 1);
}

TEST(Eval, SimplifyPreservesValueOnRandomTrees) {
    TreeGen gen(202);
    int evaluated = 0;
    for (int i = 0; i < 1500; ++i) {
        Expr e = gen.tree(6);
        Expr s = simplify(e);
        ComplexApprox a, b;
        try {
            a = eval_numeric(e, 96);
            b = eval_numeric(s, 96);
        } catch (const DivisionNearZero&) {
            continue;
        }
        ++evaluated;
        PrecisionScope scope(512);
        const BigFloat slack = pow2(-90) * boost::multiprecision::max(BigFloat(1), abs(a.value()));
        EXPECT_LE(distance(a, b), a.error_radius + b.error_radius + slack) << render(e) << "  vs  " << render(s);
    }
    EXPECT_GT(evaluated, 1200);
}

TEST(Eval, ErrorRadiusBoundsTrueError) {
    // Compare a 64-bit evaluation against a 512-bit one taken as truth.
    TreeGen gen(303);
    for (int i = 0; i < 500; ++i) {
        Expr e = gen.tree(5);
        ComplexApprox lo, hi;
        try {
            lo = eval_numeric(e, 64);
            hi = eval_numeric(e, 512);
        } catch (const DivisionNearZero&) {
            continue;
        }
        EXPECT_LE(distance(lo, hi), lo.error_radius + hi.error_radius + pow2(-60) * boost::multiprecision::max(BigFloat(1), abs(hi.value())))
            << render(e);
    }
}
