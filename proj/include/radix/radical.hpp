#pragma once

// Radical expressions over Q: constants, roots of unity, sums, products,
// negation, inversion and k-th roots with an explicit branch index.
// Trees are immutable and share subtrees freely.

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "radix/errors.hpp"
#include "radix/numeric.hpp"
#include "radix/rational.hpp"

namespace radix {

enum class ExprKind { Const, Unity, Add, Mul, Neg, Inv, Root };

struct ExprNode;

class Expr {
   public:
    /// Rational constant.
    static Expr constant(const Rational& r);
    static Expr constant(long n) { return constant(Rational(n)); }
    /// e^(2 pi i j / k); j is reduced mod k.
    static Expr unity(long order, long power);
    static Expr add(std::vector<Expr> terms);
    static Expr mul(std::vector<Expr> factors);
    static Expr neg(Expr x);
    /// Rejects a literal zero constant.
    static Expr inv(Expr x);
    /// The branch-th k-th root: principal root times e^(2 pi i branch / k).
    static Expr root(Expr radicand, long index, long branch = 0);
    static Expr sqrt(Expr radicand) { return root(std::move(radicand), 2, 0); }

    ExprKind kind() const;
    const Rational& value() const;          ///< Const
    long order() const;                      ///< Unity
    long power() const;                      ///< Unity
    long index() const;                      ///< Root
    long branch() const;                     ///< Root
    const std::vector<Expr>& args() const;   ///< Add, Mul (all); Neg, Inv, Root (one)
    const Expr& arg() const { return args().front(); }

    bool is_const() const { return kind() == ExprKind::Const; }
    bool is_const(long n) const { return is_const() && value() == n; }

    const ExprNode* id() const noexcept { return node_.get(); }

    friend Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b) { return add({a, neg(b)}); }
    friend Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
    friend Expr operator/(const Expr& a, const Expr& b) { return mul({a, inv(b)}); }
    friend Expr operator-(const Expr& a) { return neg(a); }

   private:
    explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
    ExprKind kind;
    Rational value;   // Const
    long a = 0;       // Unity: order;  Root: index
    long b = 0;       // Unity: power;  Root: branch
    std::vector<Expr> args;
};

inline Expr Expr::constant(const Rational& r) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Const;
    n->value = r;
    return Expr(std::move(n));
}

inline Expr Expr::unity(long order, long power) {
    if (order < 1) throw PreconditionError("root of unity order must be positive");
    power %= order;
    if (power < 0) power += order;
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Unity;
    n->a = order;
    n->b = power;
    return Expr(std::move(n));
}

inline Expr Expr::add(std::vector<Expr> terms) {
    if (terms.empty()) throw PreconditionError("empty sum");
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Add;
    n->args = std::move(terms);
    return Expr(std::move(n));
}

inline Expr Expr::mul(std::vector<Expr> factors) {
    if (factors.empty()) throw PreconditionError("empty product");
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Mul;
    n->args = std::move(factors);
    return Expr(std::move(n));
}

inline Expr Expr::neg(Expr x) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Neg;
    n->args = {std::move(x)};
    return Expr(std::move(n));
}

inline Expr Expr::inv(Expr x) {
    if (x.is_const(0)) throw PreconditionError("inverse of literal zero");
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Inv;
    n->args = {std::move(x)};
    return Expr(std::move(n));
}

inline Expr Expr::root(Expr radicand, long index, long branch) {
    if (index < 2) throw PreconditionError("root index must be at least 2");
    if (branch < 0 || branch >= index) throw PreconditionError("root branch must lie in [0, index)");
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Root;
    n->a = index;
    n->b = branch;
    n->args = {std::move(radicand)};
    return Expr(std::move(n));
}

inline ExprKind Expr::kind() const { return node_->kind; }
inline const Rational& Expr::value() const { return node_->value; }
inline long Expr::order() const { return node_->a; }
inline long Expr::power() const { return node_->b; }
inline long Expr::index() const { return node_->a; }
inline long Expr::branch() const { return node_->b; }
inline const std::vector<Expr>& Expr::args() const { return node_->args; }

/// Structural equality.
inline bool identical(const Expr& x, const Expr& y) {
    if (x.id() == y.id()) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
        case ExprKind::Const:
            return x.value() == y.value();
        case ExprKind::Unity:
        case ExprKind::Root:
            if (x.order() != y.order() || x.power() != y.power()) return false;
            break;
        default:
            break;
    }
    if (x.args().size() != y.args().size()) return false;
    for (std::size_t i = 0; i < x.args().size(); ++i)
        if (!identical(x.args()[i], y.args()[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// simplify
// ---------------------------------------------------------------------------

namespace detail {

class Simplifier {
   public:
    Expr run(const Expr& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
        Expr out = step(e);
        memo_.emplace(e.id(), out);
        return out;
    }

   private:
    Expr step(const Expr& e) {
        switch (e.kind()) {
            case ExprKind::Const:
                return e;
            case ExprKind::Unity:
                return unity(e.order(), e.power());
            case ExprKind::Neg:
                return product({Expr::constant(-1), run(e.arg())});
            case ExprKind::Inv:
                return inverse(e);
            case ExprKind::Root:
                return root(e);
            case ExprKind::Add:
                return sum(e);
            case ExprKind::Mul: {
                std::vector<Expr> fs;
                for (const auto& f : e.args()) fs.push_back(run(f));
                return product(std::move(fs));
            }
        }
        return e;
    }

    static Expr unity(long k, long j) {
        j %= k;
        if (j < 0) j += k;
        const long g = std::gcd(k, j);
        k /= g;
        j /= g;
        if (j == 0) return Expr::constant(1);
        if (k == 2) return Expr::constant(-1);
        return Expr::unity(k, j);
    }

    Expr inverse(const Expr& e) {
        Expr s = run(e.arg());
        if (s.is_const()) {
            if (s.value() == 0) return e;  // stays unsimplified; evaluation reports it
            return Expr::constant(Rational(1) / s.value());
        }
        if (s.kind() == ExprKind::Unity) return unity(s.order(), -s.power());
        if (s.kind() == ExprKind::Inv) return s.arg();
        return s.id() == e.arg().id() ? e : Expr::inv(s);
    }

    Expr root(const Expr& e) {
        const long k = e.index();
        const long b = e.branch();
        Expr s = run(e.arg());
        if (b != 0) return product({root_principal(s, k, e.arg().id() == s.id() ? &e : nullptr), unity(k, b)});
        return root_principal(s, k, &e);
    }

    /// Principal root of an already simplified radicand. `original` is reused
    /// when nothing changes.
    Expr root_principal(const Expr& s, long k, const Expr* original) {
        if (s.is_const()) {
            const Rational& r = s.value();
            if (r == 0) return Expr::constant(0);
            const Rational mag = r.sign() < 0 ? Rational(-r) : r;
            if (auto t = exact_root(mag, static_cast<unsigned>(k))) {
                if (r.sign() > 0) return Expr::constant(*t);
                // principal root of a negative real: |r|^(1/k) e^(i pi / k)
                return product({Expr::constant(*t), unity(2 * k, 1)});
            }
            if (r.sign() < 0) return product({Expr::root(Expr::constant(mag), k, 0), unity(2 * k, 1)});
        } else if (s.kind() == ExprKind::Unity) {
            // pick the representative of the angle in (-pi, pi]
            const long m = s.order();
            long j = s.power();
            if (2 * j > m) j -= m;
            return unity(m * k, j);
        }
        if (original && original->branch() == 0 && original->arg().id() == s.id()) return *original;
        return Expr::root(s, k, 0);
    }

    Expr sum(const Expr& e) {
        std::vector<Expr> terms;
        Rational c = 0;
        auto absorb = [&](const Expr& t) {
            if (t.is_const())
                c += t.value();
            else
                terms.push_back(t);
        };
        for (const auto& t : e.args()) {
            Expr s = run(t);
            if (s.kind() == ExprKind::Add)
                for (const auto& u : s.args()) absorb(u);
            else
                absorb(s);
        }
        if (c != 0) terms.push_back(Expr::constant(c));
        if (terms.empty()) return Expr::constant(0);
        if (terms.size() == 1) return terms.front();
        return Expr::add(std::move(terms));
    }

    /// Product of simplified factors.
    static Expr product(std::vector<Expr> in) {
        std::vector<Expr> rest;
        Rational c = 1;
        long uk = 1, uj = 0;  // accumulated root of unity e^(2 pi i uj/uk)
        auto absorb = [&](const Expr& f) {
            if (f.is_const()) {
                c *= f.value();
            } else if (f.kind() == ExprKind::Unity) {
                const long l = std::lcm(uk, f.order());
                uj = (uj * (l / uk) + f.power() * (l / f.order())) % l;
                uk = l;
            } else {
                rest.push_back(f);
            }
        };
        for (const auto& f : in) {
            if (f.kind() == ExprKind::Mul)
                for (const auto& g : f.args()) absorb(g);
            else
                absorb(f);
        }
        Expr u = unity(uk, uj);
        if (u.is_const()) {
            c *= u.value();
        }
        if (c == 0) return Expr::constant(0);
        std::vector<Expr> fs;
        if (c != 1 || (rest.empty() && u.is_const())) fs.push_back(Expr::constant(c));
        if (!u.is_const()) fs.push_back(u);
        for (auto& f : rest) fs.push_back(std::move(f));
        if (fs.size() == 1) return fs.front();
        return Expr::mul(std::move(fs));
    }

    std::unordered_map<const ExprNode*, Expr> memo_;
};

}  // namespace detail

/// Rational-exact rewriting: constant folding, perfect-power roots, flattening,
/// identity elimination, root-of-unity bookkeeping. The result is numerically
/// equal to the input. Canonical trees contain no Neg nodes and only
/// principal-branch roots of non-constant or positive constant radicands.
inline Expr simplify(const Expr& e) { return detail::Simplifier{}.run(e); }

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

enum class RenderFormat { Text, Latex };

namespace detail {

class Renderer {
   public:
    explicit Renderer(RenderFormat f) : latex_(f == RenderFormat::Latex) {}

    std::string render(const Expr& e) {
        switch (e.kind()) {
            case ExprKind::Const:
                return constant(e.value());
            case ExprKind::Unity:
                if (e.order() == 4 && e.power() == 1) return "i";
                return latex_ ? "\\omega_{" + std::to_string(e.order()) + "}^{" + std::to_string(e.power()) + "}"
                              : "w(" + std::to_string(e.order()) + ")^" + std::to_string(e.power());
            case ExprKind::Root:
                return root(e);
            case ExprKind::Neg:
                return "-" + atom(e.arg());
            case ExprKind::Inv:
                return latex_ ? "\\frac{1}{" + render(e.arg()) + "}" : "1/" + atom(e.arg());
            case ExprKind::Add:
                return sum(e);
            case ExprKind::Mul:
                return product(e);
        }
        return {};
    }

   private:
    std::string constant(const Rational& r) const {
        if (!latex_ || is_integer(r)) return to_string(r);
        const Integer n = num(r);
        const std::string sgn = n.sign() < 0 ? "-" : "";
        return sgn + "\\frac{" + abs_int(n).str() + "}{" + den(r).str() + "}";
    }

    std::string paren(const std::string& s) const { return latex_ ? "\\left(" + s + "\\right)" : "(" + s + ")"; }

    std::string root(const Expr& e) {
        const std::string inner = render(e.arg());
        std::string s;
        if (latex_)
            s = e.index() == 2 ? "\\sqrt{" + inner + "}" : "\\sqrt[" + std::to_string(e.index()) + "]{" + inner + "}";
        else
            s = e.index() == 2 ? "sqrt(" + inner + ")" : "root(" + std::to_string(e.index()) + ", " + inner + ")";
        if (e.branch() != 0) {
            if (latex_)
                s += "_{(" + std::to_string(e.branch()) + ")}";
            else
                s.insert(s.size() - 1, ", branch=" + std::to_string(e.branch()));
        }
        return s;
    }

    /// Operand of a product or negation: parenthesized unless self-delimiting.
    std::string atom(const Expr& e) {
        switch (e.kind()) {
            case ExprKind::Const:
                if (e.value().sign() < 0 || (!latex_ && !is_integer(e.value()))) return paren(render(e));
                return render(e);
            case ExprKind::Unity:
            case ExprKind::Root:
                return render(e);
            case ExprKind::Inv:
                return latex_ ? render(e) : paren(render(e));
            default:
                return paren(render(e));
        }
    }

    /// If e renders with a leading minus sign, the rendering of -e.
    bool negated(const Expr& e, std::string& out) {
        if (e.is_const() && e.value().sign() < 0) {
            out = constant(Rational(-e.value()));
            return true;
        }
        if (e.kind() == ExprKind::Neg) {
            out = atom(e.arg());
            return true;
        }
        if (e.kind() == ExprKind::Mul && e.args().front().is_const() && e.args().front().value().sign() < 0) {
            std::vector<Expr> fs(e.args());
            const Rational c = -fs.front().value();
            if (c == 1)
                fs.erase(fs.begin());
            else
                fs.front() = Expr::constant(c);
            out = fs.size() == 1 ? atom_in_sum(fs.front()) : product(Expr::mul(std::move(fs)));
            return true;
        }
        return false;
    }

    std::string atom_in_sum(const Expr& e) {
        if (e.kind() == ExprKind::Add) return paren(render(e));
        return render(e);
    }

    std::string sum(const Expr& e) {
        std::string s;
        for (std::size_t i = 0; i < e.args().size(); ++i) {
            const Expr& t = e.args()[i];
            std::string body;
            if (negated(t, body)) {
                s += "-" + body;
            } else {
                if (i > 0) s += "+";
                s += atom_in_sum(t);
            }
        }
        return s;
    }

    std::string product(const Expr& e) {
        std::vector<Expr> fs(e.args());
        std::size_t start = 0;
        std::string sgn;
        if (fs.size() > 1 && fs.front().is_const() && fs.front().value().sign() < 0) {
            sgn = "-";
            if (fs.front().value() == -1)
                start = 1;
            else
                fs.front() = Expr::constant(Rational(-fs.front().value()));
        }
        if (latex_) {
            std::vector<std::string> numer, denom;
            for (std::size_t i = start; i < fs.size(); ++i) {
                if (fs[i].kind() == ExprKind::Inv)
                    denom.push_back(atom(fs[i].arg()));
                else
                    numer.push_back(atom(fs[i]));
            }
            auto join = [](const std::vector<std::string>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " \\cdot " : "") + v[i];
                return s;
            };
            if (denom.empty()) return sgn + join(numer);
            return sgn + "\\frac{" + (numer.empty() ? std::string("1") : join(numer)) + "}{" + join(denom) + "}";
        }
        std::string s = sgn;
        for (std::size_t i = start; i < fs.size(); ++i) {
            const Expr& f = fs[i];
            if (f.kind() == ExprKind::Inv)
                s += (i == start ? "1/" : "/") + atom(f.arg());
            else
                s += (i == start ? "" : "*") + atom(f);
        }
        return s;
    }

    bool latex_;
};

}  // namespace detail

/// Deterministic infix rendering. Text uses sqrt(x), root(k, x) and w(k)^j;
/// LaTeX uses \sqrt{x}, \sqrt[k]{x} and \omega_{k}^{j}. w(4)^1 prints as i.
inline std::string render(const Expr& e, RenderFormat format = RenderFormat::Text) {
    return detail::Renderer(format).render(e);
}

// ---------------------------------------------------------------------------
// eval_numeric
// ---------------------------------------------------------------------------

struct ComplexApprox {
    BigFloat real{0}, imag{0};
    BigFloat error_radius{0};
    unsigned precision_bits = 0;

    Complex value() const { return {real, imag}; }
};

namespace detail {

/// One bottom-up pass at a fixed working precision. Each node carries a value
/// and a first-order bound on its distance from the exact value.
class Evaluator {
   public:
    struct Ball {
        Complex z;
        BigFloat rad;
    };

    explicit Evaluator(unsigned bits) : scope_(bits), eps_(pow2(-static_cast<long>(bits) + 4)) {}

    Ball run(const Expr& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
        Ball b = step(e);
        memo_.emplace(e.id(), b);
        return b;
    }

   private:
    Ball step(const Expr& e) {
        switch (e.kind()) {
            case ExprKind::Const: {
                Complex z(e.value());
                return {z, BigFloat(abs(z) * eps_)};
            }
            case ExprKind::Unity:
                return {unit_root(e.order(), e.power()), BigFloat(eps_ * 4)};
            case ExprKind::Neg: {
                Ball x = run(e.arg());
                return {-x.z, x.rad};
            }
            case ExprKind::Add: {
                Complex z;
                BigFloat rad = 0, mags = 0;
                for (const auto& t : e.args()) {
                    Ball x = run(t);
                    z = z + x.z;
                    rad += x.rad;
                    mags += abs(x.z);
                }
                rad += 2 * eps_ * mags;
                return {z, rad};
            }
            case ExprKind::Mul: {
                Ball acc = run(e.args().front());
                for (std::size_t i = 1; i < e.args().size(); ++i) {
                    Ball x = run(e.args()[i]);
                    Complex z = acc.z * x.z;
                    BigFloat rad = abs(acc.z) * x.rad + abs(x.z) * acc.rad + acc.rad * x.rad + 8 * eps_ * abs(z);
                    acc = {z, rad};
                }
                return acc;
            }
            case ExprKind::Inv: {
                Ball x = run(e.arg());
                BigFloat m = abs(x.z);
                if (m <= x.rad) throw DivisionNearZero("cannot certify a divisor as nonzero");
                Complex z = Complex(BigFloat(1), BigFloat(0)) / x.z;
                BigFloat rad = x.rad / ((m - x.rad) * m) + 8 * eps_ / m;
                return {z, rad};
            }
            case ExprKind::Root:
                return root(e);
        }
        return {};
    }

    Ball root(const Expr& e) {
        const auto k = static_cast<unsigned>(e.index());
        Ball x = run(e.arg());
        BigFloat m = abs(x.z);
        Complex rotation = unit_root(e.index(), e.branch());
        if (m <= x.rad) {
            // radicand indistinguishable from zero
            Complex w = principal_root(x.z, k) * rotation;
            BigFloat bound;
            BigFloat span = m + x.rad;
            mpfr_rootn_ui(bound.backend().data(), span.backend().data(), k, MPFR_RNDU);
            return {w, BigFloat(2 * bound)};
        }
        Complex z = x.z;
        // A radicand that is real up to its error bound is treated as real, so a
        // negative value lands on the principal side of the branch cut.
        if (z.re < 0 && boost::multiprecision::abs(z.im) <= x.rad) z.im = 0;
        Complex w = principal_root(z, k) * rotation;
        BigFloat lower = m - x.rad;
        BigFloat lip;  // |d/dz z^(1/k)| on the disc: |z|^(1/k - 1) / k
        BigFloat lower_root;
        mpfr_rootn_ui(lower_root.backend().data(), lower.backend().data(), k, MPFR_RNDD);
        lip = lower_root / lower / k;
        return {w, BigFloat(x.rad * lip + 16 * eps_ * abs(w))};
    }

    PrecisionScope scope_;
    BigFloat eps_;
    std::unordered_map<const ExprNode*, Ball> memo_;
};

}  // namespace detail

/// Evaluates e to `precision_bits` bits. Working precision starts at four times
/// the requested precision and doubles until two successive passes agree
/// (at most four doublings).
inline ComplexApprox eval_numeric(const Expr& e, unsigned precision_bits) {
    if (precision_bits < 32) throw PreconditionError("eval_numeric: precision must be at least 32 bits");
    unsigned work = 4 * precision_bits;
    detail::Evaluator::Ball prev = detail::Evaluator(work).run(e);
    for (int attempt = 0; attempt < 4; ++attempt) {
        work *= 2;
        detail::Evaluator ev(work);
        detail::Evaluator::Ball cur = ev.run(e);
        BigFloat diff = abs(cur.z - prev.z);
        BigFloat scale = boost::multiprecision::max(BigFloat(1), abs(cur.z));
        if (diff <= pow2(-static_cast<long>(precision_bits)) * scale) {
            ComplexApprox out;
            out.real = cur.z.re;
            out.imag = cur.z.im;
            out.error_radius = boost::multiprecision::max(cur.rad, diff);
            out.precision_bits = precision_bits;
            return out;
        }
        prev = std::move(cur);
    }
    throw PrecisionExhausted("evaluation did not stabilize after 4 precision doublings");
}

}  // namespace radix
