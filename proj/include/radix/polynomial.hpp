#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "radix/errors.hpp"
#include "radix/rational.hpp"

namespace radix {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients
/// and degree -1.
class Polynomial {
   public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    static Polynomial monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    /// x - r
    static Polynomial linear_factor(const Rational& r) { return Polynomial({-r, Rational(1)}); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    const Rational& leading() const {
        if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        return scaled(Rational(1) / c_.back());
    }

    Polynomial scaled(const Rational& s) const {
        std::vector<Rational> v(c_);
        for (auto& c : v) c *= s;
        return Polynomial(std::move(v));
    }

    /// Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Rational poly_eval(const Polynomial& f, const Rational& x) { return f(x); }

inline Polynomial poly_derivative(const Polynomial& f) {
    if (f.degree() < 1) return {};
    std::vector<Rational> v(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) v[i - 1] = f.coeffs()[i] * static_cast<long>(i);
    return Polynomial(std::move(v));
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational& lb = b.leading();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational t = rem[k + db] / lb;
        quo[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= t * b.coeffs()[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// Monic gcd over Q[x]; gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct SquarefreeDecomposition {
    Polynomial squarefree;       ///< f / gcd(f, f'), monic
    Polynomial repeated_factor;  ///< gcd(f, f'), monic
};

inline SquarefreeDecomposition squarefree_part(const Polynomial& f) {
    if (f.is_zero()) throw PreconditionError("squarefree_part of the zero polynomial");
    Polynomial g = poly_gcd(f, poly_derivative(f));
    return {divmod(f, g).first.monic(), g};
}

inline bool is_squarefree(const Polynomial& f) {
    return poly_gcd(f, poly_derivative(f)).degree() == 0;
}

/// f(x + s), by repeated synthetic division.
inline Polynomial taylor_shift(const Polynomial& f, const Rational& s) {
    std::vector<Rational> c(f.coeffs());
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) c[j] += s * c[j + 1];
    return Polynomial(std::move(c));
}

/// Primitive integer multiple of f with positive leading coefficient
/// (denominators cleared, content removed).
inline std::vector<Integer> integer_primitive(const Polynomial& f) {
    if (f.is_zero()) return {};
    Integer l = 1;
    for (const auto& c : f.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Integer> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(num(c) * (l / den(c)));
    Integer g = 0;
    for (const auto& z : v) g = boost::multiprecision::gcd(g, z);
    if (v.back().sign() < 0) g = -g;
    for (auto& z : v) z /= g;
    return v;
}

inline Polynomial from_integers(const std::vector<Integer>& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return Polynomial(std::move(c));
}

/// Distinct rational roots, ascending, via the rational root theorem.
inline std::vector<Rational> rational_roots(const Polynomial& f) {
    if (f.is_zero()) throw PreconditionError("rational_roots of the zero polynomial");
    std::vector<Integer> z = integer_primitive(f);
    std::set<Rational> found;
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) found.insert(Rational(0));
    z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(low));
    if (z.size() >= 2) {
        const Polynomial g = from_integers(z);
        const auto lead_div = divisors(z.back());
        const auto const_div = divisors(z.front());
        for (const auto& e : lead_div) {
            for (const auto& d : const_div) {
                for (int s : {1, -1}) {
                    Rational cand(Integer(d * s), e);
                    if (found.count(cand) == 0 && g(cand) == 0) found.insert(cand);
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

/// y^3 + p y + q with x = y - shift.
struct DepressedCubic {
    Rational p, q, shift;

    Polynomial polynomial() const { return Polynomial({q, p, Rational(0), Rational(1)}); }
    /// The monic cubic in x this was obtained from.
    Polynomial expand() const { return taylor_shift(polynomial(), shift); }
};

/// y^4 + p y^2 + q y + r with x = y - shift.
struct DepressedQuartic {
    Rational p, q, r, shift;

    Polynomial polynomial() const { return Polynomial({r, q, p, Rational(0), Rational(1)}); }
    Polynomial expand() const { return taylor_shift(polynomial(), shift); }
};

inline DepressedCubic depress_cubic(const Polynomial& f) {
    if (f.degree() != 3) throw PreconditionError("depress_cubic: degree must be 3");
    if (!f.is_monic()) throw PreconditionError("depress_cubic: polynomial must be monic");
    const Rational shift = f.coeff(2) / 3;
    const Polynomial g = taylor_shift(f, -shift);
    return {g.coeff(1), g.coeff(0), shift};
}

inline DepressedQuartic depress_quartic(const Polynomial& f) {
    if (f.degree() != 4) throw PreconditionError("depress_quartic: degree must be 4");
    if (!f.is_monic()) throw PreconditionError("depress_quartic: polynomial must be monic");
    const Rational shift = f.coeff(3) / 4;
    const Polynomial g = taylor_shift(f, -shift);
    return {g.coeff(2), g.coeff(1), g.coeff(0), shift};
}

using Depressed = std::variant<DepressedCubic, DepressedQuartic>;

inline Depressed poly_depress(const Polynomial& f) {
    if (f.degree() == 3) return depress_cubic(f);
    if (f.degree() == 4) return depress_quartic(f);
    throw PreconditionError("poly_depress: degree must be 3 or 4");
}

/// Human-readable form, e.g. "x^3 - 15*x - 4". The parser reads it back.
inline std::string to_string(const Polynomial& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        const Rational& c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational a = c.sign() < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty())
            out += to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_string(a) + "*" + mono;
    }
    return out;
}

/// Compact "lhs = rhs" form with the constant term moved right, e.g.
/// "y^3+15y^2+36y = 450".
inline std::string to_equation_string(const Polynomial& f, const std::string& var = "x") {
    std::string lhs;
    for (int k = f.degree(); k >= 1; --k) {
        const Rational& c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational a = c.sign() < 0 ? Rational(-c) : c;
        if (c.sign() < 0)
            lhs += "-";
        else if (!lhs.empty())
            lhs += "+";
        if (a != 1) lhs += is_integer(a) ? to_string(a) : "(" + to_string(a) + ")";
        lhs += var;
        if (k > 1) lhs += "^" + std::to_string(k);
    }
    if (lhs.empty()) lhs = "0";
    return lhs + " = " + to_string(Rational(-f.coeff(0)));
}

}  // namespace radix
