#pragma once

// Polynomials over prime fields F_p (small p) and the mod-p factor-degree
// machinery used as Frobenius cycle-type evidence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "radix/errors.hpp"
#include "radix/polynomial.hpp"

namespace radix {

inline bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The first `count` primes.
inline std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; out.size() < count; ++n)
        if (is_small_prime(n)) out.push_back(n);
    return out;
}

/// Upper limit on how many primes the mod-p searches look at.
inline constexpr std::size_t kPrimeSearchCap = 200;

class FpPoly {
   public:
    using Residue = std::uint64_t;

    FpPoly(Residue prime, std::vector<Residue> coeffs) : p_(prime), c_(std::move(coeffs)) {
        if (!is_small_prime(prime)) throw PreconditionError("FpPoly: modulus " + std::to_string(prime) + " is not prime");
        if (prime >= (Residue(1) << 31)) throw PreconditionError("FpPoly: modulus too large");
        for (auto& c : c_) c %= p_;
        trim();
    }

    static FpPoly x(Residue prime) { return FpPoly(prime, {0, 1}); }
    static FpPoly one(Residue prime) { return FpPoly(prime, {1}); }

    Residue prime() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }
    Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Residue inverse(Residue a) const {
        // a^(p-2) by square-and-multiply
        Residue result = 1, base = a % p_, e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return result;
    }

    FpPoly monic() const {
        if (c_.empty()) return *this;
        const Residue inv = inverse(c_.back());
        std::vector<Residue> v(c_);
        for (auto& c : v) c = c * inv % p_;
        return FpPoly(p_, std::move(v));
    }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        std::vector<Residue> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
        return FpPoly(a.p_, std::move(v));
    }

    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        std::vector<Residue> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
        return FpPoly(a.p_, std::move(v));
    }

    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
        std::vector<Residue> v(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + a.c_[i] * b.c_[j]) % a.p_;
        return FpPoly(a.p_, std::move(v));
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Residue p_;
    std::vector<Residue> c_;
};

inline std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw PreconditionError("FpPoly division by zero");
    const auto p = a.prime();
    if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
    std::vector<FpPoly::Residue> rem(a.coeffs());
    std::vector<FpPoly::Residue> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const auto inv = b.inverse(b.coeffs().back());
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quo.size(); k-- > 0;) {
        const auto t = rem[k + db] * inv % p;
        quo[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = (rem[k + j] + p - t * b.coeffs()[j] % p) % p;
    }
    rem.resize(db);
    return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

inline FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

/// Monic gcd.
inline FpPoly poly_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline FpPoly poly_derivative(const FpPoly& f) {
    if (f.degree() < 1) return FpPoly(f.prime(), {});
    std::vector<FpPoly::Residue> v(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) v[i - 1] = f.coeffs()[i] * (i % f.prime()) % f.prime();
    return FpPoly(f.prime(), std::move(v));
}

/// base^e mod m, by repeated squaring.
inline FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& m) {
    FpPoly result = FpPoly::one(base.prime()) % m;
    base = base % m;
    while (e > 0) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return result;
}

/// Coefficientwise reduction of a rational polynomial modulo `prime`.
/// Throws BadPrime when the prime divides a denominator or kills the leading coefficient.
inline FpPoly reduce_mod_p(const Polynomial& f, std::uint64_t prime) {
    if (!is_small_prime(prime)) throw PreconditionError("reduce_mod_p: " + std::to_string(prime) + " is not prime");
    if (f.is_zero()) throw PreconditionError("reduce_mod_p of the zero polynomial");
    const Integer P(prime);
    std::vector<FpPoly::Residue> v;
    v.reserve(f.coeffs().size());
    FpPoly scratch(prime, {});
    for (const auto& c : f.coeffs()) {
        Integer d = den(c) % P;
        if (d == 0) throw BadPrime("prime " + std::to_string(prime) + " divides a coefficient denominator");
        Integer n = num(c) % P;
        if (n < 0) n += P;
        const auto nr = static_cast<FpPoly::Residue>(n);
        const auto dr = static_cast<FpPoly::Residue>(d);
        v.push_back(nr * scratch.inverse(dr) % prime);
    }
    if (v.back() == 0) throw BadPrime("prime " + std::to_string(prime) + " divides the leading coefficient");
    return FpPoly(prime, std::move(v));
}

/// Multiset of positive integers, kept sorted in descending order.
struct CycleType {
    std::vector<int> parts;

    CycleType() = default;
    explicit CycleType(std::vector<int> p) : parts(std::move(p)) { std::sort(parts.begin(), parts.end(), std::greater<>()); }

    int total() const {
        int s = 0;
        for (int x : parts) s += x;
        return s;
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// "(3,1,1)"
inline std::string to_string(const CycleType& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.parts.size(); ++i) s += (i ? "," : "") + std::to_string(t.parts[i]);
    return s + ")";
}

/// Degrees of the irreducible factors of a squarefree g over F_p, by
/// distinct-degree factorization.
inline CycleType factor_degree_pattern(const FpPoly& g) {
    if (g.degree() < 1) throw PreconditionError("factor_degree_pattern: degree must be positive");
    const auto p = g.prime();
    FpPoly rest = g.monic();
    if (poly_gcd(rest, poly_derivative(rest)).degree() != 0)
        throw NotSquarefree("polynomial is not squarefree mod " + std::to_string(p));

    std::vector<int> parts;
    const FpPoly x = FpPoly::x(p);
    FpPoly h = x % rest;  // invariant: h = x^(p^(d-1)) mod rest
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = powmod(h, p, rest);
        FpPoly block = poly_gcd(rest, h - x);
        if (block.degree() > 0) {
            for (int i = 0; i < block.degree() / d; ++i) parts.push_back(d);
            rest = divmod(rest, block).first;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) parts.push_back(rest.degree());
    return CycleType(std::move(parts));
}

/// Primes among the first kPrimeSearchCap for which f reduces to a squarefree
/// polynomial of the same degree, at most `max_count` of them, ascending.
inline std::vector<std::uint64_t> usable_primes(const Polynomial& f, std::size_t max_count) {
    std::vector<std::uint64_t> out;
    for (auto p : first_primes(kPrimeSearchCap)) {
        if (out.size() >= max_count) break;
        try {
            FpPoly g = reduce_mod_p(f, p);
            if (poly_gcd(g, poly_derivative(g)).degree() == 0) out.push_back(p);
        } catch (const BadPrime&) {
        }
    }
    return out;
}

}  // namespace radix
