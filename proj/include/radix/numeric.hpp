#pragma once

// Arbitrary-precision real and complex primitives shared by the radical
// evaluator and the root oracle. Nothing else is shared between the two.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

#include "radix/rational.hpp"

namespace radix {

using BigFloat = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 2; }

/// Sets the default precision of newly created BigFloats for the lifetime of
/// the scope. Values created inside the scope carry (at least) `bits` bits.
class PrecisionScope {
   public:
    explicit PrecisionScope(unsigned bits) : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

   private:
    unsigned saved_;
};

inline BigFloat to_bigfloat(const Rational& r) { return BigFloat(r); }

/// 2^e
inline BigFloat pow2(long e) { return boost::multiprecision::ldexp(BigFloat(1), static_cast<int>(e)); }

inline BigFloat pi() {
    BigFloat r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

struct Complex {
    BigFloat re{0}, im{0};

    Complex() = default;
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) { normalize(); }
    explicit Complex(const Rational& r) : re(to_bigfloat(r)), im(0) {}

    /// MPFR keeps signed zeros; a -0 imaginary part would put real negative
    /// values on the wrong side of the principal-branch cut.
    void normalize() {
        if (im == 0) im = 0;
        if (re == 0) re = 0;
    }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {BigFloat(-a.re), BigFloat(-a.im)}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

inline BigFloat abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

/// e^(i theta)
inline Complex expi(const BigFloat& theta) { return {boost::multiprecision::cos(theta), boost::multiprecision::sin(theta)}; }

/// e^(2 pi i j / k), exact on the axes.
inline Complex unit_root(long k, long j) {
    j %= k;
    if (j < 0) j += k;
    if (j == 0) return {BigFloat(1), BigFloat(0)};
    if (2 * j == k) return {BigFloat(-1), BigFloat(0)};
    if (4 * j == k) return {BigFloat(0), BigFloat(1)};
    if (4 * j == 3 * k) return {BigFloat(0), BigFloat(-1)};
    return expi(2 * pi() * j / k);
}

/// Principal k-th root: argument in (-pi/k, pi/k].
inline Complex principal_root(const Complex& z, unsigned k) {
    if (z.re == 0 && z.im == 0) return {};
    BigFloat r = abs(z);
    BigFloat rho;
    mpfr_rootn_ui(rho.backend().data(), r.backend().data(), k, MPFR_RNDN);
    if (z.im == 0 && z.re > 0) return {rho, BigFloat(0)};
    BigFloat theta = boost::multiprecision::atan2(z.im, z.re);
    Complex u = expi(BigFloat(theta / k));
    return {rho * u.re, rho * u.im};
}

/// Decimal rendering with `digits` significant digits.
inline std::string to_decimal(const BigFloat& x, unsigned digits) {
    if (x == 0) return "0";
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

}  // namespace radix
