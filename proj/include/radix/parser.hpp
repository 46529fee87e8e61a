#pragma once

// Recursive-descent parser for single-variable polynomial equations:
//
//   equation := expr ['=' expr]
//   expr     := term {('+' | '-') term}
//   term     := unary {('*' | '/' | <implicit>) unary}
//   unary    := ('+' | '-') unary | power
//   power    := primary ['^' integer]
//   primary  := integer | identifier | '(' expr ')'
//
// Expansion is exact. Division is allowed by nonzero constants only.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "radix/errors.hpp"
#include "radix/polynomial.hpp"

namespace radix {

struct ParsedInput {
    Polynomial polynomial;
    std::string variable_name;
    std::string source_text;
};

struct ParseOptions {
    /// Accept finite decimals such as 0.25 and convert them exactly (1/4).
    bool decimal_as_ratio = false;
};

inline constexpr int kMaxExponent = 1000;

namespace detail {

class PolynomialParser {
   public:
    PolynomialParser(std::string_view text, ParseOptions opts) : s_(text), opts_(opts) {}

    ParsedInput parse() {
        Polynomial lhs = expr();
        skip_ws();
        if (peek() == '=') {
            ++pos_;
            Polynomial rhs = expr();
            lhs = lhs - rhs;
        }
        skip_ws();
        if (pos_ < s_.size()) syntax("unexpected '" + std::string(1, s_[pos_]) + "'");
        return {std::move(lhs), var_.value_or("x"), std::string(s_)};
    }

   private:
    using Kind = ParseError::Kind;

    [[noreturn]] void syntax(const std::string& msg) const { throw ParseError(Kind::Syntax, pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
    static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                const std::size_t at = pos_;
                Polynomial d = unary();
                if (d.degree() != 0) {
                    pos_ = at;
                    syntax(d.is_zero() ? "division by zero" : "division by a non-constant expression");
                }
                acc = acc.scaled(Rational(1) / d.coeff(0));
            } else if (ident_start(c) || c == '(') {
                acc = acc * unary();  // implicit multiplication: 3x, 2(x+1), (x-1)(x+2)
            } else if (digit(c)) {
                syntax("a number cannot follow an operand without an operator");
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (peek() != '^') return base;
        ++pos_;
        const char c = peek();
        if (c == '-') throw ParseError(Kind::NegativeExponent, pos_, "negative exponent");
        if (!digit(c)) syntax("expected a nonnegative integer exponent");
        const std::size_t start = pos_;
        while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
        const std::string_view digits = s_.substr(start, pos_ - start);
        if (digits.size() > 4 || std::stoi(std::string(digits)) > kMaxExponent) {
            pos_ = start;
            syntax("exponent too large");
        }
        const int e = std::stoi(std::string(digits));
        Polynomial out = Polynomial::constant(Rational(1));
        for (int i = 0; i < e; ++i) out = out * base;
        return out;
    }

    Polynomial primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') syntax("expected ')'");
            ++pos_;
            return inner;
        }
        if (digit(c) || c == '.') return number();
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (!var_)
                var_ = name;
            else if (*var_ != name)
                throw ParseError(Kind::MultipleVariables, start,
                                 "second variable '" + name + "' (already using '" + *var_ + "')");
            return Polynomial::monomial(Rational(1), 1);
        }
        if (c == '\0') syntax("unexpected end of input");
        syntax("unexpected '" + std::string(1, c) + "'");
    }

    Polynomial number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
        Integer whole = start == pos_ ? Integer(0) : Integer(std::string(s_.substr(start, pos_ - start)));
        if (pos_ < s_.size() && s_[pos_] == '.') {
            if (!opts_.decimal_as_ratio) syntax("decimal literals need --decimal-as-ratio; write fractions as a/b");
            ++pos_;
            const std::size_t fstart = pos_;
            while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
            if (fstart == pos_ && start + 1 == pos_) syntax("malformed number");
            Integer scale = 1;
            Integer frac = 0;
            for (std::size_t i = fstart; i < pos_; ++i) {
                frac = frac * 10 + (s_[i] - '0');
                scale *= 10;
            }
            return Polynomial::constant(Rational(whole * scale + frac, scale));
        }
        return Polynomial::constant(Rational(whole));
    }

    std::string_view s_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
    std::optional<std::string> var_;
};

}  // namespace detail

inline ParsedInput parse_polynomial(std::string_view text, ParseOptions opts = {}) {
    return detail::PolynomialParser(text, opts).parse();
}

}  // namespace radix
