#pragma once

#include <string>
#include <vector>

#include "radix/numeric.hpp"
#include "radix/polynomial.hpp"
#include "radix/oracle.hpp"
#include "radix/radical.hpp"

namespace testutil {

using radix::BigFloat;
using radix::Complex;

inline std::vector<Complex> values(const std::vector<radix::Expr>& roots, unsigned bits = 128) {
    std::vector<Complex> out;
    for (const auto& r : roots) out.push_back(radix::eval_numeric(r, bits).value());
    return out;
}

inline Complex cx(const std::string& re, const std::string& im = "0") { return {BigFloat(re), BigFloat(im)}; }

/// Largest pair distance of a greedy perfect matching, or a huge value when the
/// sizes differ.
inline BigFloat multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    radix::PrecisionScope scope(512);
    if (a.size() != b.size()) return BigFloat(1e100);
    BigFloat worst = 0;
    for (const auto& p : radix::greedy_matching(a, b)) worst = boost::multiprecision::max(worst, p.distance);
    return worst;
}

inline BigFloat tol(long bits) {
    radix::PrecisionScope scope(512);
    return radix::pow2(-bits);
}

}  // namespace testutil

namespace radix {

inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << to_string(f); }

}  // namespace radix
