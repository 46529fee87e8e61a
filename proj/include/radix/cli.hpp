#pragma once

// Command implementations behind the `radix` executable. Each command writes
// to the given streams and returns the process exit code.

#include <cstdlib>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "radix/closed_form.hpp"
#include "radix/errors.hpp"
#include "radix/oracle.hpp"
#include "radix/parser.hpp"
#include "radix/solvability.hpp"

namespace radix::cli {

enum ExitCode : int { kSuccess = 0, kInternalError = 1, kUsageError = 2, kVerificationFailure = 3 };

enum class OutputFormat { Text, Json, Latex };

inline constexpr unsigned kDefaultPrecision = 128;
inline constexpr unsigned kMinPrecision = 32;

/// RADIX_DEFAULT_PRECISION if set to a valid bit count, otherwise 128.
inline unsigned default_precision() {
    const char* env = std::getenv("RADIX_DEFAULT_PRECISION");
    if (!env || !*env) return kDefaultPrecision;
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(env, &used);
        if (used == std::string(env).size() && v >= kMinPrecision && v <= 65536) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    return kDefaultPrecision;
}

struct CommandOptions {
    std::string input;
    MethodPreference method = MethodPreference::Auto;
    unsigned precision = kDefaultPrecision;
    OutputFormat format = OutputFormat::Text;
    std::size_t max_primes = kDefaultMaxPrimes;
    bool verbose = false;
    bool decimal_as_ratio = false;
};

using json = nlohmann::ordered_json;

namespace detail {

inline unsigned display_digits(unsigned bits) { return static_cast<unsigned>(bits * 0.30102999566398120); }

/// Decimal string; magnitudes within the error radius print as 0.
inline std::string approx_component(const BigFloat& x, const BigFloat& err, unsigned bits) {
    if (boost::multiprecision::abs(x) <= err) return "0";
    return to_decimal(x, display_digits(bits));
}

inline std::string approx_text(const ComplexApprox& a) {
    const std::string re = approx_component(a.real, a.error_radius, a.precision_bits);
    const std::string im = approx_component(a.imag, a.error_radius, a.precision_bits);
    if (im == "0") return re;
    const bool neg = im.front() == '-';
    const std::string mag = neg ? im.substr(1) : im;
    if (re == "0") return (neg ? "-" : "") + mag + "i";
    return re + (neg ? " - " : " + ") + mag + "i";
}

inline std::string short_decimal(const BigFloat& x) { return to_decimal(x, 6); }

inline BigFloat tolerance_for(unsigned bits) {
    PrecisionScope scope(4 * bits);
    return pow2(-static_cast<long>(bits) / 2);
}

inline json rational_json(const Rational& r) { return json{{"num", num(r).str()}, {"den", den(r).str()}}; }

inline json coefficients_json(const Polynomial& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(rational_json(c));
    return arr;
}

inline json base_document(const std::string& input, const Polynomial& f, const std::string& method) {
    json doc;
    doc["input"] = input;
    doc["degree"] = f.degree();
    doc["coefficients"] = coefficients_json(f);
    doc["method"] = method;
    doc["roots"] = json::array();
    doc["casus_irreducibilis"] = nullptr;
    doc["classification"] = nullptr;
    doc["verification"] = nullptr;
    doc["verdict"] = nullptr;
    return doc;
}

struct Parsed {
    ParsedInput in;
};

inline int report_error(std::ostream& err, int code, const std::string& msg) {
    err << "error: " << msg << "\n";
    return code;
}

/// Runs `body`, mapping library exceptions onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return report_error(err, kUsageError, e.what());
    } catch (const PreconditionError& e) {
        return report_error(err, kUsageError, e.what());
    } catch (const std::exception& e) {
        return report_error(err, kInternalError, e.what());
    }
}

inline void print_resolvents(std::ostream& out, const Polynomial& f) {
    if (f.degree() != 4) return;
    const DepressedQuartic d = depress_quartic(f.monic());
    out << "depressed: " << to_string(d.polynomial(), "y");
    if (d.shift > 0) out << "  (x = y - " << to_string(d.shift) << ")";
    if (d.shift < 0) out << "  (x = y + " << to_string(Rational(-d.shift)) << ")";
    out << "\n";
    if (d.q == 0) return;
    out << "ferrari resolvent: " << to_equation_string(ferrari_resolvent(d.polynomial()), "y") << "\n";
    out << "ferrari resolvent (classical form): " << to_equation_string(ferrari_resolvent_classical(d.polynomial()), "y")
        << "\n";
    out << "euler resolvent: " << to_equation_string(euler_resolvent(d), "z") << "\n";
}

}  // namespace detail

inline int cmd_solve(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&]() -> int {
        if (opt.precision < kMinPrecision) return detail::report_error(err, kUsageError, "precision must be at least 32 bits");
        const ParsedInput in = parse_polynomial(opt.input, {opt.decimal_as_ratio});
        const Polynomial& f = in.polynomial;
        const int deg = f.degree();
        if (deg < 1 || deg > 4) {
            std::string msg = "solve handles degrees 1 to 4, got degree " + std::to_string(std::max(deg, 0));
            if (deg == 5) msg += "; use `radix galois` for quintics";
            return detail::report_error(err, kUsageError, msg);
        }
        const SolutionSet sol = solve_any(f, opt.method);
        std::vector<ComplexApprox> approx;
        for (const auto& r : sol.roots) approx.push_back(eval_numeric(r, opt.precision));
        const VerificationReport rep = verify_solution_set(sol.roots, f, opt.precision, detail::tolerance_for(opt.precision));
        const int code = rep.all_matched ? kSuccess : kVerificationFailure;

        if (opt.format == OutputFormat::Json) {
            json doc = detail::base_document(in.source_text, f, to_string(sol.method));
            for (std::size_t i = 0; i < sol.roots.size(); ++i) {
                const auto& a = approx[i];
                doc["roots"].push_back(json{
                    {"radical", render(sol.roots[i])},
                    {"latex", render(sol.roots[i], RenderFormat::Latex)},
                    {"approx",
                     {{"re", detail::approx_component(a.real, a.error_radius, opt.precision)},
                      {"im", detail::approx_component(a.imag, a.error_radius, opt.precision)},
                      {"err", detail::short_decimal(a.error_radius)}}}});
            }
            if (sol.method == Method::Cardano) doc["casus_irreducibilis"] = sol.casus_irreducibilis;
            if (sol.classification) doc["classification"] = to_string(*sol.classification);
            doc["verification"] = json{{"all_matched", rep.all_matched}, {"max_residual", detail::short_decimal(rep.max_residual)}};
            out << doc.dump(2) << "\n";
            return code;
        }

        const RenderFormat rf = opt.format == OutputFormat::Latex ? RenderFormat::Latex : RenderFormat::Text;
        out << "input: " << in.source_text << "\n";
        out << "polynomial: " << to_string(f, in.variable_name) << "\n";
        out << "degree: " << deg << "\n";
        out << "method: " << to_string(sol.method) << "\n";
        if (sol.method == Method::Cardano) out << "casus_irreducibilis: " << (sol.casus_irreducibilis ? "true" : "false") << "\n";
        if (sol.classification) out << "classification: " << to_string(*sol.classification) << "\n";
        if (opt.verbose) detail::print_resolvents(out, f);
        out << "roots:\n";
        for (std::size_t i = 0; i < sol.roots.size(); ++i) {
            out << "  " << in.variable_name << i + 1 << " = " << render(sol.roots[i], rf) << "\n";
            out << "     ~ " << detail::approx_text(approx[i]) << "\n";
        }
        out << "verification: all_matched=" << (rep.all_matched ? "true" : "false")
            << " max_residual=" << detail::short_decimal(rep.max_residual) << " precision=" << opt.precision << "\n";
        return code;
    });
}

inline int cmd_galois(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&]() -> int {
        const ParsedInput in = parse_polynomial(opt.input, {opt.decimal_as_ratio});
        const Polynomial& f = in.polynomial;
        if (f.degree() != 5)
            return detail::report_error(err, kUsageError,
                                        "galois expects a quintic, got degree " + std::to_string(std::max(f.degree(), 0)));

        std::string status, headline;
        json verdict;
        if (!is_squarefree(f)) {
            status = "solvable";
            headline = "SOLVABLE BY RADICALS (repeated factor, every factor has degree <= 4)";
            verdict = json{{"status", status}, {"reason", "repeated factor"}, {"prime", nullptr}, {"cycle_type", nullptr}, {"primes_tested", nullptr}};
        } else {
            const SolvabilityVerdict v = quintic_verdict(f, opt.max_primes);
            if (const auto* s = std::get_if<SolvableByRadicals>(&v)) {
                status = "solvable";
                headline = "SOLVABLE BY RADICALS (reducible: " + s->reason + ")";
                verdict = json{{"status", status}, {"reason", s->reason}, {"prime", nullptr}, {"cycle_type", nullptr}, {"primes_tested", nullptr}};
            } else if (const auto* n = std::get_if<NotSolvableByRadicals>(&v)) {
                status = "not_solvable";
                headline = "NOT SOLVABLE BY RADICALS\nwitness: p = " + std::to_string(n->prime) + ", cycle type " +
                           to_string(n->certificate) + " does not occur in any solvable transitive subgroup of S5";
                verdict = json{{"status", status}, {"reason", "forbidden cycle type"}, {"prime", n->prime},
                               {"cycle_type", n->certificate.parts}, {"primes_tested", nullptr}};
            } else {
                const auto& u = std::get<Undetermined>(v);
                status = "undetermined";
                headline = "UNDETERMINED after " + std::to_string(u.primes_tested) +
                           " primes (heuristically solvable: every cycle type fits F20)";
                verdict = json{{"status", status}, {"reason", "no forbidden cycle type observed"}, {"prime", nullptr},
                               {"cycle_type", nullptr}, {"primes_tested", u.primes_tested}};
            }
        }

        if (opt.format == OutputFormat::Json) {
            json doc = detail::base_document(in.source_text, f, "galois");
            doc["verdict"] = verdict;
            out << doc.dump(2) << "\n";
            return kSuccess;
        }
        out << "input: " << in.source_text << "\n";
        out << "polynomial: " << to_string(f, in.variable_name) << "\n";
        if (opt.verbose && status != "solvable" && is_squarefree(f)) {
            for (const auto& s : frobenius_sample(f, opt.max_primes))
                out << "  p = " << s.prime << ": " << to_string(s.type) << "\n";
        }
        out << "verdict: " << headline << "\n";
        return kSuccess;
    });
}

inline int cmd_verify(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&]() -> int {
        if (opt.precision < kMinPrecision) return detail::report_error(err, kUsageError, "precision must be at least 32 bits");
        const ParsedInput in = parse_polynomial(opt.input, {opt.decimal_as_ratio});
        const Polynomial& f = in.polynomial;
        const int deg = f.degree();
        if (deg < 1 || deg > 4) {
            std::string msg = "verify handles degrees 1 to 4, got degree " + std::to_string(std::max(deg, 0));
            if (deg == 5) msg += "; use `radix galois` for quintics";
            return detail::report_error(err, kUsageError, msg);
        }
        const BigFloat tol = detail::tolerance_for(opt.precision);

        std::vector<SolutionSet> sols;
        if (deg == 4) {
            sols.push_back(solve_any(f, MethodPreference::Ferrari));
            sols.push_back(solve_any(f, MethodPreference::Euler));
        } else {
            sols.push_back(solve_any(f, opt.method));
        }

        bool ok = true;
        json methods = json::array();
        std::vector<std::string> lines;
        std::vector<std::vector<ComplexApprox>> values;
        for (std::size_t i = 0; i < sols.size(); ++i) {
            const VerificationReport rep = verify_solution_set(sols[i].roots, f, opt.precision, tol);
            ok = ok && rep.all_matched;
            const std::string label = deg == 4 ? (i == 0 ? "ferrari" : "euler") : to_string(sols[i].method);
            const std::string used = to_string(sols[i].method);
            lines.push_back("method " + label + (used == label ? "" : " (" + used + ")") + ": oracle all_matched=" +
                            (rep.all_matched ? "true" : "false") + " max_residual=" + detail::short_decimal(rep.max_residual));
            methods.push_back(json{{"method", label}, {"used", used}, {"all_matched", rep.all_matched},
                                   {"max_residual", detail::short_decimal(rep.max_residual)}});
            std::vector<ComplexApprox> v;
            for (const auto& r : sols[i].roots) v.push_back(eval_numeric(r, opt.precision));
            values.push_back(std::move(v));
        }

        std::optional<bool> cross;
        BigFloat worst = 0;
        if (sols.size() == 2) {
            PrecisionScope scope(4 * opt.precision);
            std::vector<Complex> a, b;
            for (const auto& v : values[0]) a.push_back(v.value());
            for (const auto& v : values[1]) b.push_back(v.value());
            cross = true;
            for (const auto& p : greedy_matching(a, b)) {
                worst = boost::multiprecision::max(worst, p.distance);
                if (p.distance > tol + values[0][p.radical_index].error_radius + values[1][p.oracle_index].error_radius)
                    cross = false;
            }
            ok = ok && *cross;
        }

        if (opt.format == OutputFormat::Json) {
            json doc;
            doc["input"] = in.source_text;
            doc["degree"] = deg;
            doc["coefficients"] = detail::coefficients_json(f);
            doc["methods"] = methods;
            doc["cross_method_matched"] = cross ? json(*cross) : json(nullptr);
            doc["all_matched"] = ok;
            out << doc.dump(2) << "\n";
            return ok ? kSuccess : kVerificationFailure;
        }
        out << "input: " << in.source_text << "\n";
        out << "polynomial: " << to_string(f, in.variable_name) << "\n";
        if (opt.verbose) detail::print_resolvents(out, f);
        for (const auto& l : lines) out << l << "\n";
        if (cross)
            out << "cross-method: " << (*cross ? "matched" : "MISMATCH") << " (max distance " << detail::short_decimal(worst)
                << ")\n";
        else
            out << "cross-method: single method\n";
        out << "result: " << (ok ? "all matched" : "VERIFICATION FAILED") << "\n";
        return ok ? kSuccess : kVerificationFailure;
    });
}

}  // namespace radix::cli
