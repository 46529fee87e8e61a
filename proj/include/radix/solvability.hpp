#pragma once

// Permutation groups on at most 8 points, derived series, and the quintic
// solvability verdict from mod-p factor patterns (Frobenius cycle types).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "radix/errors.hpp"
#include "radix/fp_poly.hpp"
#include "radix/irreducibility.hpp"
#include "radix/polynomial.hpp"

namespace radix {

class Permutation {
   public:
    /// Identity on n points.
    explicit Permutation(std::size_t n = 0) : map_(n) { std::iota(map_.begin(), map_.end(), 0); }

    explicit Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
        std::vector<bool> seen(map_.size());
        for (int v : map_) {
            if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || seen[static_cast<std::size_t>(v)])
                throw PreconditionError("Permutation: mapping is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    /// From disjoint cycles, e.g. from_cycles(5, {{0, 1}, {2, 3, 4}}).
    static Permutation from_cycles(std::size_t n, std::initializer_list<std::vector<int>> cycles) {
        std::vector<int> m(n);
        std::iota(m.begin(), m.end(), 0);
        for (const auto& cyc : cycles)
            for (std::size_t i = 0; i < cyc.size(); ++i) m.at(static_cast<std::size_t>(cyc[i])) = cyc[(i + 1) % cyc.size()];
        return Permutation(std::move(m));
    }

    std::size_t size() const noexcept { return map_.size(); }
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& mapping() const noexcept { return map_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < map_.size(); ++i)
            if (map_[i] != static_cast<int>(i)) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> m(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) m[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
        return Permutation(std::move(m));
    }

    /// (a * b)(i) = a(b(i)): b is applied first.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw PreconditionError("Permutation: degree mismatch");
        std::vector<int> m(a.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.map_[static_cast<std::size_t>(b.map_[i])];
        Permutation p;
        p.map_ = std::move(m);
        return p;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

   private:
    std::vector<int> map_;
};

inline CycleType cycle_type(const Permutation& g) {
    std::vector<bool> seen(g.size());
    std::vector<int> parts;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (auto j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = g(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return CycleType(std::move(parts));
}

/// [a, b] = a^-1 b^-1 a b
inline Permutation commutator(const Permutation& a, const Permutation& b) { return a.inverse() * b.inverse() * a * b; }

inline constexpr std::size_t kMaxPermutationDegree = 8;

/// A permutation group stored as its full element list (sorted) together with
/// the generators it was built from.
class PermGroup {
   public:
    std::size_t degree() const noexcept { return n_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }

    bool contains(const Permutation& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

    bool is_abelian() const {
        for (const auto& a : generators_)
            for (const auto& b : generators_)
                if (a * b != b * a) return false;
        return true;
    }

    friend PermGroup group_closure(const std::vector<Permutation>& generators);

   private:
    std::size_t n_ = 0;
    std::vector<Permutation> elements_;
    std::vector<Permutation> generators_;
};

inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Breadth-first closure of the generators under composition.
inline PermGroup group_closure(const std::vector<Permutation>& generators) {
    if (generators.empty()) throw PreconditionError("group_closure: no generators");
    const std::size_t n = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != n) throw PreconditionError("group_closure: generators of different degree");
    if (n > kMaxPermutationDegree) throw GroupTooLarge("group_closure: more than 8 points");

    std::set<Permutation> seen{Permutation(n)};
    std::deque<Permutation> queue{Permutation(n)};
    while (!queue.empty()) {
        Permutation g = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : generators) {
            Permutation h = s * g;
            if (seen.insert(h).second) {
                if (seen.size() > factorial(kMaxPermutationDegree)) throw GroupTooLarge("group_closure: size bound exceeded");
                queue.push_back(std::move(h));
            }
        }
    }
    PermGroup G;
    G.n_ = n;
    G.elements_.assign(seen.begin(), seen.end());
    G.generators_ = generators;
    if (factorial(n) % G.elements_.size() != 0) throw Error("group_closure: order does not divide n!");
    return G;
}

/// [G, G] as the normal closure in G of the commutators of G's generators.
inline PermGroup derived_subgroup(const PermGroup& G) {
    const std::size_t n = G.degree();
    std::vector<Permutation> gens;
    for (const auto& a : G.generators())
        for (const auto& b : G.generators()) {
            Permutation c = commutator(a, b);
            if (!c.is_identity() && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(std::move(c));
        }
    if (gens.empty()) return group_closure({Permutation(n)});
    PermGroup N = group_closure(gens);
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& s : G.generators()) {
            for (const auto& g : N.generators()) {
                Permutation c = s.inverse() * g * s;
                if (!N.contains(c)) {
                    gens.push_back(std::move(c));
                    N = group_closure(gens);
                    grew = true;
                    break;
                }
            }
            if (grew) break;
        }
    }
    return N;
}

/// G, [G,G], [[G,G],[G,G]], ... up to and including the first term equal to
/// its own derived subgroup.
inline std::vector<PermGroup> derived_series(const PermGroup& G) {
    std::vector<PermGroup> series{G};
    for (;;) {
        PermGroup next = derived_subgroup(series.back());
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
    }
    return series;
}

inline bool is_solvable(const PermGroup& G) { return derived_series(G).back().order() == 1; }

// ---------------------------------------------------------------------------
// quintic verdict
// ---------------------------------------------------------------------------

struct FrobeniusSample {
    std::uint64_t prime;
    CycleType type;
};

/// Factor patterns of f modulo its first usable primes, ascending by prime.
inline std::vector<FrobeniusSample> frobenius_sample(const Polynomial& f, std::size_t max_primes) {
    if (f.degree() != 5) throw PreconditionError("frobenius_sample: degree must be 5");
    if (!is_irreducible_Q(f)) throw PreconditionError("frobenius_sample: polynomial is reducible over Q");
    const Polynomial z = from_integers(integer_primitive(f));
    std::vector<FrobeniusSample> out;
    for (auto p : usable_primes(z, max_primes)) out.push_back({p, factor_degree_pattern(reduce_mod_p(z, p))});
    if (out.empty() && max_primes > 0) throw Error("frobenius_sample: no usable prime among the first 200");
    return out;
}

/// Cycle types of the elements of F20 = AGL(1, 5), the largest solvable
/// transitive subgroup of S5. Its element orders are 1, 2, 4 and 5, giving the
/// types 1^5, 2^2 1, 4 1 and 5; D5 and C5 sit inside it.
inline const std::vector<CycleType>& solvable_quintic_cycle_types() {
    static const std::vector<CycleType> types{CycleType({1, 1, 1, 1, 1}), CycleType({2, 2, 1}), CycleType({4, 1}),
                                              CycleType({5})};
    return types;
}

inline bool allowed_in_solvable_quintic(const CycleType& t) {
    const auto& a = solvable_quintic_cycle_types();
    return std::find(a.begin(), a.end(), t) != a.end();
}

struct SolvableByRadicals {
    std::string reason;
};

struct NotSolvableByRadicals {
    std::uint64_t prime;
    CycleType certificate;
};

struct Undetermined {
    std::size_t primes_tested;
};

using SolvabilityVerdict = std::variant<SolvableByRadicals, NotSolvableByRadicals, Undetermined>;

inline constexpr std::size_t kDefaultMaxPrimes = 50;

/// Solvability by radicals of a squarefree quintic. Reducible quintics are
/// solvable (every factor has degree at most 4). For irreducible ones, a
/// factor pattern outside the F20 table certifies that the Galois group
/// contains A5; if none shows up the answer stays Undetermined.
inline SolvabilityVerdict quintic_verdict(const Polynomial& f, std::size_t max_primes = kDefaultMaxPrimes) {
    if (f.degree() != 5) throw PreconditionError("quintic_verdict: degree must be 5");
    if (!is_squarefree(f)) throw NotSquarefree("quintic_verdict: polynomial has a repeated factor");
    if (!is_irreducible_Q(f)) return SolvableByRadicals{"factors have degree <= 4"};
    const auto samples = frobenius_sample(f, max_primes);
    for (const auto& s : samples)
        if (!allowed_in_solvable_quintic(s.type)) return NotSolvableByRadicals{s.prime, s.type};
    return Undetermined{samples.size()};
}

}  // namespace radix
