#ifndef SPARSAT_ORACLE_HPP
#define SPARSAT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sparsat/instance.hpp"
#include "sparsat/sparsifier.hpp"

namespace sparsat {

struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleLimit = 24;

namespace detail {

inline void check_oracle_limit(int n, int limit_n) {
    if (n > limit_n)
        throw OracleLimitError("oracle: instance has " + std::to_string(n) +
                               " variables, limit is " + std::to_string(limit_n));
}

inline bool clause_satisfied(const Clause& c, std::uint32_t mask, int want) {
    int cnt = 0;
    for (int x : c.v) cnt += int((mask >> (x - 1)) & 1u);
    return cnt == want;
}

} // namespace detail

// All satisfying assignments in ascending order; bit i-1 of a mask is the
// value of variable i.
inline std::vector<std::uint32_t> enumerate_solutions(const Instance& inst,
                                                      int limit_n = kDefaultOracleLimit) {
    detail::check_oracle_limit(inst.n, limit_n);
    int want = inst.semantics == Semantics::OneInThree ? 1 : 2;
    std::vector<std::uint32_t> out;
    std::uint64_t space = std::uint64_t(1) << inst.n;
    for (std::uint64_t m = 0; m < space; ++m) {
        bool ok = true;
        for (const Clause& c : inst.clauses)
            if (!detail::clause_satisfied(c, std::uint32_t(m), want)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::uint32_t(m));
    }
    return out;
}

inline unsigned long long count_solutions(const Instance& inst,
                                          int limit_n = kDefaultOracleLimit) {
    return enumerate_solutions(inst, limit_n).size();
}

struct MergeCounterexample {
    std::uint32_t solution;
    int a, b;
};

// Certifies that every merged pair agrees in every solution; returns a
// witness otherwise.
inline std::optional<MergeCounterexample> verify_merges(
    const Instance& inst, const EquivRel& eq, int limit_n = kDefaultOracleLimit) {
    if (eq.size() != inst.n)
        throw std::invalid_argument("verify_merges: relation size mismatch");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= inst.n; ++i) {
        int r = eq.find(i);
        if (r != i) pairs.emplace_back(r, i);
    }
    for (std::uint32_t sol : enumerate_solutions(inst, limit_n))
        for (auto [a, b] : pairs)
            if (((sol >> (a - 1)) & 1u) != ((sol >> (b - 1)) & 1u))
                return MergeCounterexample{sol, a, b};
    return std::nullopt;
}

struct SuccCounterexample {
    std::uint32_t solution;
    int x, y;
};

// Checks that every edge x -> y of the domination graph has x >= y in
// every 2-in-3 solution.
inline std::optional<SuccCounterexample> verify_succ_semantics(
    const Instance& inst, const SuccGraph& g, int limit_n = kDefaultOracleLimit) {
    if (inst.semantics != Semantics::TwoInThree)
        throw std::logic_error("verify_succ_semantics: instance must be in 2-in-3 form");
    if (g.n != inst.n)
        throw std::invalid_argument("verify_succ_semantics: graph size mismatch");
    for (std::uint32_t sol : enumerate_solutions(inst, limit_n))
        for (int x = 1; x <= inst.n; ++x)
            for (int y : g.edges[std::size_t(x - 1)])
                if (((sol >> (x - 1)) & 1u) < ((sol >> (y - 1)) & 1u))
                    return SuccCounterexample{sol, x, y};
    return std::nullopt;
}

// Two distinct clauses may share at most one variable (counting
// multiplicity); returns a violating pair otherwise.
inline std::optional<std::pair<Clause, Clause>> pair_uniqueness(const Instance& inst) {
    std::unordered_map<long long, std::size_t> owner;
    long long stride = inst.n + 1;
    for (std::size_t ci = 0; ci < inst.clauses.size(); ++ci) {
        const Clause& c = inst.clauses[ci];
        long long keys[3] = {c.v[0] * stride + c.v[1], c.v[0] * stride + c.v[2],
                             c.v[1] * stride + c.v[2]};
        for (int k = 0; k < 3; ++k) {
            if (k > 0 && keys[k] == keys[k - 1]) continue;
            auto [it, inserted] = owner.try_emplace(keys[k], ci);
            if (!inserted)
                return std::make_pair(inst.clauses[it->second], c);
        }
    }
    return std::nullopt;
}

} // namespace sparsat

#endif
