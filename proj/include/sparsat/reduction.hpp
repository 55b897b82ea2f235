#ifndef SPARSAT_REDUCTION_HPP
#define SPARSAT_REDUCTION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsat/instance.hpp"
#include "sparsat/oracle.hpp"
#include "sparsat/sparsifier.hpp"

namespace sparsat {

// A non-monotone clause: three signed literals on distinct variables,
// stored sorted by (variable, sign).
struct LiteralClause {
    std::array<int, 3> lits;

    LiteralClause(int a, int b, int c) : lits{a, b, c} {
        std::sort(lits.begin(), lits.end(), [](int x, int y) {
            return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x < y;
        });
    }

    auto operator<=>(const LiteralClause&) const = default;
};

struct LiteralInstance {
    int n = 0;
    std::vector<LiteralClause> clauses;

    void canonicalize() {
        std::sort(clauses.begin(), clauses.end());
        clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    }

    bool operator==(const LiteralInstance&) const = default;
};

// Text format: header "p oitg <n> <m>", then m lines of three nonzero
// integers, negative meaning negated.
inline LiteralInstance parse_literal_instance(std::string_view text,
                                              std::vector<std::string>* warnings = nullptr) {
    LiteralInstance li;
    bool have_header = false;
    long expected_m = 0, lines_read = 0;
    std::set<LiteralClause> seen;
    for (std::string_view line : detail::split_lines(text)) {
        if (detail::is_blank_or_comment(line)) continue;
        std::istringstream ss{std::string(line)};
        if (!have_header) {
            std::string p, fmt;
            long n, m;
            if (!(ss >> p >> fmt >> n >> m) || p != "p" || fmt != "oitg")
                throw ParseError("malformed header: " + std::string(line));
            if (n < 0 || m < 0) throw ParseError("negative counts in header");
            li.n = int(n);
            expected_m = m;
            have_header = true;
            continue;
        }
        long a, b, c;
        if (!(ss >> a >> b >> c))
            throw ParseError("malformed clause line: " + std::string(line));
        for (long x : {a, b, c})
            if (x == 0 || std::abs(x) > li.n)
                throw ParseError("literal out of range: " + std::to_string(x));
        if (std::abs(a) == std::abs(b) || std::abs(a) == std::abs(c) ||
            std::abs(b) == std::abs(c))
            throw ParseError("repeated variable in clause: " + std::string(line));
        if (++lines_read > expected_m)
            throw ParseError("more clause lines than declared in header");
        LiteralClause cl = LiteralClause(int(a), int(b), int(c));
        if (!seen.insert(cl).second) {
            if (warnings)
                warnings->push_back("duplicate clause ignored: " + std::string(line));
            continue;
        }
        li.clauses.push_back(cl);
    }
    if (!have_header) throw ParseError("missing header");
    if (lines_read != expected_m)
        throw ParseError("fewer clause lines than declared in header");
    li.canonicalize();
    return li;
}

inline std::string serialize(const LiteralInstance& li) {
    std::ostringstream out;
    out << "p oitg " << li.n << ' ' << li.clauses.size() << '\n';
    for (const LiteralClause& c : li.clauses)
        out << c.lits[0] << ' ' << c.lits[1] << ' ' << c.lits[2] << '\n';
    return out.str();
}

// Shadow encoding: variable i keeps index i, its negation becomes n+i.
inline Instance to_monotone(const LiteralInstance& li) {
    Instance inst;
    inst.n = 2 * li.n;
    inst.semantics = Semantics::OneInThree;
    for (const LiteralClause& c : li.clauses)
        inst.clauses.emplace_back(c.lits[0] > 0 ? c.lits[0] : li.n - c.lits[0],
                                  c.lits[1] > 0 ? c.lits[1] : li.n - c.lits[1],
                                  c.lits[2] > 0 ? c.lits[2] : li.n - c.lits[2]);
    inst.canonicalize();
    return inst;
}

enum class NonmonotoneStatus { Ok, UnsatDetected };

struct NonmonotoneResult {
    EquivRel eq;        // over the original n variables
    NonmonotoneStatus status = NonmonotoneStatus::Ok;
    EquivRel eq_y;      // the monotone relation over the 2n shadow variables
    Instance y_instance; // the shadow instance that was sparsified
    SparsifyStats stats;
};

// Sparsifies the shadow instance, then propagates merges back through the
// bipartite conflict graph between x-classes and y-classes. A non-bipartite
// conflict graph certifies unsatisfiability.
inline NonmonotoneResult sparsify_nonmonotone(const LiteralInstance& li,
                                              unsigned threads = 1) {
    NonmonotoneResult res{EquivRel(li.n), NonmonotoneStatus::Ok, EquivRel(0), {}, {}};
    res.y_instance = to_monotone(li);
    SparsifyResult sp = sparsify(res.y_instance, threads);
    res.eq_y = sp.eq;
    res.stats = sp.stats;

    // Conflict graph on the merge classes: the class of x_i is adjacent to
    // the class of its shadow y_i. Vertices of a common class share all
    // their neighbours, so working per class is equivalent to the graph on
    // all 2n shadow variables.
    int ny = 2 * li.n;
    std::vector<std::vector<int>> adj(std::size_t(ny) + 1);
    bool self_loop = false;
    for (int i = 1; i <= li.n; ++i) {
        int a = res.eq_y.find(i), b = res.eq_y.find(li.n + i);
        if (a == b) self_loop = true;
        adj[std::size_t(a)].push_back(b);
        adj[std::size_t(b)].push_back(a);
    }
    if (self_loop) {
        res.status = NonmonotoneStatus::UnsatDetected;
        return res;
    }

    // 2-colour each component; side 0 is the side of the component's
    // minimum-index class representative.
    std::vector<int> comp(std::size_t(ny) + 1, 0), side(std::size_t(ny) + 1, 0);
    int ncomp = 0;
    for (int v = 1; v <= ny; ++v) {
        if (res.eq_y.find(v) != v || comp[std::size_t(v)] != 0) continue;
        ++ncomp;
        std::queue<int> bfs;
        bfs.push(v);
        comp[std::size_t(v)] = ncomp;
        side[std::size_t(v)] = 0;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : adj[std::size_t(u)]) {
                if (comp[std::size_t(w)] == 0) {
                    comp[std::size_t(w)] = ncomp;
                    side[std::size_t(w)] = side[std::size_t(u)] ^ 1;
                    bfs.push(w);
                } else if (side[std::size_t(w)] == side[std::size_t(u)]) {
                    res.status = NonmonotoneStatus::UnsatDetected;
                    return res;
                }
            }
        }
    }

    // x_i ~ x_j iff their classes share a component and a side.
    std::map<std::pair<int, int>, int> group_min;
    for (int i = 1; i <= li.n; ++i) {
        int r = res.eq_y.find(i);
        auto key = std::make_pair(comp[std::size_t(r)], side[std::size_t(r)]);
        auto [it, inserted] = group_min.try_emplace(key, i);
        if (!inserted) res.eq.unite(it->second, i);
    }
    return res;
}

// Quotient of a literal instance: variables map to class representatives
// with signs preserved; identical literal triples collapse.
inline LiteralInstance quotient_literals(const LiteralInstance& li, const EquivRel& eq) {
    if (eq.size() != li.n)
        throw std::invalid_argument("quotient_literals: relation size mismatch");
    std::vector<int> reps = eq.representatives();
    std::vector<int> rep_to_new(std::size_t(li.n) + 1, 0);
    for (std::size_t k = 0; k < reps.size(); ++k)
        rep_to_new[std::size_t(reps[k])] = int(k) + 1;
    LiteralInstance out;
    out.n = int(reps.size());
    for (const LiteralClause& c : li.clauses) {
        std::array<int, 3> lits;
        for (int k = 0; k < 3; ++k) {
            int v = std::abs(c.lits[std::size_t(k)]);
            int mapped = rep_to_new[std::size_t(eq.find(v))];
            lits[std::size_t(k)] = c.lits[std::size_t(k)] > 0 ? mapped : -mapped;
        }
        out.clauses.push_back(LiteralClause(lits[0], lits[1], lits[2]));
    }
    out.canonicalize();
    return out;
}

struct ClauseBoundViolation {
    std::size_t quotient_clauses;
    std::size_t shadow_clauses;
};

// Sign-pattern bound: the quotient of the literal instance may carry at
// most 8 clauses per clause of the sparsified shadow instance.
inline std::optional<ClauseBoundViolation> clause_bound_check(const LiteralInstance& li,
                                                              const EquivRel& eq_g,
                                                              const EquivRel& eq_y) {
    std::size_t lhs = quotient_literals(li, eq_g).clauses.size();
    Instance y = to_monotone(li);
    std::size_t rhs = quotient(y, eq_y).instance.clauses.size();
    if (lhs <= 8 * rhs) return std::nullopt;
    return ClauseBoundViolation{lhs, rhs};
}

// All satisfying assignments of a non-monotone 1-in-3 instance, ascending;
// bit i-1 of a mask is the value of variable i.
inline std::vector<std::uint32_t> enumerate_literal_solutions(
    const LiteralInstance& li, int limit_n = kDefaultOracleLimit) {
    detail::check_oracle_limit(li.n, limit_n);
    std::vector<std::uint32_t> out;
    std::uint64_t space = std::uint64_t(1) << li.n;
    for (std::uint64_t m = 0; m < space; ++m) {
        bool ok = true;
        for (const LiteralClause& c : li.clauses) {
            int cnt = 0;
            for (int lit : c.lits) {
                bool val = (m >> (std::abs(lit) - 1)) & 1u;
                cnt += int(lit > 0 ? val : !val);
            }
            if (cnt != 1) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::uint32_t(m));
    }
    return out;
}

} // namespace sparsat

#endif
