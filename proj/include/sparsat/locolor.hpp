#ifndef SPARSAT_LOCOLOR_HPP
#define SPARSAT_LOCOLOR_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsat/instance.hpp"
#include "sparsat/oracle.hpp"

namespace sparsat {

// colours[v-1] is the colour of vertex v; colours are positive integers
// with the natural order.
using Colouring = std::vector<int>;

// An edge is valid when its maximum colour occurs exactly once, counting a
// repeated vertex with multiplicity.
inline std::optional<Clause> check_lo(const Instance& h, const Colouring& c) {
    if (int(c.size()) != h.n)
        throw std::invalid_argument("check_lo: colouring size mismatch");
    for (int col : c)
        if (col < 1) throw std::invalid_argument("check_lo: colours must be positive");
    for (const Clause& e : h.clauses) {
        int c0 = c[std::size_t(e.v[0] - 1)];
        int c1 = c[std::size_t(e.v[1] - 1)];
        int c2 = c[std::size_t(e.v[2] - 1)];
        int mx = std::max({c0, c1, c2});
        if (int(c0 == mx) + int(c1 == mx) + int(c2 == mx) != 1) return e;
    }
    return std::nullopt;
}

// Pulls a colouring of the quotient hypergraph back through the relation:
// every vertex takes the colour of its class.
inline Colouring lift_colouring(const EquivRel& eq, const Colouring& c_quotient) {
    std::vector<int> reps = eq.representatives();
    if (c_quotient.size() != reps.size())
        throw std::invalid_argument("lift_colouring: colouring does not cover all classes");
    std::vector<int> rep_to_new(std::size_t(eq.size()) + 1, 0);
    for (std::size_t k = 0; k < reps.size(); ++k)
        rep_to_new[std::size_t(reps[k])] = int(k) + 1;
    Colouring out(std::size_t(eq.size()));
    for (int v = 1; v <= eq.size(); ++v)
        out[std::size_t(v - 1)] =
            c_quotient[std::size_t(rep_to_new[std::size_t(eq.find(v))] - 1)];
    return out;
}

// Brute-force LO 2-colouring: colour 2 marks the unique maximum, which is
// exactly a 1-in-3 solution with value 1. Returns the lexicographically
// first solution as a colouring, or nullopt.
inline std::optional<Colouring> brute_lo2(const Instance& h,
                                          int limit_n = kDefaultOracleLimit) {
    Instance as_sat = h;
    as_sat.semantics = Semantics::OneInThree;
    std::vector<std::uint32_t> sols = enumerate_solutions(as_sat, limit_n);
    if (sols.empty()) return std::nullopt;
    Colouring c(std::size_t(h.n));
    for (int v = 1; v <= h.n; ++v)
        c[std::size_t(v - 1)] = 1 + int((sols.front() >> (v - 1)) & 1u);
    return c;
}

// Colouring file: one line "<v> <colour>" per vertex.
inline std::string serialize_colouring(const Colouring& c) {
    std::ostringstream out;
    for (std::size_t v = 0; v < c.size(); ++v)
        out << v + 1 << ' ' << c[v] << '\n';
    return out.str();
}

inline Colouring parse_colouring(std::string_view text) {
    std::vector<std::pair<long, long>> entries;
    long max_v = 0;
    for (std::string_view line : detail::split_lines(text)) {
        if (detail::is_blank_or_comment(line)) continue;
        std::istringstream ss{std::string(line)};
        long v, col;
        if (!(ss >> v >> col) || v < 1 || col < 1)
            throw ParseError("malformed colouring line: " + std::string(line));
        entries.emplace_back(v, col);
        max_v = std::max(max_v, v);
    }
    Colouring c(std::size_t(max_v), 0);
    for (auto [v, col] : entries) c[std::size_t(v - 1)] = int(col);
    for (std::size_t v = 0; v < c.size(); ++v)
        if (c[v] == 0)
            throw ParseError("vertex without colour: " + std::to_string(v + 1));
    return c;
}

} // namespace sparsat

#endif
