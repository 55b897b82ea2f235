#ifndef SPARSAT_INSTANCE_HPP
#define SPARSAT_INSTANCE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sparsat/f2.hpp"

namespace sparsat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Semantics { OneInThree, TwoInThree };

// A clause is an unordered triple, stored sorted ascending. Repeated
// indices only arise from quotienting; the parser rejects them.
struct Clause {
    std::array<int, 3> v;

    Clause(int a, int b, int c) : v{a, b, c} { std::sort(v.begin(), v.end()); }

    auto operator<=>(const Clause&) const = default;
};

struct Instance {
    int n = 0;
    Semantics semantics = Semantics::OneInThree;
    std::vector<Clause> clauses; // sorted, deduplicated

    void canonicalize() {
        std::sort(clauses.begin(), clauses.end());
        clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    }

    bool operator==(const Instance&) const = default;
};

// Union-find over 1..n; the representative of a class is its minimum member.
class EquivRel {
public:
    EquivRel() = default;
    explicit EquivRel(int n) : parent_(std::size_t(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int size() const { return int(parent_.size()) - 1; }

    int find(int x) const {
        int r = x;
        while (parent_[std::size_t(r)] != r) r = parent_[std::size_t(r)];
        while (parent_[std::size_t(x)] != r) {
            int next = parent_[std::size_t(x)];
            parent_[std::size_t(x)] = r;
            x = next;
        }
        return r;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[std::size_t(b)] = a;
        return true;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    // Class representatives in ascending order.
    std::vector<int> representatives() const {
        std::vector<int> reps;
        for (int i = 1; i <= size(); ++i)
            if (find(i) == i) reps.push_back(i);
        return reps;
    }

    int num_classes() const {
        int c = 0;
        for (int i = 1; i <= size(); ++i)
            if (find(i) == i) ++c;
        return c;
    }

private:
    mutable std::vector<int> parent_;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

inline bool is_blank_or_comment(std::string_view line) {
    if (line.empty()) return true;
    return line.rfind("c ", 0) == 0 || line == "c";
}

} // namespace detail

// Text format: header "p oit <n> <m>" (1-in-3) or "p o2t3 <n> <m>" (2-in-3),
// then m lines of three space-separated indices. "c " lines are comments.
inline Instance parse_instance(std::string_view text,
                               std::vector<std::string>* warnings = nullptr) {
    Instance inst;
    bool have_header = false;
    long expected_m = 0;
    long lines_read = 0;
    std::set<Clause> seen;
    for (std::string_view line : detail::split_lines(text)) {
        if (detail::is_blank_or_comment(line)) continue;
        std::istringstream ss{std::string(line)};
        if (!have_header) {
            std::string p, fmt;
            long n, m;
            if (!(ss >> p >> fmt >> n >> m) || p != "p")
                throw ParseError("malformed header: " + std::string(line));
            if (fmt == "oit")
                inst.semantics = Semantics::OneInThree;
            else if (fmt == "o2t3")
                inst.semantics = Semantics::TwoInThree;
            else
                throw ParseError("unknown format tag: " + fmt);
            if (n < 0 || m < 0) throw ParseError("negative counts in header");
            inst.n = int(n);
            expected_m = m;
            have_header = true;
            continue;
        }
        long a, b, c;
        if (!(ss >> a >> b >> c))
            throw ParseError("malformed clause line: " + std::string(line));
        std::string rest;
        if (ss >> rest) throw ParseError("trailing tokens on clause line: " + std::string(line));
        for (long x : {a, b, c})
            if (x < 1 || x > inst.n)
                throw ParseError("variable index out of range: " + std::to_string(x));
        if (a == b || a == c || b == c)
            throw ParseError("repeated variable in clause: " + std::string(line));
        if (++lines_read > expected_m)
            throw ParseError("more clause lines than declared in header");
        Clause cl = Clause(int(a), int(b), int(c));
        if (!seen.insert(cl).second) {
            if (warnings)
                warnings->push_back("duplicate clause ignored: " + std::string(line));
            continue;
        }
        inst.clauses.push_back(cl);
    }
    if (!have_header) throw ParseError("missing header");
    if (lines_read != expected_m)
        throw ParseError("fewer clause lines than declared in header");
    inst.canonicalize();
    return inst;
}

inline std::string serialize(const Instance& inst) {
    std::ostringstream out;
    out << "p " << (inst.semantics == Semantics::OneInThree ? "oit" : "o2t3")
        << ' ' << inst.n << ' ' << inst.clauses.size() << '\n';
    for (const Clause& c : inst.clauses)
        out << c.v[0] << ' ' << c.v[1] << ' ' << c.v[2] << '\n';
    return out.str();
}

// Swaps the roles of 0 and 1: an assignment satisfies inst iff its
// bitwise complement satisfies complement(inst).
inline Instance complement(Instance inst) {
    inst.semantics = inst.semantics == Semantics::OneInThree
                         ? Semantics::TwoInThree
                         : Semantics::OneInThree;
    return inst;
}

// One row per clause of the homogeneous relaxation x+y+z = 0 mod 2.
// Repeats inside a triple cancel.
inline F2Matrix clause_matrix(const Instance& inst) {
    if (inst.semantics != Semantics::TwoInThree)
        throw std::logic_error("clause_matrix: instance must be in 2-in-3 form");
    F2Matrix m(std::size_t(inst.n));
    for (const Clause& c : inst.clauses) {
        BitVec row(std::size_t(inst.n));
        for (int x : c.v) row.flip(std::size_t(x - 1));
        m.append_row(std::move(row));
    }
    return m;
}

struct QuotientResult {
    Instance instance;
    std::vector<int> old_to_new; // old_to_new[i-1] = new index of variable i
};

// Maps every variable to its class representative, renumbered
// consecutively in representative order.
inline QuotientResult quotient(const Instance& inst, const EquivRel& eq) {
    if (eq.size() != inst.n)
        throw std::invalid_argument("quotient: relation size mismatch");
    std::vector<int> reps = eq.representatives();
    std::vector<int> rep_to_new(std::size_t(inst.n) + 1, 0);
    for (std::size_t k = 0; k < reps.size(); ++k)
        rep_to_new[std::size_t(reps[k])] = int(k) + 1;
    QuotientResult res;
    res.instance.n = int(reps.size());
    res.instance.semantics = inst.semantics;
    res.old_to_new.resize(std::size_t(inst.n));
    for (int i = 1; i <= inst.n; ++i)
        res.old_to_new[std::size_t(i - 1)] = rep_to_new[std::size_t(eq.find(i))];
    for (const Clause& c : inst.clauses)
        res.instance.clauses.emplace_back(res.old_to_new[std::size_t(c.v[0] - 1)],
                                          res.old_to_new[std::size_t(c.v[1] - 1)],
                                          res.old_to_new[std::size_t(c.v[2] - 1)]);
    res.instance.canonicalize();
    return res;
}

// All y != x sharing a clause with x, ascending.
inline std::vector<int> neighbours(const Instance& inst, int x) {
    if (x < 1 || x > inst.n)
        throw std::out_of_range("neighbours: variable out of range");
    std::set<int> out;
    for (const Clause& c : inst.clauses) {
        if (c.v[0] != x && c.v[1] != x && c.v[2] != x) continue;
        for (int y : c.v)
            if (y != x) out.insert(y);
    }
    return {out.begin(), out.end()};
}

// Merge-map format: header "m <n>", then n lines "<i> <rep(i)>".
inline std::string serialize_merges(const EquivRel& eq) {
    std::ostringstream out;
    out << "m " << eq.size() << '\n';
    for (int i = 1; i <= eq.size(); ++i) out << i << ' ' << eq.find(i) << '\n';
    return out.str();
}

inline EquivRel parse_merges(std::string_view text) {
    EquivRel eq;
    bool have_header = false;
    for (std::string_view line : detail::split_lines(text)) {
        if (detail::is_blank_or_comment(line)) continue;
        std::istringstream ss{std::string(line)};
        if (!have_header) {
            std::string m;
            long n;
            if (!(ss >> m >> n) || m != "m" || n < 0)
                throw ParseError("malformed merge-map header: " + std::string(line));
            eq = EquivRel(int(n));
            have_header = true;
            continue;
        }
        long i, rep;
        if (!(ss >> i >> rep))
            throw ParseError("malformed merge-map line: " + std::string(line));
        if (i < 1 || i > eq.size() || rep < 1 || rep > eq.size())
            throw ParseError("merge-map index out of range: " + std::string(line));
        eq.unite(int(i), int(rep));
    }
    if (!have_header) throw ParseError("missing merge-map header");
    return eq;
}

} // namespace sparsat

#endif
