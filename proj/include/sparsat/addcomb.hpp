#ifndef SPARSAT_ADDCOMB_HPP
#define SPARSAT_ADDCOMB_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sparsat/f2.hpp"
#include "sparsat/instance.hpp"
#include "sparsat/sparsifier.hpp"

namespace sparsat {

// An ordered family V = (v_1..v_n) of distinct vectors with per-index
// neighbour sets N[i] given as 1-based positions into V.
struct VectorFamily {
    std::size_t d = 0;
    std::vector<BitVec> V;
    std::vector<std::vector<int>> N;

    std::size_t size() const { return V.size(); }
};

// Indices i (1-based) where {v_i + w : w in N_i} differs from N_i as a set.
inline std::vector<int> check_condition_i(const VectorFamily& f) {
    std::vector<int> bad;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::unordered_set<BitVec, BitVecHash> members;
        for (int k : f.N[i]) members.insert(f.V[std::size_t(k - 1)]);
        bool ok = true;
        for (int k : f.N[i])
            if (!members.count(f.V[i] ^ f.V[std::size_t(k - 1)])) {
                ok = false;
                break;
            }
        if (!ok) bad.push_back(int(i) + 1);
    }
    return bad;
}

// Pairs (j, i) with j < i and v_j inside the span of pairwise sums of N_i.
inline std::vector<std::pair<int, int>> check_condition_ii(const VectorFamily& f) {
    std::vector<std::pair<int, int>> bad;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rref span(f.d);
        if (!f.N[i].empty()) {
            const BitVec& anchor = f.V[std::size_t(f.N[i].front() - 1)];
            for (int k : f.N[i]) span.insert(anchor ^ f.V[std::size_t(k - 1)]);
        }
        for (std::size_t j = 0; j < i; ++j)
            if (span.contains(f.V[j])) bad.emplace_back(int(j) + 1, int(i) + 1);
    }
    return bad;
}

namespace detail {

inline std::unordered_map<BitVec, unsigned long long, BitVecHash>
sum_histogram(const std::vector<BitVec>& A, int k) {
    std::unordered_map<BitVec, unsigned long long, BitVecHash> h;
    if (A.empty()) return h;
    if (k == 0) {
        h[BitVec(A.front().width())] = 1;
        return h;
    }
    auto rest = sum_histogram(A, k - 1);
    for (const auto& [x, c] : rest)
        for (const BitVec& a : A) h[x ^ a] += c;
    return h;
}

} // namespace detail

// Exact count of ordered k-tuples from A summing to zero, via the
// convolution split k = floor(k/2) + ceil(k/2).
inline unsigned long long e_k(const std::vector<BitVec>& A, int k) {
    if (k < 2) throw std::invalid_argument("e_k: k must be at least 2");
    if (A.empty()) return 0;
    auto lo = detail::sum_histogram(A, k / 2);
    auto hi = k % 2 == 0 ? lo : detail::sum_histogram(A, k - k / 2);
    unsigned long long total = 0;
    for (const auto& [x, c] : lo) {
        auto it = hi.find(x);
        if (it != hi.end()) total += c * it->second;
    }
    return total;
}

inline std::vector<BitVec> sumset(const std::vector<BitVec>& A) {
    if (A.empty()) throw std::invalid_argument("sumset: empty set");
    std::unordered_set<BitVec, BitVecHash> out;
    for (const BitVec& a : A)
        for (const BitVec& b : A) out.insert(a ^ b);
    return {out.begin(), out.end()};
}

struct Ratio {
    unsigned long long num = 0;
    unsigned long long den = 1;

    void reduce() {
        unsigned long long g = std::gcd(num, den);
        if (g) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Ratio&) const = default;
};

inline Ratio doubling(const std::vector<BitVec>& A) {
    Ratio r{sumset(A).size(), A.size()};
    r.reduce();
    return r;
}

inline unsigned long long total_size(const VectorFamily& f) {
    unsigned long long s = 0;
    for (const auto& ni : f.N) s += ni.size();
    return s;
}

// Extracts the vector family of a twin-free, cycle-free instance: V holds
// the alpha images in a topological order of the domination relation, and
// N_i the images of x_i's neighbours. Throws if twins or cycles remain.
inline VectorFamily family_from_instance(const Instance& inst, const AlphaMap& alpha) {
    if (!find_twins(alpha).empty())
        throw std::invalid_argument("family_from_instance: instance has twins");
    SuccGraph g = succ_relation(inst, alpha);
    if (!find_cycles(g).empty())
        throw std::invalid_argument("family_from_instance: instance has cycles");

    // Kahn topological order, sources first, smallest variable first.
    int n = inst.n;
    std::vector<int> indeg(std::size_t(n) + 1, 0);
    for (int x = 1; x <= n; ++x)
        for (int y : g.edges[std::size_t(x - 1)]) ++indeg[std::size_t(y)];
    std::set<int> ready;
    for (int x = 1; x <= n; ++x)
        if (indeg[std::size_t(x)] == 0) ready.insert(x);
    std::vector<int> order;
    while (!ready.empty()) {
        int x = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(x);
        for (int y : g.edges[std::size_t(x - 1)])
            if (--indeg[std::size_t(y)] == 0) ready.insert(y);
    }
    if (int(order.size()) != n)
        throw std::logic_error("family_from_instance: topological sort failed");

    VectorFamily f;
    f.d = alpha.d;
    std::unordered_map<BitVec, int, BitVecHash> pos;
    for (int x : order) {
        f.V.push_back(alpha.of(x));
        pos[alpha.of(x)] = int(f.V.size());
    }
    for (int x : order) {
        std::vector<int> ni;
        for (int y : neighbours(inst, x)) ni.push_back(pos.at(alpha.of(y)));
        std::sort(ni.begin(), ni.end());
        ni.erase(std::unique(ni.begin(), ni.end()), ni.end());
        f.N.push_back(std::move(ni));
    }
    return f;
}

inline VectorFamily family_from_instance(const Instance& inst) {
    Instance work =
        inst.semantics == Semantics::TwoInThree ? inst : complement(inst);
    return family_from_instance(work, compute_alpha(work));
}

// Family text format: header "f <n> <d>", then n lines
// "<hex vector> : <space-separated member indices of N_i>".
inline std::string serialize_family(const VectorFamily& f) {
    std::ostringstream out;
    out << "f " << f.size() << ' ' << f.d << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << f.V[i].to_hex() << " :";
        for (int k : f.N[i]) out << ' ' << k;
        out << '\n';
    }
    return out.str();
}

inline VectorFamily parse_family(std::string_view text) {
    VectorFamily f;
    bool have_header = false;
    long n = 0;
    for (std::string_view line : detail::split_lines(text)) {
        if (detail::is_blank_or_comment(line)) continue;
        std::istringstream ss{std::string(line)};
        if (!have_header) {
            std::string tag;
            long d;
            if (!(ss >> tag >> n >> d) || tag != "f" || n < 0 || d < 0)
                throw ParseError("malformed family header: " + std::string(line));
            f.d = std::size_t(d);
            have_header = true;
            continue;
        }
        std::string hex, colon;
        if (!(ss >> hex >> colon) || colon != ":")
            throw ParseError("malformed family line: " + std::string(line));
        f.V.push_back(BitVec::from_hex(hex, f.d));
        std::vector<int> ni;
        long k;
        while (ss >> k) {
            if (k < 1 || k > n)
                throw ParseError("family member index out of range: " + std::to_string(k));
            ni.push_back(int(k));
        }
        f.N.push_back(std::move(ni));
    }
    if (!have_header || long(f.V.size()) != n)
        throw ParseError("family line count does not match header");
    return f;
}

} // namespace sparsat

#endif
