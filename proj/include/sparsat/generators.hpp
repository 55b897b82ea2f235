#ifndef SPARSAT_GENERATORS_HPP
#define SPARSAT_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "sparsat/addcomb.hpp"
#include "sparsat/instance.hpp"
#include "sparsat/reduction.hpp"

namespace sparsat {

namespace detail {

// Unbiased bounded draw by rejection, so corpora are reproducible
// bit-exactly across standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Enumerates all candidate triples when that is cheap, otherwise
// rejection-samples; either path is deterministic per seed.
template <typename Accept>
inline std::vector<Clause> sample_triples(int n, std::size_t m, std::mt19937_64& rng,
                                          unsigned long long total, Accept accept) {
    if (m > total) throw std::invalid_argument("requested more clauses than exist");
    if (total <= 1'000'000) {
        std::vector<Clause> pool;
        pool.reserve(std::size_t(total));
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    if (accept(a, b, c)) pool.emplace_back(a, b, c);
        for (std::size_t k = 0; k < m; ++k) {
            std::size_t j = k + std::size_t(uniform_below(rng, pool.size() - k));
            std::swap(pool[k], pool[j]);
        }
        pool.erase(pool.begin() + std::ptrdiff_t(m), pool.end());
        return pool;
    }
    std::set<Clause> chosen;
    while (chosen.size() < m) {
        int a = int(uniform_below(rng, std::uint64_t(n))) + 1;
        int b = int(uniform_below(rng, std::uint64_t(n))) + 1;
        int c = int(uniform_below(rng, std::uint64_t(n))) + 1;
        if (a == b || a == c || b == c || !accept(std::min({a, b, c}),
                                                  a + b + c - std::min({a, b, c}) -
                                                      std::max({a, b, c}),
                                                  std::max({a, b, c})))
            continue;
        chosen.emplace(a, b, c);
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace detail

// The extremal quadratic instance: variables are the vectors of {0,1}^k
// (vector u gets index 1 + value of u), clauses are all unordered triples
// of distinct vectors with XOR zero.
inline Instance gen_xor(int k) {
    if (k < 1 || k > 16) throw std::invalid_argument("gen_xor: k must be in [1,16]");
    Instance inst;
    inst.n = 1 << k;
    inst.semantics = Semantics::OneInThree;
    for (std::uint32_t i = 1; i < std::uint32_t(inst.n); ++i)
        for (std::uint32_t j = i + 1; j < std::uint32_t(inst.n); ++j) {
            std::uint32_t l = i ^ j;
            if (l > j) inst.clauses.emplace_back(int(i) + 1, int(j) + 1, int(l) + 1);
        }
    inst.canonicalize();
    return inst;
}

// The subset-lattice family: V is all indicator vectors of subsets of [d]
// in decreasing order of size (ties by ascending value), and N_S holds
// the subsets of S. Total size is exactly 3^d.
inline VectorFamily gen_subset_family(int d) {
    if (d < 1 || d > 12)
        throw std::invalid_argument("gen_subset_family: d must be in [1,12]");
    VectorFamily f;
    f.d = std::size_t(d);
    std::vector<std::uint32_t> values(std::size_t(1) << d);
    for (std::uint32_t s = 0; s < values.size(); ++s) values[s] = s;
    std::stable_sort(values.begin(), values.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                         int pa = std::popcount(a), pb = std::popcount(b);
                         return pa != pb ? pa > pb : a < b;
                     });
    std::vector<int> pos(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        pos[values[i]] = int(i) + 1;
    for (std::uint32_t s : values) {
        BitVec v = BitVec(std::size_t(d));
        for (int j = 0; j < d; ++j)
            if (s & (1u << j)) v.set(std::size_t(j), true);
        f.V.push_back(std::move(v));
        std::vector<int> ni;
        // All subsets t of s.
        std::uint32_t t = s;
        for (;;) {
            ni.push_back(pos[t]);
            if (t == 0) break;
            t = (t - 1) & s;
        }
        std::sort(ni.begin(), ni.end());
        f.N.push_back(std::move(ni));
    }
    return f;
}

// Satisfiable corpus: plants a hidden assignment with at least one 1 and
// one 0, then samples m distinct clauses it satisfies (1-in-3 semantics).
inline Instance gen_planted(int n, int m, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_planted: n must be at least 3");
    std::mt19937_64 rng(seed);
    std::vector<bool> hidden(std::size_t(n) + 1);
    int ones = 0;
    for (int i = 1; i <= n; ++i) {
        hidden[std::size_t(i)] = detail::uniform_below(rng, 2) == 1;
        ones += hidden[std::size_t(i)];
    }
    if (ones == n) {
        hidden[std::size_t(detail::uniform_below(rng, std::uint64_t(n))) + 1] = false;
        --ones;
    }
    if (ones == 0) {
        hidden[std::size_t(detail::uniform_below(rng, std::uint64_t(n))) + 1] = true;
        ++ones;
    }
    unsigned long long zeros = (unsigned long long)(n - ones);
    unsigned long long total =
        (unsigned long long)(ones) * zeros * (zeros - 1) / 2;
    auto satisfied = [&](int a, int b, int c) {
        return int(hidden[std::size_t(a)]) + int(hidden[std::size_t(b)]) +
                   int(hidden[std::size_t(c)]) == 1;
    };
    Instance inst;
    inst.n = n;
    inst.semantics = Semantics::OneInThree;
    inst.clauses = detail::sample_triples(n, std::size_t(m), rng, total, satisfied);
    inst.canonicalize();
    return inst;
}

inline Instance gen_random(int n, int m, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_random: n must be at least 3");
    std::mt19937_64 rng(seed);
    unsigned long long total =
        (unsigned long long)(n) * std::uint64_t(n - 1) * std::uint64_t(n - 2) / 6;
    Instance inst;
    inst.n = n;
    inst.semantics = Semantics::OneInThree;
    inst.clauses = detail::sample_triples(n, std::size_t(m), rng, total,
                                          [](int, int, int) { return true; });
    inst.canonicalize();
    return inst;
}

inline LiteralInstance gen_random_nonmonotone(int n, int m, std::uint64_t seed) {
    Instance base = gen_random(n, m, seed);
    std::mt19937_64 rng(seed ^ 0x6e6f6e6d6f6e6fULL);
    LiteralInstance li;
    li.n = n;
    for (const Clause& c : base.clauses) {
        std::array<int, 3> lits;
        for (int k = 0; k < 3; ++k)
            lits[std::size_t(k)] =
                detail::uniform_below(rng, 2) ? -c.v[std::size_t(k)] : c.v[std::size_t(k)];
        li.clauses.push_back(LiteralClause(lits[0], lits[1], lits[2]));
    }
    li.canonicalize();
    return li;
}

} // namespace sparsat

#endif
