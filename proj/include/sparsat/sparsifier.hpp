#ifndef SPARSAT_SPARSIFIER_HPP
#define SPARSAT_SPARSIFIER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <thread>
#include <unordered_map>
#include <vector>

#include "sparsat/f2.hpp"
#include "sparsat/instance.hpp"

namespace sparsat {

// Injective (on twin-free instances) embedding of variables into the
// quotient space of the homogeneous clause relaxation. image[i-1] is the
// coordinate vector of variable i on the non-pivot columns.
struct AlphaMap {
    std::size_t d = 0;
    std::vector<BitVec> image;
    Rref basis{0};

    const BitVec& of(int var) const { return image[std::size_t(var - 1)]; }
};

inline AlphaMap compute_alpha(const Instance& inst) {
    AlphaMap a;
    a.basis = rref(clause_matrix(inst));
    std::size_t n = std::size_t(inst.n);
    std::vector<std::size_t> free_cols;
    {
        const auto& piv = a.basis.pivots();
        std::size_t p = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (p < piv.size() && piv[p] == col)
                ++p;
            else
                free_cols.push_back(col);
        }
    }
    a.d = free_cols.size();
    a.image.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVec residue = a.basis.reduce(BitVec::unit(n, i));
        BitVec img(a.d);
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            if (residue.get(free_cols[k])) img.set(k, true);
        a.image.push_back(std::move(img));
    }
    return a;
}

// Groups of variables with equal alpha image (size >= 2), each group and
// the group list sorted ascending.
inline std::vector<std::vector<int>> find_twins(const AlphaMap& alpha) {
    std::unordered_map<BitVec, std::vector<int>, BitVecHash> buckets;
    for (std::size_t i = 0; i < alpha.image.size(); ++i)
        buckets[alpha.image[i]].push_back(int(i) + 1);
    std::vector<std::vector<int>> groups;
    for (auto& [img, vars] : buckets)
        if (vars.size() >= 2) groups.push_back(std::move(vars));
    std::sort(groups.begin(), groups.end());
    return groups;
}

// Span of pairwise sums of alpha images over the neighbourhood of x.
// With anchor z1, span{a(z1)+a(z)} equals span of all pairwise sums.
inline Rref succ_space(const Instance& inst, const AlphaMap& alpha, int x) {
    Rref span(alpha.d);
    std::vector<int> nb = neighbours(inst, x);
    if (nb.empty()) return span;
    const BitVec& anchor = alpha.of(nb.front());
    for (int z : nb) span.insert(anchor ^ alpha.of(z));
    return span;
}

// Directed graph of the domination relation: edge x -> y iff some even
// subset of x's neighbour images sums to a(y). Self-loops are dropped.
struct SuccGraph {
    int n = 0;
    std::vector<std::vector<int>> edges; // edges[x-1] = successors of x
};

inline SuccGraph succ_relation(const Instance& inst, const AlphaMap& alpha,
                               unsigned threads = 1) {
    SuccGraph g;
    g.n = inst.n;
    g.edges.assign(std::size_t(inst.n), {});
    auto work = [&](int lo, int hi) {
        for (int x = lo; x < hi; ++x) {
            Rref span = succ_space(inst, alpha, x);
            for (int y = 1; y <= inst.n; ++y) {
                if (y == x) continue;
                if (span.contains(alpha.of(y)))
                    g.edges[std::size_t(x - 1)].push_back(y);
            }
        }
    };
    if (threads <= 1 || inst.n < 64) {
        work(1, inst.n + 1);
    } else {
        std::vector<std::thread> pool;
        int chunk = (inst.n + int(threads) - 1) / int(threads);
        for (int lo = 1; lo <= inst.n; lo += chunk)
            pool.emplace_back(work, lo, std::min(lo + chunk, inst.n + 1));
        for (auto& t : pool) t.join();
    }
    return g;
}

// Strongly connected components of size >= 2 (iterative Tarjan), each
// component and the list sorted ascending.
inline std::vector<std::vector<int>> find_cycles(const SuccGraph& g) {
    int n = g.n;
    std::vector<int> index(std::size_t(n) + 1, -1), low(std::size_t(n) + 1, 0);
    std::vector<bool> on_stack(std::size_t(n) + 1, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> out;
    int counter = 0;

    struct Frame {
        int v;
        std::size_t next_edge;
    };
    std::vector<Frame> call;
    for (int root = 1; root <= n; ++root) {
        if (index[std::size_t(root)] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            int v = f.v;
            if (f.next_edge == 0) {
                index[std::size_t(v)] = low[std::size_t(v)] = counter++;
                stack.push_back(v);
                on_stack[std::size_t(v)] = true;
            }
            const auto& succ = g.edges[std::size_t(v - 1)];
            bool descended = false;
            while (f.next_edge < succ.size()) {
                int w = succ[f.next_edge++];
                if (index[std::size_t(w)] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[std::size_t(w)])
                    low[std::size_t(v)] =
                        std::min(low[std::size_t(v)], index[std::size_t(w)]);
            }
            if (descended) continue;
            if (low[std::size_t(v)] == index[std::size_t(v)]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[std::size_t(w)] = false;
                    comp.push_back(w);
                } while (w != v);
                if (comp.size() >= 2) {
                    std::sort(comp.begin(), comp.end());
                    out.push_back(std::move(comp));
                }
            }
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().v;
                low[std::size_t(parent)] =
                    std::min(low[std::size_t(parent)], low[std::size_t(v)]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SparsifyStats {
    int rounds = 0;
    int twin_merges = 0;
    int cycle_merges = 0;
    int n_in = 0;
    std::size_t m_in = 0;
    int n_out = 0;
    std::size_t m_out = 0;
    double exponent_estimate = 0.0;
};

struct SparsifyResult {
    EquivRel eq;
    Instance out;
    SparsifyStats stats;
};

namespace detail {

// Representative original index for each quotient variable: the first old
// index mapped to it (which is the class minimum, by construction).
inline std::vector<int> new_to_old(const std::vector<int>& old_to_new, int n_new) {
    std::vector<int> rep(std::size_t(n_new) + 1, 0);
    for (std::size_t i = 0; i < old_to_new.size(); ++i)
        if (rep[std::size_t(old_to_new[i])] == 0)
            rep[std::size_t(old_to_new[i])] = int(i) + 1;
    return rep;
}

} // namespace detail

// Merges twins, then domination cycles, recomputing the quotient from
// scratch each round, until the instance is twin-free and cycle-free.
inline SparsifyResult sparsify(const Instance& inst, unsigned threads = 1) {
    bool was_one_in_three = inst.semantics == Semantics::OneInThree;
    Instance work = was_one_in_three ? complement(inst) : inst;

    SparsifyResult res{EquivRel(inst.n), {}, {}};
    res.stats.n_in = inst.n;
    res.stats.m_in = inst.clauses.size();

    Instance cur = work;
    std::vector<int> cur_rep(std::size_t(inst.n) + 1);
    for (int i = 0; i <= inst.n; ++i) cur_rep[std::size_t(i)] = i;

    for (;;) {
        AlphaMap alpha = compute_alpha(cur);
        std::vector<std::vector<int>> groups = find_twins(alpha);
        bool twins = !groups.empty();
        if (!twins) {
            SuccGraph g = succ_relation(cur, alpha, threads);
            groups = find_cycles(g);
            if (groups.empty()) break;
        }
        for (const auto& group : groups)
            for (std::size_t k = 1; k < group.size(); ++k) {
                res.eq.unite(cur_rep[std::size_t(group[0])],
                             cur_rep[std::size_t(group[k])]);
                (twins ? res.stats.twin_merges : res.stats.cycle_merges) += 1;
            }
        ++res.stats.rounds;
        QuotientResult q = quotient(work, res.eq);
        cur = std::move(q.instance);
        cur_rep = detail::new_to_old(q.old_to_new, cur.n);
    }

    res.out = was_one_in_three ? complement(cur) : cur;
    res.stats.n_out = res.out.n;
    res.stats.m_out = res.out.clauses.size();
    if (res.stats.n_out > 1 && res.stats.m_out > 0)
        res.stats.exponent_estimate =
            std::log(double(res.stats.m_out)) / std::log(double(res.stats.n_out));
    return res;
}

// The quadratic baseline: whenever two clauses share two variables, their
// residual variables agree in all solutions and are merged.
inline std::pair<EquivRel, Instance> baseline_pair_merge(const Instance& inst) {
    EquivRel eq(inst.n);
    Instance cur = inst;
    std::vector<int> cur_rep(std::size_t(inst.n) + 1);
    for (int i = 0; i <= inst.n; ++i) cur_rep[std::size_t(i)] = i;

    for (;;) {
        // Bucket each clause under its three sub-pairs; a bucket with two
        // distinct residual variables triggers a merge.
        std::unordered_map<long long, int> first_third;
        bool merged = false;
        auto visit = [&](int p, int q, int third) {
            long long key = (long long)(p) * (cur.n + 1) + q;
            auto [it, inserted] = first_third.try_emplace(key, third);
            if (!inserted && it->second != third) {
                if (eq.unite(cur_rep[std::size_t(it->second)],
                             cur_rep[std::size_t(third)]))
                    merged = true;
            }
        };
        for (const Clause& c : cur.clauses) {
            visit(c.v[0], c.v[1], c.v[2]);
            visit(c.v[0], c.v[2], c.v[1]);
            visit(c.v[1], c.v[2], c.v[0]);
        }
        if (!merged) break;
        QuotientResult q = quotient(inst, eq);
        cur = std::move(q.instance);
        cur_rep = detail::new_to_old(q.old_to_new, cur.n);
    }
    return {eq, cur};
}

} // namespace sparsat

#endif
