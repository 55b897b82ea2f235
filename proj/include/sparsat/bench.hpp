#ifndef SPARSAT_BENCH_HPP
#define SPARSAT_BENCH_HPP

#include <chrono>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "sparsat/generators.hpp"
#include "sparsat/sparsifier.hpp"

namespace sparsat {

struct BenchRow {
    int k = 0;
    int n = 0;
    std::size_t m_in = 0;
    std::size_t m_out_baseline = 0;
    std::size_t m_out_full = 0;
    int rounds = 0;
    double seconds = 0.0;
};

inline std::vector<BenchRow> bench_xor(int k_lo, int k_hi, unsigned threads = 1) {
    if (k_lo < 1 || k_hi < k_lo)
        throw std::invalid_argument("bench_xor: bad k range");
    std::vector<BenchRow> rows;
    for (int k = k_lo; k <= k_hi; ++k) {
        Instance inst = gen_xor(k);
        BenchRow row;
        row.k = k;
        row.n = inst.n;
        row.m_in = inst.clauses.size();
        auto t0 = std::chrono::steady_clock::now();
        row.m_out_baseline = baseline_pair_merge(inst).second.clauses.size();
        SparsifyResult sp = sparsify(inst, threads);
        auto t1 = std::chrono::steady_clock::now();
        row.m_out_full = sp.stats.m_out;
        row.rounds = sp.stats.rounds;
        row.seconds = std::chrono::duration<double>(t1 - t0).count();
        rows.push_back(row);
    }
    return rows;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "k,n,m_in,m_out_baseline,m_out_full,rounds,seconds\n";
    for (const BenchRow& r : rows)
        out << r.k << ',' << r.n << ',' << r.m_in << ',' << r.m_out_baseline << ','
            << r.m_out_full << ',' << r.rounds << ',' << r.seconds << '\n';
}

} // namespace sparsat

#endif
