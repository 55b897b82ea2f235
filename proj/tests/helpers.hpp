#ifndef SPARSAT_TESTS_HELPERS_HPP
#define SPARSAT_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "sparsat/f2.hpp"
#include "sparsat/instance.hpp"

namespace testutil {

// All XOR combinations of the given rows: the independent span oracle.
inline std::unordered_set<sparsat::BitVec, sparsat::BitVecHash>
enumerate_span(const std::vector<sparsat::BitVec>& rows, std::size_t ncols) {
    std::unordered_set<sparsat::BitVec, sparsat::BitVecHash> span;
    std::uint64_t combos = std::uint64_t(1) << rows.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        sparsat::BitVec v(ncols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if ((mask >> r) & 1u) v ^= rows[r];
        span.insert(v);
    }
    return span;
}

inline sparsat::BitVec random_vec(std::mt19937_64& rng, std::size_t width) {
    sparsat::BitVec v(width);
    for (std::size_t i = 0; i < width; ++i)
        if (rng() & 1u) v.set(i, true);
    return v;
}

inline sparsat::F2Matrix random_matrix(std::mt19937_64& rng, std::size_t nrows,
                                       std::size_t ncols) {
    sparsat::F2Matrix m(ncols);
    for (std::size_t r = 0; r < nrows; ++r) m.append_row(random_vec(rng, ncols));
    return m;
}

} // namespace testutil

#endif
