#ifndef SPARSAT_F2_HPP
#define SPARSAT_F2_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sparsat/bitvec.hpp"

namespace sparsat {

// Row-major matrix over F2; every row has width ncols.
struct F2Matrix {
    std::size_t ncols = 0;
    std::vector<BitVec> rows;

    F2Matrix() = default;
    explicit F2Matrix(std::size_t ncols) : ncols(ncols) {}

    void append_row(BitVec r) {
        if (r.width() != ncols)
            throw std::invalid_argument("F2Matrix: row width mismatch");
        rows.push_back(std::move(r));
    }

    std::size_t nrows() const { return rows.size(); }
    bool operator==(const F2Matrix&) const = default;
};

// Reduced row echelon form: rows sorted by pivot column, each pivot
// column carries exactly one 1.
class Rref {
public:
    explicit Rref(std::size_t ncols) : mat_(ncols) {}

    const F2Matrix& matrix() const { return mat_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t ncols() const { return mat_.ncols; }

    // Canonical residue of v modulo the row space: zero on all pivot columns.
    BitVec reduce(BitVec v) const {
        if (v.width() != mat_.ncols)
            throw std::invalid_argument("Rref::reduce: width mismatch");
        for (std::size_t r = 0; r < pivots_.size(); ++r)
            if (v.get(pivots_[r])) v ^= mat_.rows[r];
        return v;
    }

    bool contains(const BitVec& v) const { return reduce(v).none(); }

    // Adds v to the spanned space; returns true if the rank grew.
    bool insert(BitVec v) {
        v = reduce(std::move(v));
        std::size_t p = v.lowest_set();
        if (p == BitVec::npos) return false;
        // Clear the new pivot column in existing rows, then place the row
        // so that pivots stay sorted.
        for (std::size_t r = 0; r < mat_.rows.size(); ++r)
            if (mat_.rows[r].get(p)) mat_.rows[r] ^= v;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t idx = std::size_t(it - pivots_.begin());
        pivots_.insert(it, p);
        mat_.rows.insert(mat_.rows.begin() + std::ptrdiff_t(idx), std::move(v));
        return true;
    }

private:
    F2Matrix mat_;
    std::vector<std::size_t> pivots_;
};

inline Rref rref(const F2Matrix& m) {
    Rref r(m.ncols);
    for (const BitVec& row : m.rows) r.insert(row);
    return r;
}

inline BitVec reduce_mod(const Rref& r, const BitVec& v) { return r.reduce(v); }

inline bool in_span(const Rref& r, const BitVec& v) { return r.contains(v); }

// Solves m * x = b over F2 (b has one bit per row). Returns one witness
// with all free variables zero, or nullopt when inconsistent.
inline std::optional<BitVec> solve(const F2Matrix& m, const BitVec& b) {
    if (b.width() != m.nrows())
        throw std::invalid_argument("solve: b must have one bit per row");
    std::size_t w = m.ncols;
    Rref aug(w + 1);
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        BitVec row(w + 1);
        for (std::size_t j = 0; j < w; ++j)
            if (m.rows[i].get(j)) row.set(j, true);
        if (b.get(i)) row.set(w, true);
        aug.insert(row);
    }
    for (std::size_t p : aug.pivots())
        if (p == w) return std::nullopt;
    BitVec x(w);
    for (std::size_t r = 0; r < aug.rank(); ++r)
        if (aug.matrix().rows[r].get(w)) x.set(aug.pivots()[r], true);
    return x;
}

} // namespace sparsat

#endif
