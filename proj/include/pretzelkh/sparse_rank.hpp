#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace pkh {

// Sparse integer matrix in column-major form. Entries within a column are
// sorted by row index and nonzero.
struct SparseMat {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<std::vector<std::pair<int32_t, int64_t>>> col;

    void resize(int64_t r, int64_t c) {
        rows = r;
        cols = c;
        col.assign(static_cast<size_t>(c), {});
    }
    int64_t nnz() const {
        int64_t n = 0;
        for (auto& c : col) n += static_cast<int64_t>(c.size());
        return n;
    }
};

// Exact rank over the rationals. Destroys the matrix contents.
// Strategy: sparse elimination using only +-1 pivots with int64 entries
// (128-bit overflow checks); any residual without unit pivots is finished by
// dense exact rational elimination. Falls back to an all-rational sparse pass
// if intermediate entries outgrow int64.
int64_t rank_destructive(SparseMat& m);

inline int64_t rank_copy(SparseMat m) { return rank_destructive(m); }

// All-rational sparse elimination; slower, but entries cannot overflow.
// Used as the retry path when rank_destructive throws std::overflow_error.
int64_t rank_rational(SparseMat m);

// Signature (positive minus negative eigenvalue count) of a symmetric matrix
// with rational entries, by exact congruence diagonalization.
int signature_of_symmetric(std::vector<std::vector<mpq_class>> a);

}  // namespace pkh
