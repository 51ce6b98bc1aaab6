#include "pretzelkh/sparse_rank.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace pkh {

namespace {

constexpr int64_t kMagnitudeLimit = int64_t(1) << 62;

int64_t checked_combine(int64_t a, int64_t f, int64_t b) {
    // a - f*b with overflow detection.
    __int128 v = static_cast<__int128>(a) - static_cast<__int128>(f) * b;
    if (v > kMagnitudeLimit || v < -kMagnitudeLimit) throw std::overflow_error("sparse rank: entry overflow");
    return static_cast<int64_t>(v);
}

// Generic sparse elimination over int64 (unit pivots only; leftovers reported)
// or over mpq (any pivot).
template <class Scalar>
struct Elim {
    std::vector<std::vector<std::pair<int32_t, Scalar>>>& cols;
    std::vector<int32_t> row_nnz;
    std::vector<std::vector<int32_t>> row_cols;  // may hold stale references
    std::vector<char> col_alive;
    std::vector<uint32_t> version;
    // heap of (nnz, col, version) — smallest column first
    using HeapItem = std::tuple<int64_t, int32_t, uint32_t>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
    bool unit_pivots_only;

    Elim(std::vector<std::vector<std::pair<int32_t, Scalar>>>& c, int64_t nrows, bool unit_only)
        : cols(c), unit_pivots_only(unit_only) {
        row_nnz.assign(static_cast<size_t>(nrows), 0);
        row_cols.assign(static_cast<size_t>(nrows), {});
        col_alive.assign(cols.size(), 1);
        version.assign(cols.size(), 0);
        for (size_t c2 = 0; c2 < cols.size(); ++c2) {
            for (auto& [r, v] : cols[c2]) {
                ++row_nnz[r];
                row_cols[r].push_back(static_cast<int32_t>(c2));
            }
            heap.emplace(static_cast<int64_t>(cols[c2].size()), static_cast<int32_t>(c2), 0u);
        }
    }

    static bool is_unit(const int64_t& v) { return v == 1 || v == -1; }
    static bool is_unit(const mpq_class&) { return true; }

    // rank found; columns that never offered a usable pivot stay alive.
    int64_t run(std::vector<int32_t>* residual_out) {
        int64_t rank = 0;
        while (!heap.empty()) {
            auto [sz, c, ver] = heap.top();
            heap.pop();
            if (!col_alive[c] || version[c] != ver) continue;
            if (cols[c].empty()) {
                col_alive[c] = 0;
                continue;
            }
            if (static_cast<int64_t>(cols[c].size()) != sz) {
                heap.emplace(static_cast<int64_t>(cols[c].size()), c, ver);
                continue;
            }
            // pick a pivot entry: unit value, then fewest columns in its row
            int pivot_pos = -1;
            for (size_t k = 0; k < cols[c].size(); ++k) {
                if (!is_unit(cols[c][k].second)) continue;
                if (pivot_pos < 0 || row_nnz[cols[c][k].first] < row_nnz[cols[c][pivot_pos].first])
                    pivot_pos = static_cast<int>(k);
            }
            if (pivot_pos < 0) {
                if (residual_out) residual_out->push_back(c);
                col_alive[c] = 2;  // parked for the dense phase
                continue;
            }
            eliminate(c, pivot_pos);
            ++rank;
        }
        return rank;
    }

    void eliminate(int32_t c, int pivot_pos) {
        const int32_t r = cols[c][pivot_pos].first;
        const Scalar pv = cols[c][pivot_pos].second;
        std::vector<int32_t> todo;
        todo.swap(row_cols[r]);
        std::vector<std::pair<int32_t, Scalar>> merged;
        for (int32_t c2 : todo) {
            if (c2 == c || !col_alive[c2]) continue;
            auto& v2 = cols[c2];
            auto it = std::lower_bound(v2.begin(), v2.end(), r,
                                       [](const auto& e, int32_t row) { return e.first < row; });
            if (it == v2.end() || it->first != r) continue;  // stale reference
            Scalar f = it->second / pv;
            merged.clear();
            merged.reserve(v2.size() + cols[c].size());
            size_t i = 0, k = 0;
            while (i < v2.size() || k < cols[c].size()) {
                if (k == cols[c].size() || (i < v2.size() && v2[i].first < cols[c][k].first)) {
                    merged.push_back(v2[i++]);
                } else if (i == v2.size() || cols[c][k].first < v2[i].first) {
                    Scalar nv = combine(Scalar(0), f, cols[c][k].second);
                    if (nv != 0) {
                        ++row_nnz[cols[c][k].first];
                        row_cols[cols[c][k].first].push_back(c2);
                        merged.emplace_back(cols[c][k].first, std::move(nv));
                    }
                    ++k;
                } else {
                    Scalar nv = combine(v2[i].second, f, cols[c][k].second);
                    if (nv != 0) {
                        merged.emplace_back(v2[i].first, std::move(nv));
                    } else {
                        --row_nnz[v2[i].first];
                    }
                    ++i;
                    ++k;
                }
            }
            v2.swap(merged);
            ++version[c2];
            if (col_alive[c2] == 1)
                heap.emplace(static_cast<int64_t>(v2.size()), c2, version[c2]);
        }
        for (auto& [rr, vv] : cols[c]) --row_nnz[rr];
        row_nnz[r] = 0;
        cols[c].clear();
        cols[c].shrink_to_fit();
        col_alive[c] = 0;
    }

    static int64_t combine(int64_t a, int64_t f, int64_t b) { return checked_combine(a, f, b); }
    static mpq_class combine(const mpq_class& a, const mpq_class& f, const mpq_class& b) {
        return a - f * b;
    }
};

int64_t dense_rational_rank(std::vector<std::vector<mpq_class>>& a) {
    if (a.empty()) return 0;
    const size_t nr = a.size(), nc = a[0].size();
    int64_t rank = 0;
    size_t row = 0;
    for (size_t c = 0; c < nc && row < nr; ++c) {
        size_t pr = row;
        while (pr < nr && a[pr][c] == 0) ++pr;
        if (pr == nr) continue;
        std::swap(a[row], a[pr]);
        for (size_t i = row + 1; i < nr; ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[row][c];
            for (size_t k = c; k < nc; ++k) a[i][k] -= f * a[row][k];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int64_t rank_int64_phase(SparseMat& m) {
    Elim<int64_t> e(m.col, m.rows, /*unit_only=*/true);
    std::vector<int32_t> residual;
    int64_t rank = e.run(&residual);
    if (residual.empty()) return rank;
    // dense rational cleanup on whatever rows the parked columns still touch
    std::vector<int32_t> rows;
    for (int32_t c : residual)
        for (auto& [r, v] : m.col[c]) rows.push_back(r);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<int32_t> row_index(m.rows, -1);
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int32_t>(i);
    std::vector<std::vector<mpq_class>> dense(rows.size(), std::vector<mpq_class>(residual.size(), 0));
    for (size_t j = 0; j < residual.size(); ++j)
        for (auto& [r, v] : m.col[residual[j]]) dense[row_index[r]][j] = v;
    return rank + dense_rational_rank(dense);
}

}  // namespace

int64_t rank_destructive(SparseMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return rank_int64_phase(m);
}

int64_t rank_rational(SparseMat m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<std::pair<int32_t, mpq_class>>> cols(m.col.size());
    for (size_t c = 0; c < m.col.size(); ++c) {
        cols[c].reserve(m.col[c].size());
        for (auto& [r, v] : m.col[c]) cols[c].emplace_back(r, mpq_class(static_cast<long>(v)));
        m.col[c].clear();
        m.col[c].shrink_to_fit();
    }
    Elim<mpq_class> e(cols, m.rows, /*unit_only=*/false);
    return e.run(nullptr);
}

int signature_of_symmetric(std::vector<std::vector<mpq_class>> a) {
    const size_t n = a.size();
    int sig = 0;
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            size_t l = k + 1;
            while (l < n && a[l][l] == 0) ++l;
            if (l < n) {
                std::swap(a[k], a[l]);
                for (size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][l]);
            } else {
                // no nonzero diagonal left; symmetrize a hyperbolic pair if any
                size_t m = k + 1;
                while (m < n && a[k][m] == 0) ++m;
                if (m == n) continue;  // zero row: null direction
                for (size_t i = 0; i < n; ++i) a[k][i] += a[m][i];
                for (size_t i = 0; i < n; ++i) a[i][k] += a[i][m];
            }
        }
        sig += (a[k][k] > 0) ? 1 : -1;
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            mpq_class f = a[i][k] / a[k][k];
            for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            for (size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
    return sig;
}

}  // namespace pkh
