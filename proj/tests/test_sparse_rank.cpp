#include <gmpxx.h>

#include <random>
#include <vector>

#include "doctest.h"
#include "pretzelkh/sparse_rank.hpp"

using namespace pkh;

namespace {

// Dense rational elimination, the oracle for the sparse code.
long long dense_rank(const SparseMat& m) {
    std::vector<std::vector<mpq_class>> a(m.rows, std::vector<mpq_class>(m.cols, 0));
    for (long long c = 0; c < m.cols; ++c)
        for (auto& [r, v] : m.col[c]) a[r][c] += v;
    long long rank = 0;
    for (long long c = 0; c < m.cols && rank < m.rows; ++c) {
        long long piv = -1;
        for (long long r = rank; r < m.rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (long long r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (long long k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

SparseMat random_matrix(std::mt19937& rng, int rows, int cols, double density, int lo, int hi) {
    SparseMat m;
    m.resize(rows, cols);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> val(lo, hi);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            if (u(rng) < density) {
                int v = val(rng);
                if (v != 0) m.col[c].emplace_back(r, v);
            }
    return m;
}

}  // namespace

TEST_CASE("sparse rank matches dense rational oracle on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + trial % 13, cols = 1 + (trial * 7) % 11;
        auto m = random_matrix(rng, rows, cols, 0.35, -2, 2);
        long long expect = dense_rank(m);
        CHECK(rank_copy(m) == expect);
        CHECK(rank_rational(m) == expect);
    }
}

TEST_CASE("sparse rank handles non-unit entries") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(rng, 9, 9, 0.4, -40, 40);
        CHECK(rank_copy(m) == dense_rank(m));
    }
}

TEST_CASE("rank of empty and zero matrices") {
    SparseMat m;
    m.resize(0, 0);
    CHECK(rank_copy(m) == 0);
    m.resize(5, 4);
    CHECK(rank_copy(m) == 0);
}

TEST_CASE("rank of identity-like and duplicated columns") {
    SparseMat m;
    m.resize(4, 5);
    for (int c = 0; c < 4; ++c) m.col[c] = {{c, 1}};
    m.col[4] = {{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    CHECK(rank_copy(m) == 4);
}

TEST_CASE("signature of symmetric rational matrices") {
    using M = std::vector<std::vector<mpq_class>>;
    CHECK(signature_of_symmetric(M{}) == 0);
    CHECK(signature_of_symmetric(M{{2}}) == 1);
    CHECK(signature_of_symmetric(M{{-3}}) == -1);
    CHECK(signature_of_symmetric(M{{1, 0}, {0, -1}}) == 0);
    CHECK(signature_of_symmetric(M{{0, 1}, {1, 0}}) == 0);  // hyperbolic plane
    CHECK(signature_of_symmetric(M{{2, 1}, {1, 2}}) == 2);
    CHECK(signature_of_symmetric(M{{0, 0}, {0, 0}}) == 0);
    // Goeritz matrix of the right trefoil's white faces has signature -2
    CHECK(signature_of_symmetric(M{{-2, 1}, {1, -2}}) == -2);
}

TEST_CASE("signature is a congruence invariant on random forms") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 5;
        std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                int v = val(rng);
                a[i][j] = v;
                a[j][i] = v;
            }
        int sig = signature_of_symmetric(a);
        // congruence by an elementary row+column operation preserves it
        std::vector<std::vector<mpq_class>> b = a;
        for (int j = 0; j < n; ++j) b[0][j] += 2 * a[1][j];
        for (int j = 0; j < n; ++j) b[j][0] += 2 * b[j][1];
        CHECK(signature_of_symmetric(b) == sig);
    }
}
