#include <stdexcept>

#include "doctest.h"
#include "pretzelkh/diagram.hpp"
#include "pretzelkh/khovanov.hpp"
#include "pretzelkh/turner.hpp"

using namespace pkh;

namespace {

// r-band (third pretzel band) crossings top to bottom
std::vector<int> r_band_order(int p, int q, int r) {
    std::vector<int> order;
    for (int k = 0; k < std::abs(r); ++k) order.push_back(std::abs(p) + std::abs(q) + k);
    return order;
}

}  // namespace

TEST_CASE("sequence construction and validation") {
    auto d = pretzel_diagram(5, -3, -2);
    auto seq = build_sequence(d, r_band_order(5, 3, 2));
    CHECK(seq.d_seq.size() == 3);
    CHECK(seq.dtilde_seq.size() == 2);
    CHECK(seq.d_seq[1].crossing_count() == 9);
    CHECK(seq.d_seq[2].crossing_count() == 8);
    CHECK_THROWS_AS(build_sequence(d, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_sequence(d, {99}), std::invalid_argument);
}

TEST_CASE("one-smoothings of the r band unwind it to the two-band pretzel") {
    auto seq = build_sequence(pretzel_diagram(5, -3, -2), r_band_order(5, 3, 2));
    CHECK(homology_dims(seq.d_seq[2]) == homology_dims(pretzel_diagram(5, -3, 0)));
}

TEST_CASE("shift constants of the r-band sequence match the published pattern") {
    // for P(p,-q,-r), r even: a~_k = 0, b~_k = -1, A_1 = -3, B_1 = -8,
    // A_2 = -2, B_2 = -4, and generally A_{2l} = -2l, B_{2l} = -4l
    for (auto [p, r] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {5, 4}}) {
        auto seq = build_sequence(pretzel_diagram(p, -(p - 2), -r), r_band_order(p, p - 2, r));
        auto tc = constants(seq);
        for (int k = 1; k <= r; ++k) {
            CAPTURE(p);
            CAPTURE(r);
            CAPTURE(k);
            CHECK(tc.a_tilde[k] == 0);
            CHECK(tc.b_tilde[k] == -1);
            if (k % 2 == 0) {
                CHECK(tc.A[k] == -k);
                CHECK(tc.B[k] == -2 * k);
            } else {
                CHECK(tc.A[k] == -k - 2);
                CHECK(tc.B[k] == -2 * k - 6);
            }
        }
    }
}

TEST_CASE("shift constants of the q-band sequence on the two-band pretzel") {
    // for P(p,-q,0): a~_s = q-s+1, b~_s = 3q-3s+2, A_s = 0, B_s = s
    const int p = 5, q = 3;
    std::vector<int> order;
    for (int k = 0; k < q - 1; ++k) order.push_back(p + k);
    auto seq = build_sequence(pretzel_diagram(p, -q, 0), order);
    auto tc = constants(seq);
    for (int s = 1; s <= q - 1; ++s) {
        CHECK(tc.a_tilde[s] == q - s + 1);
        CHECK(tc.b_tilde[s] == 3 * q - 3 * s + 2);
        CHECK(tc.A[s] == 0);
        CHECK(tc.B[s] == s);
    }
    // every leaf of this sequence is the (2,p)-torus knot
    auto tp = homology_dims(torus2_diagram(p));
    for (const auto& leaf : seq.dtilde_seq) CHECK(homology_dims(leaf) == tp);
    CHECK(homology_dims(seq.d_seq[q - 1]) == tp);
}

TEST_CASE("first leaves are the Hopf link and its orientation-reverse") {
    auto seq = build_sequence(pretzel_diagram(5, -3, -2), r_band_order(5, 3, 2));
    BigradedDims hopf;
    hopf.add(0, 0, 1);
    hopf.add(0, 2, 1);
    hopf.add(2, 4, 1);
    hopf.add(2, 6, 1);
    CHECK(homology_dims(seq.dtilde_seq[0]) == hopf);
    BigradedDims rev;  // KH^i_j(rev) = KH^{i+2}_{j+6}(Hopf)
    for (auto& [ij, rk] : hopf.ranks) rev.add(ij.first - 2, ij.second - 6, rk);
    CHECK(homology_dims(seq.dtilde_seq[1]) == rev);
}

TEST_CASE("E1 pages: consistency checks and published cells") {
    auto base = pretzel_diagram(5, -3, -2);
    auto seq = build_sequence(base, r_band_order(5, 3, 2));
    auto base_dims = homology_dims(base);
    // off the five special quantum degrees the page is one column
    for (int j : {-3, -1, 11, 13}) {
        auto page = e1_page(seq, j);
        for (auto& [st, cell] : page.cells) CHECK(st.first == 2);
        CHECK(e1_euler_check(page, base_dims, j));
    }
    for (int j : {1, 3, 5, 7, 9}) {
        auto page = e1_page(seq, j);
        CHECK(e1_euler_check(page, base_dims, j));
        CHECK(diagonal_support_check(page, j, 2));
    }
    // the j = 3 page: 1 at (0,0) and (1,0), I0+3 at (2,-1) and (2,-2); p = 5
    // evaluates I0+3 to 1
    auto p3 = e1_page(seq, 3);
    REQUIRE(p3.cells.size() == 4);
    CHECK(p3.cells.at({0, 0}).rank == 1);
    CHECK(p3.cells.at({1, 0}).rank == 1);
    CHECK(p3.cells.at({2, -1}).rank == 1);
    CHECK(p3.cells.at({2, -2}).rank == 1);
    CHECK(p3.cells.at({0, 0}).leaf == "D~(1)");
    CHECK(p3.cells.at({2, -1}).leaf == "D(m)");
    // the j = 1 page keeps only the corner cell once I0+2, I0+1 vanish
    auto p1 = e1_page(seq, 1);
    REQUIRE(p1.cells.size() == 1);
    CHECK(p1.cells.at({0, 0}).rank == 1);
}

TEST_CASE("even quantum degrees of a knot give empty pages") {
    auto seq = build_sequence(pretzel_diagram(5, -3, -2), r_band_order(5, 3, 2));
    CHECK(e1_page(seq, 0).cells.empty());
    CHECK(e1_page(seq, 4).cells.empty());
}
