#include <set>

#include <stdexcept>

#include "doctest.h"
#include "pretzelkh/diagram.hpp"

using namespace pkh;

TEST_CASE("pretzel and torus generators: size, writhe, components") {
    CHECK(torus2_diagram(3).crossing_count() == 3);
    CHECK(torus2_diagram(3).writhe() == 3);
    CHECK(torus2_diagram(3).component_count() == 1);
    CHECK(torus2_diagram(-3).writhe() == -3);
    CHECK(torus2_diagram(2).component_count() == 2);
    CHECK(torus2_diagram(0).crossing_count() == 0);
    CHECK(torus2_diagram(0).component_count() == 2);
    CHECK(torus2_diagram(1).component_count() == 1);

    auto p333 = pretzel_diagram(3, 3, 3);
    CHECK(p333.crossing_count() == 9);
    CHECK(p333.writhe() == -9);  // positive twist parameters give the negative diagram
    CHECK(p333.component_count() == 1);
    CHECK(pretzel_diagram(3, 3, -2).writhe() == 8);  // positive diagram family
    CHECK(pretzel_diagram(2, 2, 2).component_count() == 3);
    CHECK(pretzel_diagram(2, 3, 3).component_count() == 1);
    CHECK(pretzel_diagram(2, 2, 3).component_count() == 2);
    CHECK(pretzel_diagram(0, 0, 0).crossing_count() == 0);
}

TEST_CASE("knot-ness parity rule over a small grid") {
    for (int p = -4; p <= 4; ++p)
        for (int q = -4; q <= 4; ++q)
            for (int r = -4; r <= 4; ++r) {
                int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
                bool knot = pretzel_diagram(p, q, r).component_count() == 1;
                if (evens > 1)
                    CHECK_FALSE(knot);
                else if ((p != 0) && (q != 0) && (r != 0))
                    CHECK(knot);
            }
}

TEST_CASE("mirror flips writhe and crossing signs") {
    for (auto d : {pretzel_diagram(3, -3, -2), torus2_diagram(4), pretzel_diagram(3, 5, -2)}) {
        auto m = mirror(d);
        CHECK(m.crossing_count() == d.crossing_count());
        CHECK(m.writhe() == -d.writhe());
        CHECK(m.n_plus() == d.n_minus());
        CHECK(m.component_count() == d.component_count());
        CHECK(mirror(m).writhe() == d.writhe());
    }
}

TEST_CASE("smoothing circle counts on the right trefoil") {
    auto t = torus2_diagram(3);
    CHECK(t.smooth(0).count == 2);  // Seifert state of the all-positive diagram
    CHECK(t.smooth(0b111).count == 3);
    CHECK(t.smooth(0b001).count == 1);
}

TEST_CASE("diagram json round trip") {
    auto d = pretzel_diagram(3, -3, -2);
    auto d2 = diagram_from_json(diagram_to_json(d));
    CHECK(d2.crossing_count() == d.crossing_count());
    CHECK(d2.writhe() == d.writhe());
    for (int c = 0; c < d.crossing_count(); ++c) {
        CHECK(d2.sign(c) == d.sign(c));
        for (int k = 0; k < 4; ++k) CHECK(d2.crossings()[c].edge[k] == d.crossings()[c].edge[k]);
    }
}

TEST_CASE("foreign 1-based PD code parses with standard signs") {
    auto d = diagram_from_json(R"({"pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]})");
    CHECK(d.crossing_count() == 3);
    CHECK(d.component_count() == 1);
    CHECK(d.writhe() == 3);  // the standard right trefoil PD
}

TEST_CASE("malformed PD input is rejected") {
    CHECK_THROWS_AS(diagram_from_json(R"({"pd":[[0,1,2,3]]})"), std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json(R"({"pd":[[0,0,1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json(R"({"nope":1})"), std::invalid_argument);
}

TEST_CASE("seifert statistics of the main family and its mirror") {
    // P(p,-q,-r), p odd, q = p-2, r even: w = r+2, O = r+1, all circles
    // non-negative; mirror: r-1 strongly negative circles, 2 non-negative.
    for (int pr : {5, 7}) {
        for (int r : {2, 4}) {
            auto d = pretzel_diagram(pr, -(pr - 2), -r);
            auto st = stats(d);
            CHECK(st.writhe == r + 2);
            CHECK(st.seifert_circle_count == r + 1);
            CHECK(st.strongly_negative_count == 0);
            CHECK(st.non_negative_count == r + 1);
            auto stm = stats(mirror(d));
            CHECK(stm.writhe == -r - 2);
            CHECK(stm.seifert_circle_count == r + 1);
            CHECK(stm.strongly_negative_count == r - 1);
            CHECK(stm.non_negative_count == 2);
        }
    }
}

TEST_CASE("slice-Bennequin bounds of the main family") {
    for (int r : {2, 4}) {
        auto d = pretzel_diagram(7, -5, -r);
        auto b = slice_bennequin_bounds(d);
        CHECK(b.lower_plain == 2);
        REQUIRE(b.lower_sharper.has_value());
        CHECK(*b.lower_sharper == 2);
        auto bm = slice_bennequin_bounds(mirror(d));
        CHECK(bm.lower_plain == -2 * r - 2);
        REQUIRE(bm.lower_sharper.has_value());
        CHECK(*bm.lower_sharper == -4);
    }
}

TEST_CASE("signature of pinned knots") {
    CHECK(signature(torus2_diagram(3)) == -2);
    CHECK(signature(torus2_diagram(-3)) == 2);
    CHECK(signature(torus2_diagram(5)) == -4);
    CHECK(signature(pretzel_diagram(3, 3, 3)) == 2);
    CHECK(signature(pretzel_diagram(3, 3, -2)) == -6);
    CHECK(signature(pretzel_diagram(5, 5, -2)) == -8);
    CHECK(signature(pretzel_diagram(3, 5, -2)) == -8);
    CHECK(signature(pretzel_diagram(3, 3, 2)) == -4);
    CHECK(signature(pretzel_diagram(3, 3, -3)) == 0);
    CHECK(signature(pretzel_diagram(7, 7, -3)) == 2);
    CHECK(signature(pretzel_diagram(3, -3, -2)) == 0);
}

TEST_CASE("signature flips under mirror and rejects links") {
    for (auto& d : {pretzel_diagram(3, -5, -2), pretzel_diagram(5, -3, -3)})
        CHECK(signature(mirror(d)) == -signature(d));
    CHECK_THROWS_AS(signature(torus2_diagram(2)), std::invalid_argument);
}

TEST_CASE("omega") {
    CHECK(omega(3, 3, -2) == -3);
    CHECK(omega(3, -3, -2) == -9);
    CHECK(omega(5, 5, -2) == 5);
    CHECK(omega(-3, -3, 2) == omega(3, 3, -2));
}

TEST_CASE("resolve removes one crossing and renumbers") {
    auto d = pretzel_diagram(5, -3, -2);
    for (int sm : {0, 1}) {
        auto r = resolve(d, 8, sm, {});
        CHECK(r.crossing_count() == 9);
        CHECK(r.edge_count() + 2 * r.free_loop_count() == 18);
    }
    CHECK_THROWS_AS(resolve(d, 10, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(resolve(d, 0, 2, {}), std::invalid_argument);
}

TEST_CASE("orientation overrides change link writhe but not knot writhe") {
    auto hopf = torus2_diagram(2);
    REQUIRE(hopf.component_count() == 2);
    auto flipped = torus2_diagram(2, OrientationChoice{{false, true}});
    CHECK(hopf.writhe() == 2);
    CHECK(flipped.writhe() == -2);
    CHECK_THROWS_AS(torus2_diagram(2, OrientationChoice{{true}}), std::invalid_argument);
}
