#include "doctest.h"

#include <set>

#include "cn/errors.hpp"
#include "cn/gf.hpp"
#include "cn/group.hpp"
#include "cn/orbitclassify.hpp"
#include "cn/pg.hpp"
#include "cn/reps.hpp"
#include "cn/tables.hpp"

using namespace cn;

TEST_CASE("point classification examples") {
    const Field F(7);
    CHECK(classify_point(F, veronese(F, {1, 2, 3})) == PointClass::Rank1);
    // diag(0,1,-1): product of two distinct rational lines.
    CHECK(classify_point(F, make_point(F, {0, 0, 0, 1, 0, 6})) == PointClass::Rank2Exterior);
    // x0 x1: distinct rational lines again.
    CHECK(classify_point(F, make_point(F, {0, 1, 0, 0, 0, 0})) == PointClass::Rank2Exterior);
    // diag(0,1,1) with -1 non-square: conjugate line pair.
    const Field F3(3);
    CHECK(classify_point(F3, make_point(F3, {0, 0, 0, 1, 0, 1})) == PointClass::Rank2Interior);
    // Nondegenerate conic.
    CHECK(classify_point(F, make_point(F, {1, 0, 0, 1, 0, 1})) == PointClass::Rank3);
}

TEST_CASE("line representatives match the published point distributions") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 25LL, 27LL}) {
        CAPTURE(q);
        const Field F(q);
        for (LineOrbit o : all_line_orbits()) {
            CAPTURE(to_string(o));
            const auto d = point_distribution(F, line_rep(F, o)).as_array();
            const auto& row = line_point_dist(o);
            for (int i = 0; i < 4; ++i) CHECK(d[i] == eval_poly(row[i], q));
        }
    }
}

TEST_CASE("line classification returns the defining label") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 25LL, 27LL, 49LL}) {
        CAPTURE(q);
        const Field F(q);
        for (LineOrbit o : all_line_orbits()) {
            CAPTURE(to_string(o));
            CHECK(classify_line(F, line_rep(F, o)) == o);
        }
    }
}

TEST_CASE("plane classification returns the defining label") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 25LL, 27LL}) {
        CAPTURE(q);
        const Field F(q);
        for (PlaneOrbit s : all_plane_labels()) {
            if (!plane_label_valid(s, static_cast<int>(q))) continue;
            CAPTURE(to_string(s));
            CHECK(classify_plane(F, plane_rep(F, s)) == s);
        }
    }
}

TEST_CASE("plane representatives match the published line-orbit distributions") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL}) {
        CAPTURE(q);
        const Field F(q);
        for (PlaneOrbit s : all_plane_labels()) {
            if (!plane_label_valid(s, static_cast<int>(q))) continue;
            CAPTURE(to_string(s));
            const LineDistribution ld = line_distribution(F, plane_rep(F, s));
            const auto row = plane_lod(s, q);
            for (int i = 0; i < kNumLineOrbits; ++i) CHECK(ld.counts[i] == row[i]);
            CHECK(ld.total() == q * q + q + 1);
        }
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const Field F(3);
    const Subspace plane = plane_rep(F, PlaneOrbit::S1);
    const Subspace line = line_rep(F, LineOrbit::o5);
    CHECK_THROWS_AS(classify_line(F, plane), std::domain_error);
    CHECK_THROWS_AS(classify_plane(F, line), std::domain_error);
}

TEST_CASE("planes without rank-1 points are rejected") {
    for (long long q : {3LL, 5LL, 7LL}) {
        CAPTURE(q);
        const Field F(q);
        // y1, y2, y4 span: all 2x2 diagonal minors are negated squares of the
        // coordinates, so rank 1 never occurs.
        const Subspace p = span_of(F, {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                       {0, 0, 0, 0, 1, 0}});
        CHECK_THROWS_AS(classify_plane(F, p), not_rank_one_error);
    }
}

TEST_CASE("the two look-alike line orbits are separated correctly at q=3") {
    const Field F(3);
    // Both orbits share the evaluated distribution [0, 1, 0, q]; the
    // tie-break must agree with true orbit membership from enumeration.
    const auto orbit151 = orbit_bfs(F, line_rep(F, LineOrbit::o15_1));
    const auto orbit16 = orbit_bfs(F, line_rep(F, LineOrbit::o16));
    CHECK(static_cast<long long>(orbit151.size()) == line_orbit_size(LineOrbit::o15_1, 3));
    CHECK(static_cast<long long>(orbit16.size()) == line_orbit_size(LineOrbit::o16, 3));
    for (const Subspace& l : orbit151) CHECK(classify_line(F, l) == LineOrbit::o15_1);
    for (const Subspace& l : orbit16) CHECK(classify_line(F, l) == LineOrbit::o16);
    // And the two collections exhaust the distribution class.
    const auto d151 = point_distribution(F, line_rep(F, LineOrbit::o15_1)).as_array();
    const auto d16 = point_distribution(F, line_rep(F, LineOrbit::o16)).as_array();
    CHECK(d151 == d16);
    long long with_dist = 0;
    for (const Subspace& l : all_subspaces5(F, 1))
        with_dist += point_distribution(F, l).as_array() == d151;
    CHECK(with_dist == static_cast<long long>(orbit151.size() + orbit16.size()));
}

TEST_CASE("point distributions and classes are orbit invariants") {
    std::mt19937_64 rng(99);
    for (long long q : {5LL, 9LL}) {
        CAPTURE(q);
        const Field F(q);
        const auto pts = all_points5(F);
        for (int n = 0; n < 200; ++n) {
            const GroupElement g = random_element(F, rng);
            const SymPoint& p =
                pts[static_cast<size_t>(rng() % static_cast<unsigned long long>(pts.size()))];
            CHECK(classify_point(F, act_point(F, g, p)) == classify_point(F, p));
        }
        const Subspace rep = plane_rep(F, PlaneOrbit::S5);
        for (int n = 0; n < 25; ++n) {
            const GroupElement g = random_element(F, rng);
            CHECK(point_distribution(F, act_subspace(F, g, rep)) ==
                  point_distribution(F, rep));
        }
    }
}

TEST_CASE("classification is model independent for GF(9)") {
    const Field A(9);             // x^2 + 1
    const Field B(9, {2, 1, 1});  // x^2 + x + 2
    for (LineOrbit o : all_line_orbits()) {
        CHECK(classify_line(A, line_rep(A, o)) == classify_line(B, line_rep(B, o)));
        CHECK(point_distribution(A, line_rep(A, o)).as_array() ==
              point_distribution(B, line_rep(B, o)).as_array());
    }
    for (PlaneOrbit s : all_plane_labels()) {
        if (!plane_label_valid(s, 9)) continue;
        CHECK(classify_plane(A, plane_rep(A, s)) == s);
        CHECK(classify_plane(B, plane_rep(B, s)) == s);
        CHECK(line_distribution(A, plane_rep(A, s)) == line_distribution(B, plane_rep(B, s)));
    }
}
