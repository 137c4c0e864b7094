#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "cn/errors.hpp"
#include "cn/gf.hpp"
#include "cn/pg.hpp"
#include "cn/reps.hpp"
#include "cn/tables.hpp"

using namespace cn;

TEST_CASE("normalization scales the first non-zero coordinate to 1") {
    const Field F(3);
    CHECK(normalize6(F, {0, 2, 1, 0, 0, 2}) == Vec6{0, 1, 2, 0, 0, 1});
    CHECK(normalize6(F, {1, 2, 0, 1, 0, 0}) == Vec6{1, 2, 0, 1, 0, 0});
    CHECK(normalize3(F, {0, 0, 2}) == Vec3{0, 0, 1});
    CHECK_THROWS_AS(normalize6(F, {0, 0, 0, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(make_point(F, {0, 0, 0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("point / matrix round trip") {
    const Field F(7);
    const SymPoint p = make_point(F, {1, 2, 3, 4, 5, 6});
    const Mat3 m = point_matrix(p);
    CHECK(m[0][0] == 1);
    CHECK(m[0][1] == 2);
    CHECK(m[1][0] == 2);
    CHECK(m[2][1] == 5);
    CHECK(matrix_point(F, m) == p);
}

TEST_CASE("veronese image of (1,2,0) over GF(3)") {
    const Field F(3);
    CHECK(veronese(F, {1, 2, 0}).y == Vec6{1, 2, 0, 1, 0, 0});
}

TEST_CASE("rank examples") {
    const Field F(5);
    CHECK(point_rank(F, make_point(F, {1, 0, 0, 0, 0, 0})) == 1);
    CHECK(point_rank(F, make_point(F, {0, 1, 0, 0, 0, 0})) == 2);
    CHECK(point_rank(F, make_point(F, {1, 0, 0, 1, 0, 1})) == 3);
    CHECK(point_rank(F, make_point(F, {0, 0, 1, 1, 0, 0})) == 3);
}

TEST_CASE("rank-1 points are exactly the veronese image for q <= 7") {
    for (long long q : {3LL, 5LL, 7LL}) {
        CAPTURE(q);
        const Field F(q);
        std::set<Vec6> rank1;
        for (const SymPoint& p : all_points5(F))
            if (point_rank(F, p) == 1) rank1.insert(p.y);
        std::set<Vec6> image;
        for (const Vec3& x : pg2_points(F)) image.insert(veronese(F, x).y);
        CHECK(rank1 == image);
        CHECK(rank1.size() == static_cast<size_t>(q * q + q + 1));
    }
}

TEST_CASE("span_of produces a canonical echelon basis") {
    const Field F(3);
    const Subspace a = span_of(F, {{1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
    const Subspace b = span_of(F, {{1, 0, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}});
    CHECK(a.dim == 1);
    CHECK(a == b);
    CHECK(a.basis[0] == Vec6{1, 0, 0, 0, 0, 0});
    CHECK(a.basis[1] == Vec6{0, 1, 0, 0, 0, 0});
    CHECK(subspace_key(a) == subspace_key(b));
    CHECK_THROWS_AS(span_of(F, {{0, 0, 0, 0, 0, 0}}), std::domain_error);
    const Subspace c = span_of(F, {{0, 1, 0, 0, 0, 1}});
    CHECK(c.dim == 0);
    CHECK(subspace_key(a) != subspace_key(c));
}

TEST_CASE("containment and point enumeration") {
    const Field F(9);
    const Subspace line = span_of(F, {{1, 0, 0, 2, 0, 0}, {0, 0, 0, 0, 0, 1}});
    const auto pts = subspace_points(F, line);
    CHECK(pts.size() == 10);  // q + 1
    std::set<Vec6> seen;
    for (const SymPoint& p : pts) {
        CHECK(contains(F, line, p.y));
        seen.insert(p.y);
    }
    CHECK(seen.size() == pts.size());
    CHECK(!contains(F, line, Vec6{0, 1, 0, 0, 0, 0}));

    const Subspace plane = span_of(F, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                                       {0, 0, 0, 1, 0, 0}});
    CHECK(subspace_points(F, plane).size() == 91);  // q^2 + q + 1
}

TEST_CASE("plane_lines enumerates q^2+q+1 distinct lines inside the plane") {
    const Field F(5);
    const Subspace plane = span_of(F, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                                       {0, 0, 0, 1, 0, 0}});
    const auto lines = plane_lines(F, plane);
    CHECK(lines.size() == 31);
    std::set<std::string> keys;
    for (const Subspace& l : lines) {
        CHECK(l.dim == 1);
        keys.insert(subspace_key(l));
        for (const Vec6& b : l.basis) CHECK(contains(F, plane, b));
    }
    CHECK(keys.size() == lines.size());
}

TEST_CASE("net parsing accepts comments and rejects malformed input") {
    const Field F(5);
    {
        std::istringstream in("# comment\n1 0 0 0 0 0\n0 0 0 1 0 0 # inline\n0 0 0 0 0 1\n");
        const NetInput n = parse_net(F, in);
        CHECK(n.forms[0] == Vec6{1, 0, 0, 0, 0, 0});
        CHECK(n.forms[2] == Vec6{0, 0, 0, 0, 0, 1});
    }
    {
        std::istringstream in("1 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0");  // 17 values
        CHECK_THROWS_AS(parse_net(F, in), parse_error);
    }
    {
        std::istringstream in("1 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 1");  // 19 values
        CHECK_THROWS_AS(parse_net(F, in), parse_error);
    }
    {
        std::istringstream in("1 0 0 x 0 0\n0 0 0 1 0 0\n0 0 0 0 0 1\n");
        CHECK_THROWS_AS(parse_net(F, in), parse_error);
    }
    {
        std::istringstream in("1 0 0 5 0 0\n0 0 0 1 0 0\n0 0 0 0 0 1\n");  // 5 >= q
        CHECK_THROWS_AS(parse_net(F, in), parse_error);
    }
}

TEST_CASE("net_to_plane rejects dependent forms") {
    const Field F(5);
    NetInput n;
    n.forms = {Vec6{1, 0, 0, 0, 0, 0}, Vec6{2, 0, 0, 0, 0, 0}, Vec6{0, 0, 0, 1, 0, 0}};
    CHECK_THROWS_AS(net_to_plane(F, n), not_rank_one_error);
    n.forms = {Vec6{1, 0, 0, 0, 0, 0}, Vec6{0, 1, 0, 0, 0, 0}, Vec6{1, 1, 0, 0, 0, 0}};
    CHECK_THROWS_AS(net_to_plane(F, n), not_rank_one_error);
    n.forms = {Vec6{1, 0, 0, 0, 0, 0}, Vec6{0, 0, 0, 1, 0, 0}, Vec6{0, 0, 0, 0, 0, 1}};
    CHECK(net_to_plane(F, n).dim == 2);
}

TEST_CASE("discriminant of the diagonal net is xyz") {
    const Field F(7);
    NetInput n;
    n.forms = {Vec6{1, 0, 0, 0, 0, 0}, Vec6{0, 0, 0, 1, 0, 0}, Vec6{0, 0, 0, 0, 0, 1}};
    const CubicForm c = discriminant_cubic(F, n);
    // Monomial order: x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3.
    for (int i = 0; i < 10; ++i) CHECK(c.c[i] == (i == 4 ? 1 : 0));
}

TEST_CASE("discriminant vanishes exactly on the singular conics of the net") {
    for (long long q : {3LL, 5LL, 7LL}) {
        CAPTURE(q);
        const Field F(q);
        for (PlaneOrbit s : all_plane_labels()) {
            if (!plane_label_valid(s, static_cast<int>(q))) continue;
            CAPTURE(to_string(s));
            const Subspace rep = plane_rep(F, s);
            NetInput n;
            n.forms = {rep.basis[0], rep.basis[1], rep.basis[2]};
            const CubicForm c = discriminant_cubic(F, n);
            for (const Vec3& x : pg2_points(F)) {
                Vec6 y{};
                for (int i = 0; i < 6; ++i)
                    y[i] = F.add(F.mul(x[0], n.forms[0][i]),
                                 F.add(F.mul(x[1], n.forms[1][i]), F.mul(x[2], n.forms[2][i])));
                // The discriminant is det of the bilinear-form matrix, whose
                // off-diagonal entries are the halved cross coefficients.
                const Fe h = F.inv(F.scalar(2));
                const Mat3 g{{{y[0], F.mul(h, y[1]), F.mul(h, y[2])},
                              {F.mul(h, y[1]), y[3], F.mul(h, y[4])},
                              {F.mul(h, y[2]), F.mul(h, y[4]), y[5]}}};
                CHECK((cubic_eval(F, c, x) == 0) == (mat_rank(F, g) <= 2));
            }
        }
    }
}

TEST_CASE("discriminant zero locus of the conic-pair-type net at q=5 has 11 points") {
    const Field F(5);
    const Subspace rep = plane_rep(F, PlaneOrbit::S3);
    NetInput n;
    n.forms = {rep.basis[0], rep.basis[1], rep.basis[2]};
    const CubicForm c = discriminant_cubic(F, n);
    long long zeros = 0;
    for (const Vec3& x : pg2_points(F)) zeros += cubic_eval(F, c, x) == 0;
    CHECK(zeros == 11);
}

TEST_CASE("subspace enumeration matches the Gaussian binomial counts") {
    const Field F(3);
    const auto lines = all_subspaces5(F, 1);
    CHECK(static_cast<long long>(lines.size()) == num_subspaces(5, 1, 3));
    CHECK(num_subspaces(5, 1, 3) == 11011);
    const auto planes = all_subspaces5(F, 2);
    CHECK(static_cast<long long>(planes.size()) == num_subspaces(5, 2, 3));
    CHECK(num_subspaces(5, 2, 3) == 33880);
    std::set<std::string> keys;
    for (const Subspace& l : lines) {
        REQUIRE(l.dim == 1);
        keys.insert(subspace_key(l));
    }
    CHECK(keys.size() == lines.size());
    // Spot-check canonicity: re-spanning the basis reproduces the subspace.
    for (size_t i = 0; i < lines.size(); i += 997)
        CHECK(span_of(F, lines[i].basis) == lines[i]);
    CHECK(num_subspaces(2, 0, 7) == 57);
    CHECK(num_subspaces(5, 0, 3) == 364);
    CHECK(num_subspaces(5, 4, 3) == 364);  // hyperplane duality
}
