#include "doctest.h"

#include <map>

#include "cn/orbits.hpp"
#include "cn/tables.hpp"

using namespace cn;

TEST_CASE("embedded table data is internally consistent") {
    CHECK_NOTHROW(validate_tables());
}

TEST_CASE("group order polynomial") {
    CHECK(pgl3_order(3) == 5616);
    CHECK(pgl3_order(5) == 372000);
    CHECK(pgl3_order(7) == 5630688);
    CHECK(pgl3_order(9) == 42456960);
}

TEST_CASE("line table spot values") {
    // Pencil with one double line and no other singular members.
    {
        const auto& row = line_point_dist(LineOrbit::o9);
        long long v[4];
        for (int i = 0; i < 4; ++i) v[i] = eval_poly(row[i], 5);
        CHECK(v[0] == 1);
        CHECK(v[1] == 0);
        CHECK(v[2] == 0);
        CHECK(v[3] == 5);
    }
    {
        const auto& row = line_point_dist(LineOrbit::o14_1);
        long long v[4];
        for (int i = 0; i < 4; ++i) v[i] = eval_poly(row[i], 7);
        CHECK(v[0] == 0);
        CHECK(v[1] == 3);
        CHECK(v[2] == 0);
        CHECK(v[3] == 5);
    }
    CHECK(eval_poly(line_stab_order(LineOrbit::o13_2), 3) == 4);
    CHECK(line_stab_shape(LineOrbit::o13_2) == std::string("C_{q-1} x C_2"));
    CHECK(eval_poly(line_stab_order(LineOrbit::o17), 7) == 3);
    // Orbit sizes for all orbits partition the line set.
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL}) {
        CAPTURE(q);
        long long total = 0;
        for (LineOrbit o : all_line_orbits()) total += line_orbit_size(o, q);
        CHECK(total == num_subspaces(5, 1, q));
    }
}

TEST_CASE("plane line-orbit distribution spot values") {
    const auto row = plane_lod(PlaneOrbit::S6, 5);
    std::map<std::string, long long> nonzero;
    for (int i = 0; i < kNumLineOrbits; ++i)
        if (row[i] != 0) nonzero[to_string(all_line_orbits()[i])] = row[i];
    const std::map<std::string, long long> expect = {
        {"o8,1", 3}, {"o8,2", 3}, {"o10", 1}, {"o15,1", 12}, {"o15,2", 12}};
    CHECK(nonzero == expect);
}

TEST_CASE("plane stabilizer spot values") {
    CHECK(plane_stab_order(PlaneOrbit::S14p, 3) == 6);
    CHECK(plane_orbit_size(PlaneOrbit::S14p, 3) == 936);
    CHECK(plane_stab_shape(PlaneOrbit::S14p, 3) == std::string("E_q:C_{q-1}"));
    CHECK(plane_stab_order(PlaneOrbit::S7, 5) == 12000);
    CHECK(plane_orbit_size(PlaneOrbit::S7, 5) == 31);  // q^2 + q + 1
    CHECK(plane_stab_order(PlaneOrbit::S14, 5) == 3);
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 25LL, 27LL}) {
        CAPTURE(q);
        for (PlaneOrbit s : all_plane_labels()) {
            if (!plane_label_valid(s, static_cast<int>(q))) continue;
            CHECK(plane_stab_order(s, q) * plane_orbit_size(s, q) == pgl3_order(q));
        }
    }
}

TEST_CASE("row sums are q^2+q+1 for plane tables and q+1 for line tables") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 49LL, 81LL}) {
        CAPTURE(q);
        for (LineOrbit o : all_line_orbits()) {
            long long sum = 0;
            for (const PolyQ& p : line_point_dist(o)) sum += eval_poly(p, q);
            CHECK(sum == q + 1);
        }
        for (PlaneOrbit s : all_plane_labels()) {
            if (!plane_label_valid(s, static_cast<int>(q))) continue;
            CAPTURE(to_string(s));
            long long dsum = 0;
            for (long long v : plane_point_dist(s, q)) dsum += v;
            CHECK(dsum == q * q + q + 1);
            long long lsum = 0;
            for (long long v : plane_lod(s, q)) {
                CHECK(v >= 0);
                lsum += v;
            }
            CHECK(lsum == q * q + q + 1);
        }
    }
}

TEST_CASE("validity of the two congruence-dependent labels") {
    for (int q : {3, 9, 27, 81}) {
        CHECK(!plane_label_valid(PlaneOrbit::S14, q));
        CHECK(plane_label_valid(PlaneOrbit::S14p, q));
    }
    for (int q : {5, 7, 11, 13, 25, 49}) {
        CHECK(plane_label_valid(PlaneOrbit::S14, q));
        CHECK(!plane_label_valid(PlaneOrbit::S14p, q));
    }
    for (int q : {3, 5, 7, 9}) {
        CHECK(plane_label_valid(PlaneOrbit::S1, q));
        CHECK(plane_label_valid(PlaneOrbit::S15, q));
    }
}

TEST_CASE("the published variant of the congruence-2 row is never cell-wise integral") {
    const LodRow& printed = printed_s14_mod2_row();
    // The printed o17 entry ((q-1)^2 - 3q)/3 has numerator congruent to 1 mod 3
    // whenever q = 2 mod 3, so it is non-integral at every q in the row's domain.
    const int i17 = static_cast<int>(LineOrbit::o17);
    for (long long q : {5LL, 11LL, 17LL, 23LL}) {
        CAPTURE(q);
        CHECK(!try_eval_poly(printed.cells[i17], q).has_value());
    }
    // The corrected row in force sums to q^2+q+1 (validate_tables also checks).
    long long good = 0;
    for (long long v : plane_lod(PlaneOrbit::S14, 11)) good += v;
    CHECK(good == 133);
}

TEST_CASE("label strings and parsing") {
    CHECK(to_string(LineOrbit::o8_1) == "o8,1");
    CHECK(to_string(LineOrbit::o5) == "o5");
    CHECK(to_string(PlaneOrbit::S3) == "S3");
    CHECK(to_string(PlaneOrbit::S14p) == "S14'");
    CHECK(pretty(PlaneOrbit::S14p) == "Σ14'");
    CHECK(pretty(PlaneOrbit::S2) == "Σ2");

    CHECK(parse_line_orbit("o8,1") == LineOrbit::o8_1);
    CHECK(parse_line_orbit("o8_1") == LineOrbit::o8_1);
    CHECK(parse_line_orbit("o17") == LineOrbit::o17);
    CHECK(!parse_line_orbit("o7").has_value());
    CHECK(!parse_line_orbit("x").has_value());

    CHECK(parse_plane_orbit("S14'") == PlaneOrbit::S14p);
    CHECK(parse_plane_orbit("S14p") == PlaneOrbit::S14p);
    CHECK(parse_plane_orbit("Sigma14'") == PlaneOrbit::S14p);
    CHECK(parse_plane_orbit("Σ3") == PlaneOrbit::S3);
    CHECK(parse_plane_orbit("S11") == PlaneOrbit::S11);
    CHECK(!parse_plane_orbit("S16").has_value());
    CHECK(!parse_plane_orbit("o5").has_value());

    // Round trip for every label.
    for (LineOrbit o : all_line_orbits()) CHECK(parse_line_orbit(to_string(o)) == o);
    for (PlaneOrbit s : all_plane_labels()) {
        CHECK(parse_plane_orbit(to_string(s)) == s);
        CHECK(parse_plane_orbit(pretty(s)) == s);
    }
}

TEST_CASE("congruence guards") {
    CHECK(cong_matches(CongClass::Any, 5));
    CHECK(cong_matches(CongClass::Mod1, 7));
    CHECK(!cong_matches(CongClass::Mod1, 5));
    CHECK(cong_matches(CongClass::Mod2, 5));
    CHECK(cong_matches(CongClass::Mod0, 9));
    CHECK(cong_matches(CongClass::NotMod0, 7));
    CHECK(!cong_matches(CongClass::NotMod0, 27));
}

TEST_CASE("polynomial evaluation guards against non-integral values") {
    PolyQ p;
    p.num = {1, 0, 1};  // q^2 + 1
    p.den = 2;
    CHECK(eval_poly(p, 3) == 5);
    CHECK(try_eval_poly(p, 3) == 5);
    p.den = 4;
    // q odd makes q^2 + 1 = 2 mod 4: never divisible by 4.
    CHECK(!try_eval_poly(p, 3).has_value());
    CHECK(!try_eval_poly(p, 5).has_value());
    p.den = 2;
    CHECK(try_eval_poly(p, 5) == 13);
}
