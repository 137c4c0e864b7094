#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cn/errors.hpp"
#include "cn/orbits.hpp"

namespace cn {

// Integer polynomial in q divided by a constant, e.g. (q-1)(q-7)/24. All
// published counts have this shape; evaluation is exact or an error.
struct PolyQ {
    std::vector<long long> num;  // coefficients, ascending powers of q
    long long den = 1;

    bool is_zero() const;
    std::string to_string() const;  // e.g. "(q^2 - 8q + 7)/24"
};

// Exact evaluation; throws internal_error if the numerator value is not
// divisible by den (a sign of applying a row outside its congruence class).
long long eval_poly(const PolyQ& e, long long q);
// As above but non-integral values yield nullopt (used for the known-erroneous
// published cell, which is non-integral at some q).
std::optional<long long> try_eval_poly(const PolyQ& e, long long q);

// Congruence constraint on q mod 3 attached to a table row.
enum class CongClass { Any, Mod0, Mod1, Mod2, NotMod0, NotMod1, NotMod2 };
bool cong_matches(CongClass c, long long q);
std::string to_string(CongClass c);

long long pgl3_order(long long q);  // q^3 (q^3-1)(q^2-1)

// ---- Line orbit data ----

// Point-orbit distribution [n1, n2e, n2i, n3] of each line orbit.
const std::array<PolyQ, 4>& line_point_dist(LineOrbit o);
// Stabiliser order in PGL(3,q) and the published shape name.
const PolyQ& line_stab_order(LineOrbit o);
const char* line_stab_shape(LineOrbit o);
long long line_orbit_size(LineOrbit o, long long q);  // |PGL| / stab, exact

// ---- Plane orbit data ----

// Point-orbit distribution of each plane label (S14 splits on q mod 3).
struct PointDistRow {
    CongClass cc;
    std::array<PolyQ, 4> dist;
};
const std::vector<PointDistRow>& plane_point_dist_rows(PlaneOrbit s);
std::array<long long, 4> plane_point_dist(PlaneOrbit s, long long q);

// Line-orbit distribution rows, indexed by all_line_orbits() order. These are
// the corrected values (the published full table's S14 row for q = 2 mod 3
// contains two erroneous cells; see printed_s14_mod2_row).
struct LodRow {
    CongClass cc;
    std::array<PolyQ, kNumLineOrbits> cells;
};
const std::vector<LodRow>& plane_lod_rows(PlaneOrbit s);
std::array<long long, kNumLineOrbits> plane_lod(PlaneOrbit s, long long q);

// The S14 row for q = 2 mod 3 exactly as printed in the full table; its o15,1
// and o17 cells disagree with the per-orbit lemma (and violate the row sum).
const LodRow& printed_s14_mod2_row();

// Stabiliser order, shape and orbit size of each plane label.
struct StabRow {
    CongClass cc;
    const char* shape;
    PolyQ order;
    PolyQ orbit;
};
const std::vector<StabRow>& plane_stab_rows(PlaneOrbit s);
long long plane_stab_order(PlaneOrbit s, long long q);
long long plane_orbit_size(PlaneOrbit s, long long q);
const char* plane_stab_shape(PlaneOrbit s, long long q);

// Number of d-dimensional subspaces of PG(n,q) (Gaussian binomial [n+1, d+1]).
long long num_subspaces(int n, int d, long long q);

// Validates all embedded rows at a spread of q values: row sums, stabiliser
// times orbit = |PGL|, point-distribution sums. Throws internal_error on any
// failure. Runs once; later calls are free.
void validate_tables();

}  // namespace cn
