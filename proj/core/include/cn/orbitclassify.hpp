#pragma once

#include <array>

#include "cn/gf.hpp"
#include "cn/orbits.hpp"
#include "cn/pg.hpp"
#include "cn/tables.hpp"

namespace cn {

enum class PointClass { Rank1, Rank2Exterior, Rank2Interior, Rank3 };
std::string to_string(PointClass c);

// The ordered list [n1, n2e, n2i, n3] of point-class counts in a subspace.
struct PointDistribution {
    long long n1 = 0, n2e = 0, n2i = 0, n3 = 0;
    bool operator==(const PointDistribution&) const = default;
    std::array<long long, 4> as_array() const { return {n1, n2e, n2i, n3}; }
};

// Rank-1/rank-3 from the matrix rank; a rank-2 point is exterior iff the
// negated principal 2x2 minors -|M11|, -|M22|, -|M33| are all squares with at
// least one non-zero, else interior.
PointClass classify_point(const Field& F, const SymPoint& p);

PointDistribution point_distribution(const Field& F, const Subspace& s);

// Splits the [0,1,0,q] distribution shared by o15,1 and o16: with w the unique
// rank-2 point of the line, v a kernel vector of M_w and y any other point,
// the line is o15,1 iff v^T M_y v != 0 (the test is independent of the choice
// of y and v). Throws std::domain_error if the distribution precondition
// fails.
LineOrbit disambiguate_o15_o16(const Field& F, const Subspace& line);

// Table lookup of the point-orbit distribution, with the single ambiguous pair
// resolved by disambiguate_o15_o16. A distribution matching no row throws
// internal_error (unreachable for actual lines of PG(5,q)).
LineOrbit classify_line(const Field& F, const Subspace& line);

// Counts per line orbit, indexed in all_line_orbits() order.
struct LineDistribution {
    std::array<long long, kNumLineOrbits> counts{};
    bool operator==(const LineDistribution&) const = default;
    long long total() const;
};

LineDistribution line_distribution(const Field& F, const Subspace& plane);

// Classifies a plane containing a rank-1 point by matching the support of its
// line-orbit distribution against the table rows evaluated at q, then checks
// the full counts. No rank-1 point -> not_rank_one_error; a support or count
// mismatch against the embedded tables -> internal_error.
PlaneOrbit classify_plane(const Field& F, const Subspace& plane);

}  // namespace cn
