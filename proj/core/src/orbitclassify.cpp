#include "cn/orbitclassify.hpp"

#include <stdexcept>

namespace cn {

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::Rank1: return "rank-1";
        case PointClass::Rank2Exterior: return "rank-2 exterior";
        case PointClass::Rank2Interior: return "rank-2 interior";
        case PointClass::Rank3: return "rank-3";
    }
    return "?";
}

PointClass classify_point(const Field& F, const SymPoint& p) {
    const Vec6& y = p.y;
    const int r = point_rank(F, p);
    if (r == 1) return PointClass::Rank1;
    if (r == 3) return PointClass::Rank3;
    // Principal 2x2 minors of M_y.
    const Fe m11 = F.sub(F.mul(y[3], y[5]), F.mul(y[4], y[4]));
    const Fe m22 = F.sub(F.mul(y[0], y[5]), F.mul(y[2], y[2]));
    const Fe m33 = F.sub(F.mul(y[0], y[3]), F.mul(y[1], y[1]));
    const Fe a = F.neg(m11), b = F.neg(m22), c = F.neg(m33);
    const bool nonzero = a != 0 || b != 0 || c != 0;
    if (nonzero && F.is_square(a) && F.is_square(b) && F.is_square(c))
        return PointClass::Rank2Exterior;
    return PointClass::Rank2Interior;
}

PointDistribution point_distribution(const Field& F, const Subspace& s) {
    PointDistribution d;
    for (const SymPoint& p : subspace_points(F, s)) {
        switch (classify_point(F, p)) {
            case PointClass::Rank1: ++d.n1; break;
            case PointClass::Rank2Exterior: ++d.n2e; break;
            case PointClass::Rank2Interior: ++d.n2i; break;
            case PointClass::Rank3: ++d.n3; break;
        }
    }
    return d;
}

namespace {

// First reduced-echelon kernel basis vector of a singular 3x3 matrix.
Vec3 kernel_vector(const Field& F, Mat3 m) {
    int piv_col[3] = {-1, -1, -1};
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int piv = -1;
        for (int i = row; i < 3; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        const Fe s = F.inv(m[row][col]);
        for (int j = col; j < 3; ++j) m[row][j] = F.mul(s, m[row][j]);
        for (int i = 0; i < 3; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Fe f = m[i][col];
            for (int j = col; j < 3; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
        }
        piv_col[row] = col;
        ++row;
    }
    for (int free = 0; free < 3; ++free) {
        bool is_piv = false;
        for (int i = 0; i < row; ++i) is_piv = is_piv || piv_col[i] == free;
        if (is_piv) continue;
        Vec3 v{};
        v[free] = 1;
        for (int i = 0; i < row; ++i) v[piv_col[i]] = F.neg(m[i][free]);
        return v;
    }
    throw std::domain_error("kernel_vector: matrix is non-singular");
}

Fe quad_value(const Field& F, const Mat3& m, const Vec3& v) {
    Fe acc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc = F.add(acc, F.mul(v[i], F.mul(m[i][j], v[j])));
    return acc;
}

}  // namespace

LineOrbit disambiguate_o15_o16(const Field& F, const Subspace& line) {
    const auto pts = subspace_points(F, line);
    const SymPoint* w = nullptr;
    PointDistribution d;
    for (const SymPoint& p : pts) {
        const PointClass c = classify_point(F, p);
        switch (c) {
            case PointClass::Rank1: ++d.n1; break;
            case PointClass::Rank2Exterior: ++d.n2e; w = &p; break;
            case PointClass::Rank2Interior: ++d.n2i; break;
            case PointClass::Rank3: ++d.n3; break;
        }
    }
    if (!(d == PointDistribution{0, 1, 0, F.q()}))
        throw std::domain_error("disambiguate_o15_o16: line distribution is not [0,1,0,q]");
    const Vec3 v = kernel_vector(F, point_matrix(*w));
    for (const SymPoint& p : pts) {
        if (&p == w) continue;
        return quad_value(F, point_matrix(p), v) != 0 ? LineOrbit::o15_1 : LineOrbit::o16;
    }
    throw internal_error("disambiguate_o15_o16: no second point on line");
}

LineOrbit classify_line(const Field& F, const Subspace& line) {
    if (line.dim != 1) throw std::domain_error("classify_line: subspace is not a line");
    const auto d = point_distribution(F, line).as_array();
    bool saw_o15_1 = false, saw_o16 = false;
    int nmatch = 0;
    LineOrbit match = LineOrbit::o5;
    for (LineOrbit o : all_line_orbits()) {
        const auto& row = line_point_dist(o);
        bool eq = true;
        for (int i = 0; i < 4; ++i) eq = eq && eval_poly(row[i], F.q()) == d[i];
        if (!eq) continue;
        ++nmatch;
        match = o;
        saw_o15_1 = saw_o15_1 || o == LineOrbit::o15_1;
        saw_o16 = saw_o16 || o == LineOrbit::o16;
    }
    if (nmatch == 1) return match;
    if (nmatch == 2 && saw_o15_1 && saw_o16) return disambiguate_o15_o16(F, line);
    throw internal_error("line distribution [" + std::to_string(d[0]) + "," +
                         std::to_string(d[1]) + "," + std::to_string(d[2]) + "," +
                         std::to_string(d[3]) + "] matches " + std::to_string(nmatch) +
                         " table rows");
}

long long LineDistribution::total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
}

LineDistribution line_distribution(const Field& F, const Subspace& plane) {
    LineDistribution ld;
    for (const Subspace& l : plane_lines(F, plane))
        ++ld.counts[static_cast<int>(classify_line(F, l))];
    return ld;
}

PlaneOrbit classify_plane(const Field& F, const Subspace& plane) {
    if (plane.dim != 2) throw std::domain_error("classify_plane: subspace is not a plane");
    bool has_rank1 = false;
    for (const SymPoint& p : subspace_points(F, plane))
        has_rank1 = has_rank1 || point_rank(F, p) == 1;
    if (!has_rank1)
        throw not_rank_one_error("plane contains no rank-1 point (not a rank-one net)");
    const LineDistribution ld = line_distribution(F, plane);
    int nmatch = 0;
    PlaneOrbit match = PlaneOrbit::S1;
    std::array<long long, kNumLineOrbits> expected{};
    for (PlaneOrbit s : all_plane_labels()) {
        if (!plane_label_valid(s, static_cast<int>(F.q()))) continue;
        const auto row = plane_lod(s, F.q());
        bool same_support = true;
        for (int i = 0; i < kNumLineOrbits; ++i)
            same_support = same_support && (row[i] != 0) == (ld.counts[i] != 0);
        if (!same_support) continue;
        ++nmatch;
        match = s;
        expected = row;
    }
    if (nmatch != 1)
        throw internal_error("line-distribution support matches " + std::to_string(nmatch) +
                             " plane rows");
    for (int i = 0; i < kNumLineOrbits; ++i)
        if (expected[i] != ld.counts[i])
            throw internal_error(
                "full line distribution disagrees with the matched table row " +
                to_string(match) + " in the " + to_string(all_line_orbits()[i]) + " cell");
    return match;
}

}  // namespace cn
