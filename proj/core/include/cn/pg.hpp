#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cn/errors.hpp"
#include "cn/gf.hpp"

namespace cn {

using Vec3 = std::array<Fe, 3>;
using Vec6 = std::array<Fe, 6>;
using Mat3 = std::array<std::array<Fe, 3>, 3>;

// Point of PG(5,q) in the symmetric-matrix model: y = (y0..y5) encodes
//   M_y = [ y0 y1 y2 / y1 y3 y4 / y2 y4 y5 ],
// normalized so the first non-zero coordinate is 1.
struct SymPoint {
    Vec6 y;
    bool operator==(const SymPoint&) const = default;
};

// Scales a non-zero vector so its first non-zero entry is 1.
Vec3 normalize3(const Field& F, Vec3 v);
Vec6 normalize6(const Field& F, Vec6 v);

SymPoint make_point(const Field& F, const Vec6& v);
Mat3 point_matrix(const SymPoint& p);
SymPoint matrix_point(const Field& F, const Mat3& m);  // m must be symmetric

// ν : PG(2,q) -> PG(5,q), (x0,x1,x2) |-> (x0^2, x0x1, x0x2, x1^2, x1x2, x2^2).
SymPoint veronese(const Field& F, const Vec3& x);

int mat_rank(const Field& F, Mat3 m);
int point_rank(const Field& F, const SymPoint& p);

// Line (dim 1) or plane (dim 2) of PG(5,q). The basis is the unique reduced
// row-echelon form with leading ones, so operator== is structural equality.
struct Subspace {
    int dim = 0;
    std::vector<Vec6> basis;
    bool operator==(const Subspace&) const = default;
};

Subspace span_of(const Field& F, std::vector<Vec6> gens);
bool contains(const Field& F, const Subspace& s, const Vec6& v);

// Compact byte string identifying a canonical subspace, for hash maps.
std::string subspace_key(const Subspace& s);

// All (q^(dim+1)-1)/(q-1) points of s, normalized, in a deterministic order.
std::vector<SymPoint> subspace_points(const Field& F, const Subspace& s);
// The q^2+q+1 lines contained in a plane (via dual vectors of the coefficient
// space). Throws std::domain_error if s is not a plane.
std::vector<Subspace> plane_lines(const Field& F, const Subspace& s);

// A net of conics: three ternary quadratic forms, each as the coefficient
// 6-vector (a00, a01, a02, a11, a12, a22) of
//   a00 X0^2 + a01 X0X1 + a02 X0X2 + a11 X1^2 + a12 X1X2 + a22 X2^2.
// The coefficient vector doubles as the PG(5,q) coordinate vector of the form.
struct NetInput {
    std::array<Vec6, 3> forms;
};

// File format: field element indices separated by whitespace, 18 in total
// (three forms, six coefficients each, rows may be split freely across lines);
// '#' starts a comment. Throws parse_error on malformed input.
NetInput read_net(const Field& F, const std::string& path);
NetInput parse_net(const Field& F, std::istream& in);

// The plane spanned by the three forms. Linearly dependent forms (a pencil or
// smaller, not a net) throw not_rank_one_error.
Subspace net_to_plane(const Field& F, const NetInput& n);

// Ternary cubic, coefficients in the monomial order
//   x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
struct CubicForm {
    std::array<Fe, 10> c;
    bool operator==(const CubicForm&) const = default;
};

// The discriminant of the net: det of A(x,y,z) = x A1 + y A2 + z A3 where A_i
// is the bilinear-form matrix of form i (off-diagonals halved; q odd). Its
// zero locus is the set of singular conics of the net.
CubicForm discriminant_cubic(const Field& F, const NetInput& n);
Fe cubic_eval(const Field& F, const CubicForm& c, const Vec3& x);

// Normalized point lists in a deterministic order.
std::vector<Vec3> pg2_points(const Field& F);
std::vector<SymPoint> all_points5(const Field& F);
// All subspaces of projective dimension dim (1 or 2) of PG(5,q), enumerated
// directly in echelon form. Sized for small q only (q=3: 11011 lines, 33880
// planes).
std::vector<Subspace> all_subspaces5(const Field& F, int dim);

}  // namespace cn
