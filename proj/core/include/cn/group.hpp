#pragma once

#include <functional>
#include <random>
#include <vector>

#include "cn/gf.hpp"
#include "cn/pg.hpp"

namespace cn {

// Element of PGL(3,q): an invertible 3x3 matrix, normalized so the first
// non-zero entry in row-major order is 1 (unique scalar-class representative).
struct GroupElement {
    Mat3 a;
    bool operator==(const GroupElement&) const = default;
};

GroupElement identity_element();
GroupElement normalize_element(const Field& F, Mat3 m);  // m must be non-zero

Fe mat3_det(const Field& F, const Mat3& m);
Mat3 mat3_mul(const Field& F, const Mat3& x, const Mat3& y);
Vec3 mat3_apply(const Field& F, const Mat3& m, const Vec3& v);

// Congruence action M_y -> A M_y A^T, as a linear map on the 6-vector.
Vec6 act_vec6(const Field& F, const Mat3& a, const Vec6& y);
SymPoint act_point(const Field& F, const GroupElement& g, const SymPoint& p);
Subspace act_subspace(const Field& F, const GroupElement& g, const Subspace& s);

long long group_order(const Field& F);  // |PGL(3,q)| = q^3 (q^3-1)(q^2-1)

// Streams every scalar class exactly once (single-threaded, deterministic
// order). fn returning false stops the enumeration early.
void enumerate_group(const Field& F, const std::function<bool(const GroupElement&)>& fn);

struct StabOptions {
    int threads = 0;      // 0 = all hardware threads
    bool force = false;   // required for q in {9, 11, 13}; q > 13 always refused
};

// Brute-force count (or collection) of the elements fixing s setwise, by a
// full scan of the group; guarded by q via StabOptions. Deterministic results
// for any thread count. Throws guard_error when the guard refuses.
long long stabilizer_order(const Field& F, const Subspace& s, const StabOptions& opt = {});
std::vector<GroupElement> stabilizer_elements(const Field& F, const Subspace& s,
                                              const StabOptions& opt = {});
long long orbit_size(const Field& F, const Subspace& s, const StabOptions& opt = {});

// Full orbit of s under generators of PGL(3,q) (transvections plus one
// diagonal), as canonical subspaces. Guard: free at q=3, --force at q=5,
// refused beyond.
std::vector<Subspace> orbit_bfs(const Field& F, const Subspace& s, bool force = false);

// Uniformly random group element (rejection sampling on raw matrices; every
// scalar class has the same number of invertible preimages).
GroupElement random_element(const Field& F, std::mt19937_64& rng);

// Order of g in PGL(3,q): least n >= 1 with g^n scalar.
int projective_order(const Field& F, const GroupElement& g);

}  // namespace cn
