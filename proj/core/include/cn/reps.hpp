#pragma once

#include "cn/gf.hpp"
#include "cn/orbits.hpp"
#include "cn/pg.hpp"

namespace cn {

// Sign condition attached to the parameter v of condition (*).
enum class StarCond { None, NegSquare, NegNonsquare };

struct StarParams {
    Fe u, v;
};
// Lexicographically smallest (u, v), v != 0, with v l^2 + u v l - 1 != 0 for
// all l in GF(q), and -v a square / non-square as requested.
StarParams find_star_params(const Field& F, StarCond cond);

struct DoubleStarParams {
    Fe u, v, w;
};
// Lexicographically smallest (u, v, w) with l^3 + w l^2 - u l + v != 0 for all
// l in GF(q) (a root-free cubic).
DoubleStarParams find_doublestar_params(const Field& F);

// Smallest c not in {0,1} such that -3c is a square in GF(q) and
// (sqrt(c)+1)/(sqrt(c)-1) is a non-cube in GF(q)(sqrt(-3)); that field is
// GF(q) itself when q = 1 mod 3 and GF(q^2) when q = 2 mod 3. Requires
// q != 0 mod 3 (std::domain_error otherwise).
Fe find_dagger_c(const Field& F);

// Canonical representative subspaces, built from the published representative
// matrices with the parameter searches above. Requesting a plane label
// invalid for q (S14 at q = 0 mod 3, S14' otherwise) throws std::domain_error.
Subspace line_rep(const Field& F, LineOrbit o);
Subspace plane_rep(const Field& F, PlaneOrbit s);

}  // namespace cn
