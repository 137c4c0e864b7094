#include "cn/pg.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cn {
namespace {

// Iterates all normalized coefficient vectors (first non-zero entry = 1) of
// F_q^k in ascending lead order; calls fn once per projective point.
template <typename Fn>
void for_each_projective(const Field& F, int k, Fn&& fn) {
    const long long q = F.q();
    std::vector<Fe> c(k, 0);
    for (int lead = 0; lead < k; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        const int nfree = k - lead - 1;
        long long total = 1;
        for (int i = 0; i < nfree; ++i) total *= q;
        for (long long t = 0; t < total; ++t) {
            long long r = t;
            for (int i = 0; i < nfree; ++i) {
                c[lead + 1 + i] = static_cast<Fe>(r % q);
                r /= q;
            }
            fn(c);
        }
    }
}

}  // namespace

Vec3 normalize3(const Field& F, Vec3 v) {
    for (int i = 0; i < 3; ++i) {
        if (v[i] == 0) continue;
        const Fe s = F.inv(v[i]);
        for (int j = i; j < 3; ++j) v[j] = F.mul(s, v[j]);
        return v;
    }
    throw std::domain_error("cannot normalize the zero vector");
}

Vec6 normalize6(const Field& F, Vec6 v) {
    for (int i = 0; i < 6; ++i) {
        if (v[i] == 0) continue;
        const Fe s = F.inv(v[i]);
        for (int j = i; j < 6; ++j) v[j] = F.mul(s, v[j]);
        return v;
    }
    throw std::domain_error("cannot normalize the zero vector");
}

SymPoint make_point(const Field& F, const Vec6& v) { return SymPoint{normalize6(F, v)}; }

Mat3 point_matrix(const SymPoint& p) {
    const Vec6& y = p.y;
    return Mat3{{{y[0], y[1], y[2]}, {y[1], y[3], y[4]}, {y[2], y[4], y[5]}}};
}

SymPoint matrix_point(const Field& F, const Mat3& m) {
    return make_point(F, Vec6{m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2]});
}

SymPoint veronese(const Field& F, const Vec3& x) {
    if (x[0] == 0 && x[1] == 0 && x[2] == 0)
        throw std::domain_error("veronese: zero input");
    return make_point(F, Vec6{F.mul(x[0], x[0]), F.mul(x[0], x[1]), F.mul(x[0], x[2]),
                              F.mul(x[1], x[1]), F.mul(x[1], x[2]), F.mul(x[2], x[2])});
}

int mat_rank(const Field& F, Mat3 m) {
    int rank = 0;
    for (int col = 0, row = 0; col < 3 && row < 3; ++col) {
        int piv = -1;
        for (int i = row; i < 3; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        const Fe s = F.inv(m[row][col]);
        for (int j = col; j < 3; ++j) m[row][j] = F.mul(s, m[row][j]);
        for (int i = row + 1; i < 3; ++i) {
            const Fe f = m[i][col];
            if (f == 0) continue;
            for (int j = col; j < 3; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

int point_rank(const Field& F, const SymPoint& p) { return mat_rank(F, point_matrix(p)); }

Subspace span_of(const Field& F, std::vector<Vec6> rows) {
    size_t r = 0;
    for (int col = 0; col < 6 && r < rows.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Fe s = F.inv(rows[r][col]);
        for (int j = col; j < 6; ++j) rows[r][j] = F.mul(s, rows[r][j]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Fe f = rows[i][col];
            for (int j = col; j < 6; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        ++r;
    }
    if (r == 0) throw std::domain_error("span of zero vectors");
    rows.resize(r);
    return Subspace{static_cast<int>(r) - 1, std::move(rows)};
}

std::string subspace_key(const Subspace& s) {
    std::string k;
    k.reserve(1 + 6 * s.basis.size());
    k.push_back(static_cast<char>(s.dim));
    for (const Vec6& b : s.basis)
        for (Fe v : b) k.push_back(static_cast<char>(v));
    return k;
}

bool contains(const Field& F, const Subspace& s, const Vec6& v) {
    Vec6 w = v;
    for (const Vec6& b : s.basis) {
        int lead = 0;
        while (lead < 6 && b[lead] == 0) ++lead;
        if (lead < 6 && w[lead] != 0) {
            const Fe f = w[lead];
            for (int j = lead; j < 6; ++j) w[j] = F.sub(w[j], F.mul(f, b[j]));
        }
    }
    for (int j = 0; j < 6; ++j)
        if (w[j] != 0) return false;
    return true;
}

std::vector<SymPoint> subspace_points(const Field& F, const Subspace& s) {
    const int k = s.dim + 1;
    std::vector<SymPoint> pts;
    long long n = 1;
    for (int i = 0; i < k; ++i) n *= F.q();
    pts.reserve((n - 1) / (F.q() - 1));
    for_each_projective(F, k, [&](const std::vector<Fe>& c) {
        Vec6 v{};
        for (int i = 0; i < k; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < 6; ++j) v[j] = F.add(v[j], F.mul(c[i], s.basis[i][j]));
        }
        pts.push_back(make_point(F, v));
    });
    return pts;
}

std::vector<Subspace> plane_lines(const Field& F, const Subspace& s) {
    if (s.dim != 2) throw std::domain_error("plane_lines: subspace is not a plane");
    std::vector<Subspace> lines;
    lines.reserve(F.q() * F.q() + F.q() + 1);
    // Lines of the plane = kernels of dual vectors d on the coefficient space:
    // { sum_i c_i basis_i : d.c = 0 }.
    for_each_projective(F, 3, [&](const std::vector<Fe>& d) {
        int lead = 0;
        while (d[lead] == 0) ++lead;
        std::vector<Vec6> gens;
        for (int j = 0; j < 3; ++j) {
            if (j == lead) continue;
            // Kernel vector e_j - d_j e_lead (d_lead = 1).
            Vec6 v{};
            for (int t = 0; t < 6; ++t)
                v[t] = F.sub(s.basis[j][t], F.mul(d[j], s.basis[lead][t]));
            gens.push_back(v);
        }
        lines.push_back(span_of(F, std::move(gens)));
    });
    return lines;
}

NetInput parse_net(const Field& F, std::istream& in) {
    std::vector<long long> vals;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw parse_error("net input: non-numeric token in line: " + line);
    }
    if (vals.size() != 18)
        throw parse_error("net input: expected 18 coefficients, got " +
                          std::to_string(vals.size()));
    NetInput n;
    for (int i = 0; i < 18; ++i) {
        if (vals[i] < 0 || vals[i] >= F.q())
            throw parse_error("net input: coefficient " + std::to_string(vals[i]) +
                              " outside [0, " + std::to_string(F.q()) + ")");
        n.forms[i / 6][i % 6] = static_cast<Fe>(vals[i]);
    }
    return n;
}

NetInput read_net(const Field& F, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open net file: " + path);
    return parse_net(F, in);
}

Subspace net_to_plane(const Field& F, const NetInput& n) {
    for (const Vec6& f : n.forms) {
        bool zero = true;
        for (Fe c : f) zero = zero && c == 0;
        if (zero) throw not_rank_one_error("net contains the zero form");
    }
    Subspace s = span_of(F, {n.forms[0], n.forms[1], n.forms[2]});
    if (s.dim != 2)
        throw not_rank_one_error("forms are linearly dependent: a pencil, not a net");
    return s;
}

namespace {

// Quadratic in the monomial order x^2, xy, xz, y^2, yz, z^2.
using Quad = std::array<Fe, 6>;
// Linear form in x, y, z.
using Lin = std::array<Fe, 3>;

Quad mul_lin(const Field& F, const Lin& a, const Lin& b) {
    Quad r{};
    r[0] = F.mul(a[0], b[0]);
    r[1] = F.add(F.mul(a[0], b[1]), F.mul(a[1], b[0]));
    r[2] = F.add(F.mul(a[0], b[2]), F.mul(a[2], b[0]));
    r[3] = F.mul(a[1], b[1]);
    r[4] = F.add(F.mul(a[1], b[2]), F.mul(a[2], b[1]));
    r[5] = F.mul(a[2], b[2]);
    return r;
}

// Exponent triples of the cubic monomial order.
constexpr int kCubicExp[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                  {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
constexpr int kQuadExp[6][3] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};

int cubic_slot(int ex, int ey, int ez) {
    for (int i = 0; i < 10; ++i)
        if (kCubicExp[i][0] == ex && kCubicExp[i][1] == ey && kCubicExp[i][2] == ez) return i;
    throw internal_error("bad cubic monomial");
}

void add_quad_times_lin(const Field& F, CubicForm& acc, const Quad& qd, const Lin& l, bool neg) {
    for (int i = 0; i < 6; ++i) {
        if (qd[i] == 0) continue;
        for (int v = 0; v < 3; ++v) {
            if (l[v] == 0) continue;
            Fe term = F.mul(qd[i], l[v]);
            if (neg) term = F.neg(term);
            const int slot = cubic_slot(kQuadExp[i][0] + (v == 0), kQuadExp[i][1] + (v == 1),
                                        kQuadExp[i][2] + (v == 2));
            acc.c[slot] = F.add(acc.c[slot], term);
        }
    }
}

}  // namespace

CubicForm discriminant_cubic(const Field& F, const NetInput& n) {
    const Fe half = F.inv(F.scalar(2));
    // entry[i][j] = linear form (in x,y,z) at position (i,j) of A(x,y,z).
    Lin entry[3][3];
    for (int t = 0; t < 3; ++t) {
        const Vec6& f = n.forms[t];
        const Fe m01 = F.mul(half, f[1]);
        const Fe m02 = F.mul(half, f[2]);
        const Fe m12 = F.mul(half, f[4]);
        const Fe a[3][3] = {{f[0], m01, m02}, {m01, f[3], m12}, {m02, m12, f[5]}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) entry[i][j][t] = a[i][j];
    }
    CubicForm det{};
    constexpr int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (int s = 0; s < 6; ++s) {
        const Quad partial = mul_lin(F, entry[0][perm[s][0]], entry[1][perm[s][1]]);
        add_quad_times_lin(F, det, partial, entry[2][perm[s][2]], s >= 3);
    }
    return det;
}

Fe cubic_eval(const Field& F, const CubicForm& c, const Vec3& x) {
    Fe acc = 0;
    for (int i = 0; i < 10; ++i) {
        if (c.c[i] == 0) continue;
        Fe term = c.c[i];
        for (int e = 0; e < kCubicExp[i][0]; ++e) term = F.mul(term, x[0]);
        for (int e = 0; e < kCubicExp[i][1]; ++e) term = F.mul(term, x[1]);
        for (int e = 0; e < kCubicExp[i][2]; ++e) term = F.mul(term, x[2]);
        acc = F.add(acc, term);
    }
    return acc;
}

std::vector<Vec3> pg2_points(const Field& F) {
    std::vector<Vec3> pts;
    pts.reserve(F.q() * F.q() + F.q() + 1);
    for_each_projective(F, 3, [&](const std::vector<Fe>& c) {
        pts.push_back(Vec3{c[0], c[1], c[2]});
    });
    return pts;
}

std::vector<SymPoint> all_points5(const Field& F) {
    std::vector<SymPoint> pts;
    for_each_projective(F, 6, [&](const std::vector<Fe>& c) {
        pts.push_back(SymPoint{Vec6{c[0], c[1], c[2], c[3], c[4], c[5]}});
    });
    return pts;
}

std::vector<Subspace> all_subspaces5(const Field& F, int dim) {
    if (dim != 1 && dim != 2) throw std::domain_error("all_subspaces5: dim must be 1 or 2");
    const long long q = F.q();
    const int k = dim + 1;
    std::vector<Subspace> out;
    // Echelon matrices: choose pivot columns p0 < ... < p_{k-1}; row i is zero
    // before its pivot, 1 at it, zero at later pivots, free elsewhere.
    std::vector<int> piv(k);
    std::vector<std::pair<int, int>> freepos;  // (row, col)
    auto emit = [&] {
        freepos.clear();
        for (int i = 0; i < k; ++i)
            for (int c = piv[i] + 1; c < 6; ++c) {
                bool is_pivot = false;
                for (int j = 0; j < k; ++j) is_pivot = is_pivot || piv[j] == c;
                if (!is_pivot) freepos.push_back({i, c});
            }
        long long total = 1;
        for (size_t i = 0; i < freepos.size(); ++i) total *= q;
        for (long long t = 0; t < total; ++t) {
            std::vector<Vec6> rows(k, Vec6{});
            for (int i = 0; i < k; ++i) rows[i][piv[i]] = 1;
            long long r = t;
            for (auto [ri, ci] : freepos) {
                rows[ri][ci] = static_cast<Fe>(r % q);
                r /= q;
            }
            out.push_back(Subspace{dim, std::move(rows)});
        }
    };
    if (k == 2) {
        for (piv[0] = 0; piv[0] < 6; ++piv[0])
            for (piv[1] = piv[0] + 1; piv[1] < 6; ++piv[1]) emit();
    } else {
        for (piv[0] = 0; piv[0] < 6; ++piv[0])
            for (piv[1] = piv[0] + 1; piv[1] < 6; ++piv[1])
                for (piv[2] = piv[1] + 1; piv[2] < 6; ++piv[2]) emit();
    }
    return out;
}

}  // namespace cn
