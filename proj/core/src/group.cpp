#include "cn/group.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace cn {
namespace {

int lead_of(const Vec3& v) {
    for (int i = 0; i < 3; ++i)
        if (v[i] != 0) return i;
    return -1;
}

// Normalized first rows in a fixed order: (1,a,b), then (0,1,b), then (0,0,1).
long long num_first_rows(long long q) { return q * q + q + 1; }

Vec3 first_row_from_index(long long q, long long idx) {
    if (idx < q * q) return {1, static_cast<Fe>(idx / q), static_cast<Fe>(idx % q)};
    idx -= q * q;
    if (idx < q) return {0, 1, static_cast<Fe>(idx)};
    return {0, 0, 1};
}

// Calls fn(m) for every group element whose normalized first row has index in
// [begin, end); deterministic order. fn returning false aborts the block.
template <typename Fn>
bool scan_block(const Field& F, long long begin, long long end, Fn&& fn) {
    const long long q = F.q();
    const long long q3 = q * q * q;
    Mat3 m;
    for (long long i1 = begin; i1 < end; ++i1) {
        m[0] = first_row_from_index(q, i1);
        const int lead = lead_of(m[0]);
        for (long long t2 = 0; t2 < q3; ++t2) {
            m[1] = {static_cast<Fe>(t2 % q), static_cast<Fe>((t2 / q) % q),
                    static_cast<Fe>(t2 / (q * q))};
            const Fe l = m[1][lead];
            if (m[1][0] == F.mul(l, m[0][0]) && m[1][1] == F.mul(l, m[0][1]) &&
                m[1][2] == F.mul(l, m[0][2]))
                continue;  // r2 proportional to r1
            const Vec3 cross = {F.sub(F.mul(m[0][1], m[1][2]), F.mul(m[0][2], m[1][1])),
                                F.sub(F.mul(m[0][2], m[1][0]), F.mul(m[0][0], m[1][2])),
                                F.sub(F.mul(m[0][0], m[1][1]), F.mul(m[0][1], m[1][0]))};
            for (long long t3 = 0; t3 < q3; ++t3) {
                m[2] = {static_cast<Fe>(t3 % q), static_cast<Fe>((t3 / q) % q),
                        static_cast<Fe>(t3 / (q * q))};
                const Fe det = F.add(F.add(F.mul(cross[0], m[2][0]), F.mul(cross[1], m[2][1])),
                                     F.mul(cross[2], m[2][2]));
                if (det == 0) continue;
                if (!fn(m)) return false;
            }
        }
    }
    return true;
}

int resolve_threads(int t) {
    if (t > 0) return t;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void check_scan_guard(long long q, bool force) {
    if (q <= 7) return;
    if (q <= 13) {
        if (force) return;
        throw guard_error("full group scan at q=" + std::to_string(q) +
                          " is expensive; pass force to run it");
    }
    throw guard_error("full group scan refused for q > 13 (" + std::to_string(q) + ")");
}

// True iff every basis row of s maps into the span of s under a. Uses the
// echelon structure: a vector lies in the span iff it equals the combination
// of basis rows given by its entries at the pivot columns.
bool fixes_subspace(const Field& F, const Mat3& a, const Subspace& s,
                    const int* pivots, const int* nonpivots, int nnon) {
    const int k = s.dim + 1;
    for (int bi = 0; bi < k; ++bi) {
        const Vec6 z = act_vec6(F, a, s.basis[bi]);
        for (int c = 0; c < nnon; ++c) {
            const int col = nonpivots[c];
            Fe want = 0;
            for (int i = 0; i < k; ++i)
                want = F.add(want, F.mul(z[pivots[i]], s.basis[i][col]));
            if (want != z[col]) return false;
        }
    }
    return true;
}

struct PivotInfo {
    int pivots[3];
    int nonpivots[6];
    int nnon;
};

PivotInfo pivot_info(const Subspace& s) {
    PivotInfo pi{};
    const int k = s.dim + 1;
    for (int i = 0; i < k; ++i) {
        int lead = 0;
        while (lead < 6 && s.basis[i][lead] == 0) ++lead;
        pi.pivots[i] = lead;
    }
    pi.nnon = 0;
    for (int c = 0; c < 6; ++c) {
        bool is_piv = false;
        for (int i = 0; i < k; ++i) is_piv = is_piv || pi.pivots[i] == c;
        if (!is_piv) pi.nonpivots[pi.nnon++] = c;
    }
    return pi;
}

std::vector<Mat3> bfs_generators(const Field& F) {
    std::vector<Mat3> gens;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Mat3 t = identity_element().a;
            t[i][j] = 1;
            gens.push_back(t);
        }
    // One determinant-class generator: diag(g,1,1) with g primitive.
    for (long long g = 2; g < F.q(); ++g) {
        Fe x = static_cast<Fe>(g);
        long long ord = 1;
        while (x != 1) {
            x = F.mul(x, static_cast<Fe>(g));
            ++ord;
        }
        if (ord == F.q() - 1) {
            Mat3 d = identity_element().a;
            d[0][0] = static_cast<Fe>(g);
            gens.push_back(d);
            break;
        }
    }
    return gens;
}

}  // namespace

GroupElement identity_element() {
    return GroupElement{Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

GroupElement normalize_element(const Field& F, Mat3 m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (m[i][j] == 0) continue;
            const Fe s = F.inv(m[i][j]);
            Mat3 r;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) r[a][b] = F.mul(s, m[a][b]);
            return GroupElement{r};
        }
    throw std::domain_error("cannot normalize the zero matrix");
}

Fe mat3_det(const Field& F, const Mat3& m) {
    const Fe c0 = F.sub(F.mul(m[1][1], m[2][2]), F.mul(m[1][2], m[2][1]));
    const Fe c1 = F.sub(F.mul(m[1][2], m[2][0]), F.mul(m[1][0], m[2][2]));
    const Fe c2 = F.sub(F.mul(m[1][0], m[2][1]), F.mul(m[1][1], m[2][0]));
    return F.add(F.add(F.mul(m[0][0], c0), F.mul(m[0][1], c1)), F.mul(m[0][2], c2));
}

Mat3 mat3_mul(const Field& F, const Mat3& x, const Mat3& y) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Fe acc = 0;
            for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(x[i][k], y[k][j]));
            r[i][j] = acc;
        }
    return r;
}

Vec3 mat3_apply(const Field& F, const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i) {
        Fe acc = 0;
        for (int j = 0; j < 3; ++j) acc = F.add(acc, F.mul(m[i][j], v[j]));
        r[i] = acc;
    }
    return r;
}

Vec6 act_vec6(const Field& F, const Mat3& a, const Vec6& y) {
    const Mat3 my = {{{y[0], y[1], y[2]}, {y[1], y[3], y[4]}, {y[2], y[4], y[5]}}};
    Mat3 t;  // a * M_y
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Fe acc = 0;
            for (int j = 0; j < 3; ++j) acc = F.add(acc, F.mul(a[i][j], my[j][k]));
            t[i][k] = acc;
        }
    auto z = [&](int i, int j) {
        Fe acc = 0;
        for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(t[i][k], a[j][k]));
        return acc;
    };
    return Vec6{z(0, 0), z(0, 1), z(0, 2), z(1, 1), z(1, 2), z(2, 2)};
}

SymPoint act_point(const Field& F, const GroupElement& g, const SymPoint& p) {
    return make_point(F, act_vec6(F, g.a, p.y));
}

Subspace act_subspace(const Field& F, const GroupElement& g, const Subspace& s) {
    std::vector<Vec6> rows;
    rows.reserve(s.basis.size());
    for (const Vec6& b : s.basis) rows.push_back(act_vec6(F, g.a, b));
    return span_of(F, std::move(rows));
}

long long group_order(const Field& F) {
    const long long q = F.q();
    return q * q * q * (q * q * q - 1) * (q * q - 1);
}

void enumerate_group(const Field& F, const std::function<bool(const GroupElement&)>& fn) {
    scan_block(F, 0, num_first_rows(F.q()),
               [&](const Mat3& m) { return fn(GroupElement{m}); });
}

long long stabilizer_order(const Field& F, const Subspace& s, const StabOptions& opt) {
    check_scan_guard(F.q(), opt.force);
    const PivotInfo pi = pivot_info(s);
    const int nthreads = resolve_threads(opt.threads);
    const long long nrows = num_first_rows(F.q());
    if (nthreads == 1) {
        long long count = 0;
        scan_block(F, 0, nrows, [&](const Mat3& m) {
            if (fixes_subspace(F, m, s, pi.pivots, pi.nonpivots, pi.nnon)) ++count;
            return true;
        });
        return count;
    }
    std::vector<long long> counts(nthreads, 0);
    std::vector<std::thread> workers;
    for (int w = 0; w < nthreads; ++w) {
        const long long begin = nrows * w / nthreads;
        const long long end = nrows * (w + 1) / nthreads;
        workers.emplace_back([&, w, begin, end] {
            long long c = 0;
            scan_block(F, begin, end, [&](const Mat3& m) {
                if (fixes_subspace(F, m, s, pi.pivots, pi.nonpivots, pi.nnon)) ++c;
                return true;
            });
            counts[w] = c;
        });
    }
    for (auto& t : workers) t.join();
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

std::vector<GroupElement> stabilizer_elements(const Field& F, const Subspace& s,
                                              const StabOptions& opt) {
    check_scan_guard(F.q(), opt.force);
    const PivotInfo pi = pivot_info(s);
    const int nthreads = resolve_threads(opt.threads);
    const long long nrows = num_first_rows(F.q());
    std::vector<std::vector<GroupElement>> parts(nthreads);
    std::vector<std::thread> workers;
    for (int w = 0; w < nthreads; ++w) {
        const long long begin = nrows * w / nthreads;
        const long long end = nrows * (w + 1) / nthreads;
        workers.emplace_back([&, w, begin, end] {
            scan_block(F, begin, end, [&](const Mat3& m) {
                if (fixes_subspace(F, m, s, pi.pivots, pi.nonpivots, pi.nnon))
                    parts[w].push_back(GroupElement{m});
                return true;
            });
        });
    }
    for (auto& t : workers) t.join();
    std::vector<GroupElement> out;  // block order = global enumeration order
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

long long orbit_size(const Field& F, const Subspace& s, const StabOptions& opt) {
    const long long stab = stabilizer_order(F, s, opt);
    const long long g = group_order(F);
    if (g % stab != 0) throw internal_error("stabilizer order does not divide the group order");
    return g / stab;
}

std::vector<Subspace> orbit_bfs(const Field& F, const Subspace& s, bool force) {
    const long long q = F.q();
    if (q > 5 || (q == 5 && !force))
        throw guard_error(q > 5 ? "orbit enumeration refused for q > 5"
                                : "orbit enumeration at q=5 needs force");
    const std::vector<Mat3> gens = bfs_generators(F);
    std::unordered_set<std::string> seen;
    std::vector<Subspace> orbit;
    std::deque<Subspace> frontier;
    const Subspace start = span_of(F, s.basis);
    seen.insert(subspace_key(start));
    orbit.push_back(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        const Subspace cur = std::move(frontier.front());
        frontier.pop_front();
        for (const Mat3& g : gens) {
            Subspace img = act_subspace(F, GroupElement{g}, cur);
            if (seen.insert(subspace_key(img)).second) {
                orbit.push_back(img);
                frontier.push_back(std::move(img));
            }
        }
    }
    return orbit;
}

GroupElement random_element(const Field& F, std::mt19937_64& rng) {
    const long long q = F.q();
    // Power-of-two rejection keeps the draw uniform and platform-independent.
    unsigned long long mask = 1;
    while (mask < static_cast<unsigned long long>(q)) mask <<= 1;
    --mask;
    auto draw = [&] {
        unsigned long long v;
        do {
            v = rng() & mask;
        } while (v >= static_cast<unsigned long long>(q));
        return static_cast<Fe>(v);
    };
    while (true) {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = draw();
        if (mat3_det(F, m) != 0) return normalize_element(F, m);
    }
}

int projective_order(const Field& F, const GroupElement& g) {
    auto is_scalar = [&](const Mat3& m) {
        return m[0][1] == 0 && m[0][2] == 0 && m[1][0] == 0 && m[1][2] == 0 && m[2][0] == 0 &&
               m[2][1] == 0 && m[0][0] == m[1][1] && m[1][1] == m[2][2] && m[0][0] != 0;
    };
    Mat3 p = g.a;
    for (int n = 1; n <= 1 << 20; ++n) {
        if (is_scalar(p)) return n;
        p = mat3_mul(F, p, g.a);
    }
    throw internal_error("projective order exceeds bound");
}

}  // namespace cn
