// Acceptance harness: eight end-to-end criteria, one line each, exit code =
// number of failed criteria. Time budgets are pinned next to each criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cn/gf.hpp"
#include "cn/group.hpp"
#include "cn/orbitclassify.hpp"
#include "cn/orbits.hpp"
#include "cn/pg.hpp"
#include "cn/reps.hpp"
#include "cn/tables.hpp"
#include "cn/verify.hpp"

using namespace cn;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed = 0;

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
    if (!pass) ++g_failed;
}

void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(id, name, pass, detail);
}

std::string fmt_secs(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << " s";
    return os.str();
}

// The q values exercised by the table-reproduction criteria: every residue of
// q mod 3 is covered twice, plus a large cubic-power field.
const std::vector<long long> kSmallQ = {3, 5, 7, 9, 11, 13};
const long long kBigQ = 27;

std::string collect_fail(const SectionReport& s) {
    for (const CellCheck& c : s.cells)
        if (c.status == CellStatus::Mismatch)
            return s.name + ": " + c.table + " " + c.label + " [" + c.cell + "] expected " +
                   c.expected_expr + ", computed " + std::to_string(c.computed);
    return s.name + ": section failed";
}

}  // namespace

int main() {
    run(1, "line-orbit distributions of all plane representatives", [](std::string& d) {
        const double kBudgetSmall = 10.0, kBudgetBig = 120.0;
        VerifyOptions opt;
        long long cells = 0;
        const auto t0 = Clock::now();
        for (long long q : kSmallQ) {
            const Field F(q);
            const SectionReport s = verify_lod_table(F, opt);
            if (!s.passed()) {
                d = "q=" + std::to_string(q) + " " + collect_fail(s);
                return false;
            }
            if ((q % 3 == 2) != (s.known_discrepancies() == 2)) {
                d = "q=" + std::to_string(q) + ": published-variant flags wrong";
                return false;
            }
            cells += static_cast<long long>(s.cells.size());
        }
        const double small = secs(t0);
        const auto t1 = Clock::now();
        const SectionReport big = verify_lod_table(Field(kBigQ), opt);
        const double bigs = secs(t1);
        if (!big.passed()) {
            d = "q=27 " + collect_fail(big);
            return false;
        }
        cells += static_cast<long long>(big.cells.size());
        d = std::to_string(cells) + " cells; q<=13 in " + fmt_secs(small) + " (budget 10 s), " +
            "q=27 in " + fmt_secs(bigs) + " (budget 120 s)";
        return small < kBudgetSmall && bigs < kBudgetBig;
    });

    run(2, "point-orbit distributions of all line representatives", [](std::string& d) {
        const double kBudget = 1.0;
        VerifyOptions opt;
        long long cells = 0;
        const auto t0 = Clock::now();
        for (long long q : kSmallQ) {
            const SectionReport s = verify_line_table(Field(q), opt);
            if (!s.passed()) {
                d = "q=" + std::to_string(q) + " " + collect_fail(s);
                return false;
            }
            cells += static_cast<long long>(s.cells.size());
        }
        {
            const SectionReport s = verify_line_table(Field(kBigQ), opt);
            if (!s.passed()) {
                d = "q=27 " + collect_fail(s);
                return false;
            }
            cells += static_cast<long long>(s.cells.size());
        }
        const double t = secs(t0);
        d = std::to_string(cells) + " cells in " + fmt_secs(t) + " (budget 1 s)";
        return t < kBudget;
    });

    run(3, "point-orbit distributions of all plane representatives", [](std::string& d) {
        const double kBudget = 5.0;
        VerifyOptions opt;
        long long cells = 0;
        const auto t0 = Clock::now();
        for (long long q : kSmallQ) {
            const SectionReport s = verify_plane_point_table(Field(q), opt);
            if (!s.passed()) {
                d = "q=" + std::to_string(q) + " " + collect_fail(s);
                return false;
            }
            cells += static_cast<long long>(s.cells.size());
        }
        {
            const SectionReport s = verify_plane_point_table(Field(kBigQ), opt);
            if (!s.passed()) {
                d = "q=27 " + collect_fail(s);
                return false;
            }
            cells += static_cast<long long>(s.cells.size());
        }
        const double t = secs(t0);
        d = std::to_string(cells) + " cells in " + fmt_secs(t) + " (budget 5 s)";
        return t < kBudget;
    });

    run(4, "brute-force plane stabilizers and orbit sizes", [](std::string& d) {
        const double kBudget3 = 1.0, kBudget5 = 30.0, kBudget7 = 600.0;
        VerifyOptions opt;
        std::ostringstream times;
        for (long long q : {3LL, 5LL, 7LL}) {
            const auto t0 = Clock::now();
            const SectionReport s = verify_stab_table(Field(q), opt);
            const double t = secs(t0);
            if (!s.ran || !s.passed()) {
                d = "q=" + std::to_string(q) + " " + collect_fail(s);
                return false;
            }
            const double budget = q == 3 ? kBudget3 : q == 5 ? kBudget5 : kBudget7;
            times << (q == 3 ? "" : ", ") << "q=" << q << " " << fmt_secs(t);
            if (t >= budget) {
                d = "q=" + std::to_string(q) + " took " + fmt_secs(t) + ", budget " +
                    fmt_secs(budget);
                return false;
            }
        }
        d = times.str() + " (budgets 1/30/600 s)";
        return true;
    });

    run(5, "support-pattern injectivity and 1000 random translates per orbit",
        [](std::string& d) {
            VerifyOptions opt;
            opt.translates = 1000;
            long long checks = 0;
            const auto t0 = Clock::now();
            for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 27LL}) {
                const SectionReport s = verify_summary_injectivity(Field(q), opt);
                if (!s.passed()) {
                    d = "q=" + std::to_string(q) + " " + collect_fail(s);
                    return false;
                }
                checks += static_cast<long long>(s.cells.size());
            }
            d = std::to_string(checks) + " checks in " + fmt_secs(secs(t0));
            return true;
        });

    run(6, "exhaustive partition of PG(5,3) and orbit-enumeration agreement",
        [](std::string& d) {
            const double kBudget = 120.0;
            VerifyOptions opt;
            const auto t0 = Clock::now();
            const SectionReport s = verify_partition(Field(3), opt);
            const double t = secs(t0);
            if (!s.ran || !s.passed()) {
                d = collect_fail(s);
                return false;
            }
            d = std::to_string(s.cells.size()) + " checks in " + fmt_secs(t) +
                " (budget 120 s)";
            return t < kBudget;
        });

    run(7, "exterior/interior criterion equals the tangent-count definition",
        [](std::string& d) {
            long long cells = 0;
            for (long long q : {3LL, 5LL}) {
                const SectionReport s = verify_extcriteria_oracle(Field(q), VerifyOptions{});
                if (!s.ran || !s.passed()) {
                    d = "q=" + std::to_string(q) + " " + collect_fail(s);
                    return false;
                }
                cells += static_cast<long long>(s.cells.size());
            }
            d = std::to_string(cells) + " checks, zero disagreements";
            return true;
        });

    run(8, "property suites: field axioms, action laws, invariance, determinism",
        [](std::string& d) {
            // Field axioms, exhaustive for every odd prime power q <= 27.
            for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 17LL, 19LL, 23LL, 25LL, 27LL}) {
                const Field F(q);
                for (Fe a = 0; a < F.q(); ++a) {
                    if (F.add(a, F.neg(a)) != 0 || F.pow(a, F.q()) != a ||
                        (a != 0 && F.mul(a, F.inv(a)) != 1)) {
                        d = "unit laws fail at q=" + std::to_string(q);
                        return false;
                    }
                    for (Fe b = 0; b < F.q(); ++b) {
                        if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a)) {
                            d = "commutativity fails at q=" + std::to_string(q);
                            return false;
                        }
                        for (Fe c = 0; c < F.q(); ++c)
                            if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c)) ||
                                F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)) ||
                                F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) {
                                d = "ring laws fail at q=" + std::to_string(q);
                                return false;
                            }
                    }
                }
            }
            // Action laws and invariance under random group elements.
            std::mt19937_64 rng(2026);
            for (long long q : {3LL, 9LL, 25LL}) {
                const Field F(q);
                const auto pts = pg2_points(F);
                const Subspace rep = plane_rep(F, PlaneOrbit::S5);
                for (int n = 0; n < 300; ++n) {
                    const GroupElement g = random_element(F, rng);
                    const GroupElement h = random_element(F, rng);
                    const Vec3& x = pts[static_cast<size_t>(rng() % pts.size())];
                    const SymPoint p = veronese(F, x);
                    if (!(act_point(F, g, p) == veronese(F, mat3_apply(F, g.a, x)))) {
                        d = "veronese equivariance fails at q=" + std::to_string(q);
                        return false;
                    }
                    const GroupElement gh = normalize_element(F, mat3_mul(F, g.a, h.a));
                    if (!(act_point(F, gh, p) == act_point(F, g, act_point(F, h, p)))) {
                        d = "composition fails at q=" + std::to_string(q);
                        return false;
                    }
                }
                for (int n = 0; n < 30; ++n) {
                    const GroupElement g = random_element(F, rng);
                    const Subspace moved = act_subspace(F, g, rep);
                    if (point_distribution(F, moved) != point_distribution(F, rep)) {
                        d = "distribution invariance fails at q=" + std::to_string(q);
                        return false;
                    }
                }
                if (!(act_subspace(F, identity_element(), rep) == rep)) {
                    d = "identity action fails";
                    return false;
                }
            }
            // Rank invariance at q=9.
            {
                const Field F(9);
                const auto pts = all_points5(F);
                for (int n = 0; n < 300; ++n) {
                    const GroupElement g = random_element(F, rng);
                    const SymPoint& p =
                        pts[static_cast<size_t>(rng() % static_cast<unsigned long long>(
                                                     pts.size()))];
                    if (point_rank(F, act_point(F, g, p)) != point_rank(F, p) ||
                        classify_point(F, act_point(F, g, p)) != classify_point(F, p)) {
                        d = "rank invariance fails";
                        return false;
                    }
                }
            }
            // Row-sum invariants of the embedded tables.
            validate_tables();
            for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 25LL, 27LL, 49LL, 81LL}) {
                for (LineOrbit o : all_line_orbits()) {
                    long long sum = 0;
                    for (const PolyQ& p : line_point_dist(o)) sum += eval_poly(p, q);
                    if (sum != q + 1) {
                        d = "line row sum fails at q=" + std::to_string(q);
                        return false;
                    }
                }
                for (PlaneOrbit s : all_plane_labels()) {
                    if (!plane_label_valid(s, static_cast<int>(q))) continue;
                    long long lsum = 0;
                    for (long long v : plane_lod(s, q)) lsum += v;
                    long long psum = 0;
                    for (long long v : plane_point_dist(s, q)) psum += v;
                    if (lsum != q * q + q + 1 || psum != q * q + q + 1) {
                        d = "plane row sum fails at q=" + std::to_string(q);
                        return false;
                    }
                }
            }
            // Determinism under thread-count variation.
            {
                const Field F(3);
                const Subspace rep = plane_rep(F, PlaneOrbit::S15);
                const auto e1 = stabilizer_elements(F, rep, StabOptions{1, false});
                const auto e2 = stabilizer_elements(F, rep, StabOptions{2, false});
                const auto e3 = stabilizer_elements(F, rep, StabOptions{3, false});
                if (!(e1 == e2) || !(e1 == e3) || e1.size() != 54) {
                    d = "stabilizer thread determinism fails";
                    return false;
                }
                VerifyOptions va;
                va.translates = 25;
                va.stab = VerifyOptions::Stab::Off;
                VerifyOptions vb = va;
                vb.threads = 2;
                if (report_json({verify_all(F, va)}, va) !=
                    report_json({verify_all(F, vb)}, vb)) {
                    d = "report thread determinism fails";
                    return false;
                }
            }
            d = "all property suites green";
            return true;
        });

    std::cout << (g_failed == 0 ? "acceptance: ALL CRITERIA PASSED"
                                : "acceptance: " + std::to_string(g_failed) +
                                      " criteria FAILED")
              << "\n";
    return g_failed;
}
