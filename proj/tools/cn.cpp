// cn: classify pencils and nets of conics over odd-characteristic finite
// fields, and verify the associated orbit tables by direct computation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cn/errors.hpp"
#include "cn/gf.hpp"
#include "cn/group.hpp"
#include "cn/orbitclassify.hpp"
#include "cn/orbits.hpp"
#include "cn/pg.hpp"
#include "cn/reps.hpp"
#include "cn/tables.hpp"
#include "cn/verify.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw cn::parse_error(std::string(what) + ": bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw cn::parse_error(std::string(what) + ": empty list");
    return out;
}

cn::Field make_field(long long q, const std::string& modulus) {
    if (q == 0) throw cn::field_error("--q is required");
    if (modulus.empty()) return cn::Field(q);
    const std::vector<int> m = parse_int_list(modulus, "--modulus");
    return cn::Field(q, m);
}

std::string dist_str(const cn::PointDistribution& d) {
    std::ostringstream os;
    const auto a = d.as_array();
    os << "[" << a[0] << ", " << a[1] << ", " << a[2] << ", " << a[3] << "]";
    return os.str();
}

std::string vec6_str(const cn::Vec6& v) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 6; ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

void print_lod(std::ostream& os, const cn::LineDistribution& ld) {
    os << "line-orbit distribution:\n";
    for (int i = 0; i < cn::kNumLineOrbits; ++i)
        if (ld.counts[i] != 0)
            os << "  " << cn::to_string(cn::all_line_orbits()[i]) << ": " << ld.counts[i]
               << "\n";
    os << "  total: " << ld.total() << "\n";
}

void print_stabilizer(std::ostream& os, const cn::Field& F, const cn::Subspace& s,
                      int threads, bool force, bool elements) {
    const cn::StabOptions sopt{threads, force};
    if (elements) {
        const auto elems = cn::stabilizer_elements(F, s, sopt);
        os << "stabilizer order: " << elems.size() << "\n";
        os << "orbit size: " << cn::group_order(F) / static_cast<long long>(elems.size())
           << "\n";
        for (const cn::GroupElement& g : elems) {
            os << "  [";
            for (int r = 0; r < 3; ++r) {
                os << (r ? " [" : "[");
                for (int c = 0; c < 3; ++c) os << (c ? " " : "") << g.a[r][c];
                os << "]";
            }
            os << "]\n";
        }
    } else {
        const long long so = cn::stabilizer_order(F, s, sopt);
        os << "stabilizer order: " << so << "\n";
        os << "orbit size: " << cn::group_order(F) / so << "\n";
    }
}

cn::Subspace pencil_from_file(const cn::Field& F, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cn::parse_error("cannot open '" + path + "'");
    std::vector<long long> vals;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::stringstream ss(line);
        long long v;
        while (ss >> v) vals.push_back(v);
        if (!ss.eof()) throw cn::parse_error("bad token in '" + path + "'");
    }
    if (vals.size() != 12)
        throw cn::parse_error("expected 12 coefficients (two forms), got " +
                              std::to_string(vals.size()));
    std::vector<cn::Vec6> forms(2);
    for (int f = 0; f < 2; ++f)
        for (int i = 0; i < 6; ++i) {
            const long long v = vals[static_cast<size_t>(6 * f + i)];
            if (v < 0 || v >= F.q())
                throw cn::parse_error("coefficient " + std::to_string(v) +
                                      " out of range [0, q)");
            forms[static_cast<size_t>(f)][i] = static_cast<cn::Fe>(v);
        }
    const cn::Subspace s = cn::span_of(F, forms);
    if (s.dim != 1) throw cn::parse_error("the two forms are proportional; not a pencil");
    return s;
}

void print_reps_for(std::ostream& os, const cn::Field& F,
                    const std::optional<std::string>& which) {
    auto show_line = [&](cn::LineOrbit o) {
        const cn::Subspace s = cn::line_rep(F, o);
        os << cn::to_string(o) << ":";
        for (const cn::Vec6& b : s.basis) os << " " << vec6_str(b);
        os << "\n";
    };
    auto show_plane = [&](cn::PlaneOrbit p) {
        const cn::Subspace s = cn::plane_rep(F, p);
        os << cn::pretty(p) << " (" << cn::to_string(p) << "):";
        for (const cn::Vec6& b : s.basis) os << " " << vec6_str(b);
        os << "\n";
    };
    if (which) {
        if (auto o = cn::parse_line_orbit(*which)) {
            show_line(*o);
            return;
        }
        if (auto p = cn::parse_plane_orbit(*which)) {
            if (!cn::plane_label_valid(*p, static_cast<int>(F.q())))
                throw cn::parse_error("orbit " + cn::to_string(*p) + " does not occur at q=" +
                                      std::to_string(F.q()));
            show_plane(*p);
            return;
        }
        throw cn::parse_error("unknown orbit label '" + *which + "'");
    }
    os << "line-orbit representatives (q=" << F.q() << "):\n";
    for (cn::LineOrbit o : cn::all_line_orbits()) show_line(o);
    os << "plane-orbit representatives:\n";
    for (cn::PlaneOrbit p : cn::all_plane_labels())
        if (cn::plane_label_valid(p, static_cast<int>(F.q()))) show_plane(p);
}

void print_census(std::ostream& os, const cn::Field& F) {
    os << "line-orbit distribution of each rank-one plane orbit, q=" << F.q() << "\n";
    std::vector<std::string> headers;
    for (cn::LineOrbit o : cn::all_line_orbits()) headers.push_back(cn::to_string(o));
    os << "       ";
    for (const std::string& h : headers) os << " " << std::setw(6) << h;
    os << "  | total\n";
    for (cn::PlaneOrbit p : cn::all_plane_labels()) {
        if (!cn::plane_label_valid(p, static_cast<int>(F.q()))) continue;
        const cn::LineDistribution ld = cn::line_distribution(F, cn::plane_rep(F, p));
        os << std::setw(7) << std::left << cn::to_string(p) << std::right;
        for (int i = 0; i < cn::kNumLineOrbits; ++i) {
            os << " " << std::setw(6);
            if (ld.counts[i] == 0)
                os << ".";
            else
                os << ld.counts[i];
        }
        os << "  | " << ld.total() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of pencils and nets of conics over GF(q), q odd"};
    app.require_subcommand(1);

    long long q = 0;
    std::string modulus;
    app.add_option("--q", q, "field size, an odd prime power");
    app.add_option("--modulus", modulus,
                   "irreducible modulus for GF(p^k), comma-separated coefficients, constant "
                   "first (default: lexicographically smallest monic)");

    // classify-net
    auto* net_cmd = app.add_subcommand("classify-net", "classify a net of conics from a file");
    std::string net_file;
    bool net_stab = false, net_force = false;
    int net_threads = 0;
    net_cmd->add_option("file", net_file, "file with 18 coefficients (three forms)")
        ->required();
    net_cmd->add_flag("--stabilizer", net_stab, "also compute the stabilizer by group scan");
    net_cmd->add_flag("--force", net_force, "allow expensive scans (q in {9, 11, 13})");
    net_cmd->add_option("--threads", net_threads, "worker threads (0 = all)");

    // classify-line
    auto* line_cmd =
        app.add_subcommand("classify-line", "classify a pencil of conics from a file");
    std::string line_file;
    line_cmd->add_option("file", line_file, "file with 12 coefficients (two forms)")
        ->required();

    // classify-point
    auto* pt_cmd = app.add_subcommand("classify-point", "classify a single conic / point");
    std::vector<long long> pt_coords;
    pt_cmd->add_option("y", pt_coords, "six coefficients a00 a01 a02 a11 a12 a22")
        ->expected(6);

    // reps
    auto* reps_cmd = app.add_subcommand("reps", "print orbit representatives");
    std::string reps_orbit;
    reps_cmd->add_option("--orbit", reps_orbit, "a single orbit label (e.g. o8,1 or S14')");

    // verify-tables
    auto* ver_cmd = app.add_subcommand("verify-tables", "recompute and check all orbit tables");
    std::string qlist, json_path, stab_mode = "auto";
    bool ver_force = false, ver_timing = false;
    int ver_threads = 0, ver_translates = 1000;
    unsigned long long ver_seed = 12345;
    ver_cmd->add_option("--q-list", qlist, "comma-separated q values (default: --q)");
    ver_cmd->add_option("--json", json_path, "write a machine-readable report to this path");
    ver_cmd->add_flag("--force", ver_force, "allow expensive group scans (q in {9, 11, 13})");
    ver_cmd->add_option("--threads", ver_threads, "worker threads (0 = all)");
    ver_cmd->add_option("--seed", ver_seed, "seed for the random-translate checks");
    ver_cmd->add_flag("--timing", ver_timing, "include per-section timings in the output");
    ver_cmd->add_option("--stab", stab_mode, "stabilizer checks: auto, on, off")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    ver_cmd->add_option("--translates", ver_translates,
                        "random translates per plane orbit in the invariance check");

    // stabilizer
    auto* stab_cmd =
        app.add_subcommand("stabilizer", "brute-force stabilizer of an orbit representative");
    std::string stab_orbit;
    bool stab_force = false, stab_elems = false;
    int stab_threads = 0;
    stab_cmd->add_option("--orbit", stab_orbit, "orbit label (line or plane)")->required();
    stab_cmd->add_flag("--force", stab_force, "allow expensive scans (q in {9, 11, 13})");
    stab_cmd->add_flag("--elements", stab_elems, "print every stabilizer element");
    stab_cmd->add_option("--threads", stab_threads, "worker threads (0 = all)");

    // census
    app.add_subcommand("census", "recompute the full plane-by-line-orbit table for one q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (net_cmd->parsed()) {
            const cn::Field F = make_field(q, modulus);
            const cn::NetInput net = cn::read_net(F, net_file);
            const cn::Subspace plane = cn::net_to_plane(F, net);
            const cn::PlaneOrbit s = cn::classify_plane(F, plane);
            std::cout << "field: GF(" << F.q() << ")\n";
            std::cout << "orbit: " << cn::pretty(s) << " (" << cn::to_string(s) << ")\n";
            std::cout << "point distribution [n1, n2e, n2i, n3]: "
                      << dist_str(cn::point_distribution(F, plane)) << "\n";
            print_lod(std::cout, cn::line_distribution(F, plane));
            if (net_stab) print_stabilizer(std::cout, F, plane, net_threads, net_force, false);
        } else if (line_cmd->parsed()) {
            const cn::Field F = make_field(q, modulus);
            const cn::Subspace pencil = pencil_from_file(F, line_file);
            const cn::LineOrbit o = cn::classify_line(F, pencil);
            std::cout << "field: GF(" << F.q() << ")\n";
            std::cout << "orbit: " << cn::to_string(o) << "\n";
            std::cout << "point distribution [n1, n2e, n2i, n3]: "
                      << dist_str(cn::point_distribution(F, pencil)) << "\n";
        } else if (pt_cmd->parsed()) {
            const cn::Field F = make_field(q, modulus);
            cn::Vec6 y;
            for (int i = 0; i < 6; ++i) {
                const long long v = pt_coords[static_cast<size_t>(i)];
                if (v < 0 || v >= F.q())
                    throw cn::parse_error("coefficient " + std::to_string(v) +
                                          " out of range [0, q)");
                y[i] = static_cast<cn::Fe>(v);
            }
            const cn::SymPoint p = cn::make_point(F, y);
            std::cout << "field: GF(" << F.q() << ")\n";
            std::cout << "normalized: " << vec6_str(p.y) << "\n";
            std::cout << "rank: " << cn::point_rank(F, p) << "\n";
            std::cout << "class: " << cn::to_string(cn::classify_point(F, p)) << "\n";
        } else if (reps_cmd->parsed()) {
            const cn::Field F = make_field(q, modulus);
            print_reps_for(std::cout, F,
                           reps_orbit.empty() ? std::nullopt
                                              : std::optional<std::string>(reps_orbit));
        } else if (ver_cmd->parsed()) {
            std::vector<int> qs;
            if (!qlist.empty())
                qs = parse_int_list(qlist, "--q-list");
            else if (q != 0)
                qs.push_back(static_cast<int>(q));
            else
                throw cn::field_error("verify-tables needs --q or --q-list");
            if (!modulus.empty() && qs.size() != 1)
                throw cn::field_error("--modulus applies to a single q only");
            cn::VerifyOptions opt;
            opt.threads = ver_threads;
            opt.force = ver_force;
            opt.seed = ver_seed;
            opt.timing = ver_timing;
            opt.translates = ver_translates;
            if (stab_mode == "on") opt.stab = cn::VerifyOptions::Stab::On;
            if (stab_mode == "off") opt.stab = cn::VerifyOptions::Stab::Off;
            std::vector<cn::VerifyReport> reports;
            for (int qi : qs) {
                const cn::Field F = make_field(qi, modulus);
                reports.push_back(cn::verify_all(F, opt));
                cn::print_report(std::cout, reports.back(), opt.timing);
            }
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) throw cn::parse_error("cannot write '" + json_path + "'");
                out << cn::report_json(reports, opt);
            }
            for (const cn::VerifyReport& r : reports)
                if (!r.passed()) return 5;
        } else if (stab_cmd->parsed()) {
            const cn::Field F = make_field(q, modulus);
            cn::Subspace rep;
            if (auto o = cn::parse_line_orbit(stab_orbit)) {
                rep = cn::line_rep(F, *o);
                std::cout << "orbit: " << cn::to_string(*o) << "\n";
            } else if (auto p = cn::parse_plane_orbit(stab_orbit)) {
                if (!cn::plane_label_valid(*p, static_cast<int>(F.q())))
                    throw cn::parse_error("orbit " + cn::to_string(*p) +
                                          " does not occur at q=" + std::to_string(F.q()));
                rep = cn::plane_rep(F, *p);
                std::cout << "orbit: " << cn::pretty(*p) << " (" << cn::to_string(*p)
                          << ")\n";
            } else {
                throw cn::parse_error("unknown orbit label '" + stab_orbit + "'");
            }
            print_stabilizer(std::cout, F, rep, stab_threads, stab_force, stab_elems);
        } else {
            const cn::Field F = make_field(q, modulus);
            print_census(std::cout, F);
        }
    } catch (const cn::field_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cn::not_rank_one_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cn::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
