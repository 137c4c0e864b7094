#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "cn/gf.hpp"
#include "cn/group.hpp"
#include "cn/orbitclassify.hpp"
#include "cn/pg.hpp"
#include "cn/reps.hpp"

namespace {

const cn::Field& field(long long q) {
    static std::map<long long, cn::Field> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, cn::Field(q)).first;
    return it->second;
}

void BM_field_mul(benchmark::State& state) {
    const cn::Field& F = field(state.range(0));
    cn::Fe a = 1, b = 2;
    for (auto _ : state) {
        a = F.mul(a, b);
        b = F.add(b, 1);
        if (b == 0) b = 1;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_field_mul)->Arg(7)->Arg(27)->Arg(121);

void BM_classify_point(benchmark::State& state) {
    const cn::Field& F = field(state.range(0));
    const auto pts = cn::all_points5(F);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cn::classify_point(F, pts[i]));
        if (++i == pts.size()) i = 0;
    }
}
BENCHMARK(BM_classify_point)->Arg(7)->Arg(27);

void BM_classify_line(benchmark::State& state) {
    const cn::Field& F = field(state.range(0));
    std::vector<cn::Subspace> reps;
    for (cn::LineOrbit o : cn::all_line_orbits()) reps.push_back(cn::line_rep(F, o));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cn::classify_line(F, reps[i]));
        if (++i == reps.size()) i = 0;
    }
}
BENCHMARK(BM_classify_line)->Arg(7)->Arg(27);

void BM_line_distribution(benchmark::State& state) {
    const cn::Field& F = field(state.range(0));
    const cn::Subspace rep = cn::plane_rep(F, cn::PlaneOrbit::S15);
    for (auto _ : state) benchmark::DoNotOptimize(cn::line_distribution(F, rep));
}
BENCHMARK(BM_line_distribution)->Arg(7)->Arg(27);

void BM_act_subspace(benchmark::State& state) {
    const cn::Field& F = field(state.range(0));
    const cn::Subspace rep = cn::plane_rep(F, cn::PlaneOrbit::S15);
    std::mt19937_64 rng(7);
    std::vector<cn::GroupElement> gs;
    for (int i = 0; i < 256; ++i) gs.push_back(cn::random_element(F, rng));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cn::act_subspace(F, gs[i], rep));
        if (++i == gs.size()) i = 0;
    }
}
BENCHMARK(BM_act_subspace)->Arg(7)->Arg(27);

void BM_stabilizer_scan_q3(benchmark::State& state) {
    const cn::Field& F = field(3);
    const cn::Subspace rep = cn::plane_rep(F, cn::PlaneOrbit::S15);
    const cn::StabOptions opt{1, false};
    for (auto _ : state) benchmark::DoNotOptimize(cn::stabilizer_order(F, rep, opt));
}
BENCHMARK(BM_stabilizer_scan_q3);

}  // namespace

BENCHMARK_MAIN();
