#include <memory>

#include <benchmark/benchmark.h>

#include "mgc/arclength.hpp"
#include "mgc/expr.hpp"
#include "mgc/family.hpp"
#include "mgc/frenet.hpp"

namespace {

using namespace mgc;

std::shared_ptr<const CurveSpec> fixture() {
    static auto c = std::make_shared<CurveSpec>(parse("sinh(u)"), parse("cosh(u)"),
                                                parse("sqrt(2)*cos(u)"), parse("sqrt(2)*sin(u)"),
                                                Interval{0.0, 2.0});
    return c;
}

void BM_ParseExpr(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(parse("sqrt(2)*cos(u) + sinh(u)^3/4 - exp(-u^2)"));
}
BENCHMARK(BM_ParseExpr);

void BM_EvalJet(benchmark::State& state) {
    const Expr e = parse("sqrt(2)*cos(u) + sinh(u)^3/4 - exp(-u^2)");
    double u = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(e.eval_jet(u, 5));
        u += 1e-6;
    }
}
BENCHMARK(BM_EvalJet);

void BM_ArcLength(benchmark::State& state) {
    auto c = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(arc_length(*c, 0.0, 2.0));
}
BENCHMARK(BM_ArcLength);

void BM_ArcLengthInvert(benchmark::State& state) {
    auto c = fixture();
    const ArcLengthMap m(c);
    double s = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.invert(s));
        s += 1e-4;
        if (s > 1.9) s = 0.1;
    }
}
BENCHMARK(BM_ArcLengthInvert);

void BM_FrenetApparatus(benchmark::State& state) {
    auto c = fixture();
    const ArcLengthMap m(c);
    double s = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(frenet_apparatus(*c, m, s));
        s += 1e-4;
        if (s > 1.9) s = 0.1;
    }
}
BENCHMARK(BM_FrenetApparatus);

void BM_FamilyTable(benchmark::State& state) {
    FamilyParams fp;
    fp.alpha = 0.5;
    fp.g = parse("u");
    fp.h = parse("u^2/4");
    fp.domain = {0.25, 2.0};
    fp.n_nodes = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_curve(fp));
}
BENCHMARK(BM_FamilyTable)->Arg(256)->Arg(1024);

void BM_FamilyApparatus(benchmark::State& state) {
    FamilyParams fp;
    fp.alpha = 0.5;
    fp.g = parse("u");
    fp.h = parse("u^2/4");
    fp.domain = {0.25, 2.0};
    auto c = generate_curve(fp);
    double u = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(frenet_apparatus_at_param(*c, u));
        u += 1e-4;
        if (u > 1.9) u = 0.3;
    }
}
BENCHMARK(BM_FamilyApparatus);

} // namespace

BENCHMARK_MAIN();
