// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "adele/adelic.hpp"
#include "adele/error.hpp"
#include "adele/surface.hpp"

using namespace adele;

namespace {

using Terms = std::vector<std::pair<Exponent, int64_t>>;

PlaneCurve random_curve(const FieldPtr& k, std::mt19937_64& rng, int degree) {
    const int64_t p = k->characteristic();
    for (;;) {
        Terms t;
        for (int a = 0; a <= degree; ++a)
            for (int b = 0; a + b <= degree; ++b) t.push_back({{a, b, degree - a - b}, static_cast<int64_t>(rng() % p)});
        MultiPoly F(k, t);
        if (F.is_zero() || F.total_degree() != degree) continue;
        try {
            return PlaneCurve(F);
        } catch (const Error&) {
        }
    }
}

struct SurfacePair {
    SurfaceDivisor D1, D2;
    IntersectionOptions opt;
};

// Several curves on each side so that there are many flags to evaluate.
SurfacePair surface_pair(int curves) {
    const FieldPtr k = FieldSpec::prime(7);
    std::mt19937_64 rng(2024);
    IntersectionOptions opt;
    opt.ext_bound = 12;
    for (;;) {
        SurfaceDivisor D1 = SurfaceDivisor::of(random_curve(k, rng, 2));
        SurfaceDivisor D2 = SurfaceDivisor::of(random_curve(k, rng, 2));
        for (int i = 1; i < curves; ++i) {
            D1.add(random_curve(k, rng, 1 + i % 2), 1);
            D2.add(random_curve(k, rng, 1 + (i + 1) % 2), 1);
        }
        try {
            intersect_serial(D1, D2, opt);
            return {D1, D2, opt};
        } catch (const Error&) {
        }
    }
}

Divisor curve_divisor(const CurvePtr& c, int degree) {
    Divisor D(c);
    D.add(base_point(c), degree);
    return D;
}

void BM_intersect(benchmark::State& state) {
    const SurfacePair s = surface_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(intersect(s.D1, s.D2, s.opt).number);
}

void BM_intersect_serial(benchmark::State& state) {
    const SurfacePair s = surface_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(intersect_serial(s.D1, s.D2, s.opt).number);
}

void BM_cohomology(benchmark::State& state) {
    const CurvePtr c = CurveModel::elliptic(FieldSpec::prime(101), 3, 7);
    const Divisor D = curve_divisor(c, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(c, D).h0);
}

void BM_cohomology_serial(benchmark::State& state) {
    const CurvePtr c = CurveModel::elliptic(FieldSpec::prime(101), 3, 7);
    const Divisor D = curve_divisor(c, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims_serial(c, D).h0);
}

}  // namespace

BENCHMARK(BM_intersect)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_intersect_serial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cohomology)->Arg(-10)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cohomology_serial)->Arg(-10)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
