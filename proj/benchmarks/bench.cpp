#include <cmath>

#include <benchmark/benchmark.h>

#include "siegel/exact/parse.hpp"
#include "siegel/halfspace/halfexpr.hpp"
#include "siegel/integrals/integrals.hpp"
#include "siegel/integrals/quadrature.hpp"
#include "siegel/rep/tables.hpp"
#include "siegel/shift/shift.hpp"
#include "siegel/uea/casimir.hpp"

using namespace siegel;

namespace {

Affine aff(const char* t) { return Affine::from_poly(P(t)); }

void BM_PolyProduct(benchmark::State& st) {
    Poly a = P("(u + v + pi*tau)^6"), b = P("(u - 2*v + 3)^5");
    for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyProduct);

void BM_CasimirCentral(benchmark::State& st) {
    auto c2 = uea::build_casimir(uea::Casimir::C2, uea::BOrientation::Transposed).element;
    for (auto _ : st) benchmark::DoNotOptimize(uea::is_central(c2));
}
BENCHMARK(BM_CasimirCentral)->Unit(benchmark::kMillisecond);

void BM_ScalarRestrictionC2(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(
            uea::verify_scalar_restriction(uea::Casimir::C2, uea::BOrientation::Transposed, Scalar(-1)).ok());
}
BENCHMARK(BM_ScalarRestrictionC2)->Unit(benchmark::kMillisecond);

void BM_DplusComposition(benchmark::State& st) {
    auto c1 = shift::casimir_rule_c1(), c2 = shift::casimir_rule_c2(shift::Table::Repaired);
    for (auto _ : st) benchmark::DoNotOptimize(shift::dplus_op(c1, c2, P("u")));
}
BENCHMARK(BM_DplusComposition)->Unit(benchmark::kMillisecond);

void BM_DeltaPlusSeed(benchmark::State& st) {
    half::HalfExpr seed = P("aT") * half::HalfExpr::exp_seed();
    for (auto _ : st) benchmark::DoNotOptimize(half::delta_plus2(seed, aff("k")));
}
BENCHMARK(BM_DeltaPlusSeed)->Unit(benchmark::kMillisecond);

void BM_ThreeQuarters(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(half::delta_minus2(half::delta_plus2(half::HalfExpr::h(), Affine(1))));
}
BENCHMARK(BM_ThreeQuarters)->Unit(benchmark::kMillisecond);

void BM_SturmTransform(benchmark::State& st) {
    auto A = integrals::from_halfexpr(half::delta_plus2(P("aT") * half::HalfExpr::exp_seed(), aff("k")));
    for (auto _ : st) benchmark::DoNotOptimize(integrals::sturm_value(A, aff("k + 2")));
}
BENCHMARK(BM_SturmTransform)->Unit(benchmark::kMillisecond);

void BM_ConeQuadrature(benchmark::State& st) {
    integrals::QuadratureConfig cfg;
    cfg.tol = std::pow(10.0, -static_cast<double>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(integrals::cone_integral(integrals::gamma_integrand(cfg.T, 0.5, 0), cfg).estimate);
}
BENCHMARK(BM_ConeQuadrature)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LanglandsEnumerate(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(rep::langlands_enumerate());
}
BENCHMARK(BM_LanglandsEnumerate)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
