#include <benchmark/benchmark.h>

#include "k3atlas/maps.hpp"
#include "k3atlas/modular.hpp"
#include "k3atlas/search.hpp"

namespace {

using namespace k3atlas;

void BM_RationalMulAdd(benchmark::State &state) {
  const Rational a(Integer(-155), Integer(79)), b(Integer(42486), Integer(6241));
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RationalMulAdd);

void BM_K3Membership(benchmark::State &state) {
  const RatPoint p{Rational(Integer(-155), Integer(79)), Rational(Integer(42486), Integer(6241))};
  for (auto _ : state) benchmark::DoNotOptimize(is_on_curve(CurveId::K3, p));
}
BENCHMARK(BM_K3Membership);

void BM_KsToK3(benchmark::State &state) {
  const RatPoint zw{Rational(Integer(1), Integer(2)), Rational(Integer(-7), Integer(4))};
  for (auto _ : state) benchmark::DoNotOptimize(ks_to_k3(zw));
}
BENCHMARK(BM_KsToK3);

void BM_Exp(benchmark::State &state) {
  const int bits = static_cast<int>(state.range(0));
  const FixedReal x = FixedReal::from_rational(Rational(Integer(-40), Integer(7)), bits);
  for (auto _ : state) benchmark::DoNotOptimize(exp(x));
}
BENCHMARK(BM_Exp)->Arg(128)->Arg(512)->Arg(2048);

void BM_SchlafliW(benchmark::State &state) {
  const ModularContext ctx(163, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schlafli_w(ctx));
}
BENCHMARK(BM_SchlafliW)->Arg(151)->Arg(512);

void BM_SearchKs(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_ks(state.range(0), 1));
}
BENCHMARK(BM_SearchKs)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SearchIntegralK3(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_integral(CurveId::K3, state.range(0), 1));
}
BENCHMARK(BM_SearchIntegralK3)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
