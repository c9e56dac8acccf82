#include <benchmark/benchmark.h>

#include <dforge/isogeny.hpp>
#include <dforge/text.hpp>

using namespace dforge;

namespace {

ExtFieldPtr quadratic(const FqFieldPtr& F) {
  return ExtField::create(F, {parse_rat(F, "-T - 1"), parse_rat(F, "0"), parse_rat(F, "1")});
}

void BM_RightDivmod(benchmark::State& state) {
  const auto F = FqField::prime(3);
  const auto K = state.range(1) ? quadratic(F) : ExtField::rational(F);
  Rng rng(1);
  const int d = int(state.range(0));
  const SkewPoly a = SkewPoly::random(*K, rng, 2 * d, 2, 1);
  const SkewPoly b = SkewPoly::random(*K, rng, d, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(right_divmod(a, b));
}
BENCHMARK(BM_RightDivmod)->ArgsProduct({{1, 2, 3}, {0, 1}});

void BM_RightGcd(benchmark::State& state) {
  const auto F = FqField::prime(3);
  const auto K = ExtField::rational(F);
  Rng rng(2);
  const int d = int(state.range(0));
  const SkewPoly g = SkewPoly::random(*K, rng, 1, 1, 0);
  const SkewPoly a = SkewPoly::random(*K, rng, d, 1, 0) * g, b = SkewPoly::random(*K, rng, d, 1, 0) * g;
  for (auto _ : state) benchmark::DoNotOptimize(right_gcd(a, b));
}
BENCHMARK(BM_RightGcd)->DenseRange(1, 3);

struct WorkedExample {
  FqFieldPtr F;
  ExtFieldPtr K;
  GaloisDatum G;
  DrinfeldModule phi, sphi;
  SkewPoly mu;

  explicit WorkedExample(std::uint32_t p)
      : F(FqField::prime(p)),
        K(quadratic(F)),
        G(K, {GaloisGenerator{"s", -K->gen(), 2}}),
        phi(parse_skew(*K, "(x + 1 - t)*(x - 1 + t)")),
        sphi(conjugate_module(G, G.generator(0), phi)),
        mu(parse_skew(*K, "x + 1 - t")) {}
};

void BM_JInvariant(benchmark::State& state) {
  const WorkedExample ex(std::uint32_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ex.phi.j_invariant());
}
BENCHMARK(BM_JInvariant)->Arg(3)->Arg(5)->Arg(7);

void BM_DegreeAndDual(benchmark::State& state) {
  const WorkedExample ex(std::uint32_t(state.range(0)));
  for (auto _ : state) {
    const Isogeny mu(ex.sphi, ex.phi, ex.mu);
    benchmark::DoNotOptimize(dual(mu));
  }
}
BENCHMARK(BM_DegreeAndDual)->Arg(3)->Arg(5)->Arg(7);

void BM_EndomorphismSearch(benchmark::State& state) {
  const auto F = FqField::prime(3);
  const auto K = ExtField::rational(F);
  const DrinfeldModule phi(parse_skew(*K, "T + (T + 1)*t + t^2"));
  for (auto _ : state) benchmark::DoNotOptimize(certify_non_cm(phi, int(state.range(0))));
}
BENCHMARK(BM_EndomorphismSearch)->DenseRange(1, 2);

}  // namespace
