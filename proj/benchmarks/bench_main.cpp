#include <benchmark/benchmark.h>

#include <random>

#include "shortbasis/shortbasis.hpp"

using namespace shortbasis;

namespace {

// GLS basis with the whole group order as modulus, which avoids factoring
// orders of several hundred bits.
struct GlsLattice {
  Basis basis;
  DecompositionProblem problem;
};

GlsLattice gls_instance(unsigned bits) {
  std::mt19937_64 rng(bits);
  for (;;) {
    const Int p = random_prime(rng, Int(1) << (bits - 1), (Int(1) << bits) - 1);
    const Int t0 = random_between(rng, 1, isqrt(4 * p));
    const Int order = (p - 1) * (p - 1) + t0 * t0;
    if (gcd(t0, order) != 1) continue;
    const Int lambda = floor_mod((p - 1) * mod_inv(t0, order), order);
    return {gls_basis(p, t0), DecompositionProblem(order, {lambda})};
  }
}

void BM_GlsBasis(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Int p = random_prime(rng, Int(1) << (state.range(0) - 1), (Int(1) << state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(gls_basis(p, 3));
}
BENCHMARK(BM_GlsBasis)->Arg(64)->Arg(128)->Arg(256);

void BM_Babai2d(benchmark::State& state) {
  const GlsLattice inst = gls_instance(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    const Int m = random_below(rng, inst.problem.modulus());
    benchmark::DoNotOptimize(babai_decompose(inst.basis, inst.problem, m));
  }
}
BENCHMARK(BM_Babai2d)->Arg(64)->Arg(128)->Arg(256);

void BM_Babai4d(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const LatticeInstance inst = random_gi_lattice(rng, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    const Int m = random_below(rng, inst.problem.modulus());
    benchmark::DoNotOptimize(babai_decompose(inst.basis, inst.problem, m));
  }
}
BENCHMARK(BM_Babai4d)->Arg(16)->Arg(32);

void BM_GaussReduceLongBasis(benchmark::State& state) {
  const GlsLattice inst = gls_instance(static_cast<unsigned>(state.range(0)));
  const Basis lng = long_basis(inst.problem);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_reduce(lng));
}
BENCHMARK(BM_GaussReduceLongBasis)->Arg(64)->Arg(128)->Arg(256);

void BM_Hnf4d(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const LatticeInstance inst = random_gi_lattice(rng, 32);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(inst.basis));
}
BENCHMARK(BM_Hnf4d);

void BM_ShrinkToFit(benchmark::State& state) {
  const Basis b = ec2d_basis(-3, 2, {0, 1});
  const DecompositionProblem five(5, {2});
  for (auto _ : state) benchmark::DoNotOptimize(shrink_to_fit(b, five));
}
BENCHMARK(BM_ShrinkToFit);

void BM_Cornacchia(benchmark::State& state) {
  std::mt19937_64 rng(5);
  Int q;
  do {
    q = random_prime(rng, Int(1) << (state.range(0) - 1), (Int(1) << state.range(0)) - 1);
  } while (q % 4 != 1);
  for (auto _ : state) benchmark::DoNotOptimize(cornacchia_4q(-4, q));
}
BENCHMARK(BM_Cornacchia)->Arg(64)->Arg(128);

void BM_NaiveCount(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const Int p = random_prime(rng, Int(1) << (state.range(0) - 1), (Int(1) << state.range(0)) - 1);
  const Field F = Field::prime(p);
  const CurveInstance E(F, F.from_int(2), F.from_int(3));
  for (auto _ : state) benchmark::DoNotOptimize(naive_count(E));
}
BENCHMARK(BM_NaiveCount)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

struct GlsCurveFixture {
  CurveBackedInstance inst;
  Basis reduced;
};

const GlsCurveFixture& gls_curve() {
  static const GlsCurveFixture fixture = [] {
    std::mt19937_64 rng(7);
    for (;;) {
      const Int p = random_prime(rng, Int(1) << 15, Int(1) << 16);
      const Field F = Field::prime(p);
      try {
        if (auto inst = gls_curve_instance(CurveInstance(F, F.random(rng), F.random(rng)), rng)) {
          Basis reduced =
              gauss_reduce(shrink_to_fit(inst->lattice.basis, inst->lattice.problem));
          return GlsCurveFixture{std::move(*inst), std::move(reduced)};
        }
      } catch (const MathError&) {
      }
    }
  }();
  return fixture;
}

void BM_ScalarMulTwist(benchmark::State& state) {
  const auto& f = gls_curve();
  std::mt19937_64 rng(8);
  for (auto _ : state) {
    const Int m = random_below(rng, f.inst.lattice.problem.modulus());
    benchmark::DoNotOptimize(f.inst.curve.scalar_mul(m, f.inst.point));
  }
}
BENCHMARK(BM_ScalarMulTwist);

void BM_DecomposedMulTwist(benchmark::State& state) {
  const auto& f = gls_curve();
  std::mt19937_64 rng(8);
  for (auto _ : state) {
    const Int m = random_below(rng, f.inst.lattice.problem.modulus());
    benchmark::DoNotOptimize(decomposed_mul(f.inst.curve, m, f.inst.point, f.reduced,
                                            f.inst.lattice.problem, f.inst.endos));
  }
}
BENCHMARK(BM_DecomposedMulTwist);

}  // namespace

BENCHMARK_MAIN();
