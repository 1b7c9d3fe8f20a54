#include <benchmark/benchmark.h>

#include "hyperball/ball.hpp"
#include "hyperball/classify.hpp"
#include "hyperball/generate.hpp"
#include "hyperball/group.hpp"

using namespace hyperball;

namespace {

CMatrix random_hermitian(std::size_t n, Rng& rng) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rng.gaussian_complex();
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

void BM_HermitianEig(benchmark::State& state) {
    Rng rng(1);
    const CMatrix m = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig)->Arg(8)->Arg(32);

void BM_RandomUnitary(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(random_unitary(static_cast<std::size_t>(state.range(0)), seed++));
}
BENCHMARK(BM_RandomUnitary)->Arg(8)->Arg(32);

void BM_Compose(benchmark::State& state) {
    Rng rng(2);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const GElement s = random_element(Family::Uniform, n, rng);
    const GElement t = random_element(Family::Uniform, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(compose(s, t));
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(32);

void BM_Canonicalize(benchmark::State& state) {
    Rng rng(3);
    const CMatrix m = random_element(Family::Uniform, static_cast<std::size_t>(state.range(0)), rng)
                          .matrix();
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(m));
}
BENCHMARK(BM_Canonicalize)->Arg(8)->Arg(32);

void BM_CaratheodoryDistance(benchmark::State& state) {
    Rng rng(4);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const BallPoint x = random_ball_point(n, 0.9, rng);
    const BallPoint y = random_ball_point(n, 0.9, rng);
    for (auto _ : state) benchmark::DoNotOptimize(caratheodory_distance(x, y));
}
BENCHMARK(BM_CaratheodoryDistance)->Arg(8)->Arg(32);

void BM_DynamicalTypeClosedForm(benchmark::State& state) {
    Rng rng(5);
    const GElement t = random_element(Family::Reducing, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(dynamical_type(t));
}
BENCHMARK(BM_DynamicalTypeClosedForm)->Arg(8)->Arg(32);

} // namespace

BENCHMARK_MAIN();
