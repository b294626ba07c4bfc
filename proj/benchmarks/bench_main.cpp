#include <benchmark/benchmark.h>

#include <random>

#include "hullkit/embedding.hpp"
#include "hullkit/fixtures.hpp"

using namespace hullkit;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, f->q() - 1);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set_enc(i, j, dist(rng));
    return m;
}

Matrix random_symmetric(const FieldPtr& f, std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, f->q() - 1);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const std::uint32_t v = dist(rng);
            m.set_enc(i, j, v);
            m.set_enc(j, i, v);
        }
    return m;
}

void BM_FieldMul(benchmark::State& state) {
    const FieldPtr f = FieldSpec::make(2, 8);
    std::uint32_t a = 7, b = 131;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = f->mul_enc(a, b));
        b = b == 255 ? 1 : b + 1;
    }
}
BENCHMARK(BM_FieldMul);

void BM_Rank32(benchmark::State& state) {
    const FieldPtr f = FieldSpec::make(3, 2);
    const Matrix m = random_matrix(f, 32, 32, 42);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank32);

void BM_DiagonalizeSymmetricOdd16(benchmark::State& state) {
    const FieldPtr f = FieldSpec::make(5);
    const Matrix m = random_symmetric(f, 16, 7);
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize_symmetric_odd(m));
}
BENCHMARK(BM_DiagonalizeSymmetricOdd16);

void BM_MinimumDistance(benchmark::State& state) {
    const FixtureTable& table = fixture("table3");  // [18,8] over GF(3): 3^8 codewords
    for (auto _ : state) benchmark::DoNotOptimize(minimum_distance(table.code));
}
BENCHMARK(BM_MinimumDistance);

void BM_EmbedSelfOrthogonal(benchmark::State& state) {
    const FixtureTable& table = fixture("table3");
    for (auto _ : state) benchmark::DoNotOptimize(embed(table.code, table.code.k(), table.kind));
}
BENCHMARK(BM_EmbedSelfOrthogonal);

}  // namespace

BENCHMARK_MAIN();
