#include "fic/chow.hpp"
#include "fic/instanton.hpp"
#include "fic/linalg.hpp"
#include "fic/monad_lab.hpp"
#include "fic/prime_field.hpp"
#include "fic/registry.hpp"
#include "fic/rng.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

const fic::Registry& reg() {
  static fic::Registry r = fic::Registry::builtin();
  return r;
}

fic::ChowClass random_class(fic::SeededRng& rng) {
  auto coeff = [&rng]() {
    return fic::Rational(rng.int_in(-9, 9)) / rng.int_in(1, 3);
  };
  return {coeff(), coeff(), coeff(), coeff()};
}

void BM_euler_pair(benchmark::State& state) {
  const fic::FanoData& X = reg().by_name("X9");
  fic::SeededRng rng(7);
  std::vector<fic::ChowClass> classes;
  for (int i = 0; i < 64; ++i) classes.push_back(random_class(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& A = classes[i % classes.size()];
    const auto& B = classes[(i + 17) % classes.size()];
    benchmark::DoNotOptimize(fic::euler_pair(A, B, X));
    ++i;
  }
}
BENCHMARK(BM_euler_pair);

void BM_gamma_grid(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& X : reg().threefolds) {
      for (long long n = 1; n <= 6; ++n) {
        for (long long k = 0; k <= 10; ++k) {
          benchmark::DoNotOptimize(fic::gamma(X, n, k));
        }
      }
    }
  }
}
BENCHMARK(BM_gamma_grid);

template <class T>
fic::Matrix<T> random_matrix(std::size_t dim, fic::SeededRng& rng) {
  fic::Matrix<T> m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m.at(i, j) = T(rng.int_in(-99, 99));
    }
  }
  return m;
}

void BM_rank_rational(benchmark::State& state) {
  fic::SeededRng rng(11);
  const auto m =
      random_matrix<fic::Rational>(static_cast<std::size_t>(state.range(0)),
                                   rng);
  for (auto _ : state) benchmark::DoNotOptimize(fic::rank(m));
}
BENCHMARK(BM_rank_rational)->Arg(16)->Arg(32)->Arg(64);

void BM_rank_fp61(benchmark::State& state) {
  fic::SeededRng rng(11);
  fic::Matrix<fic::Fp61> m(static_cast<std::size_t>(state.range(0)),
                           static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      m.at(i, j) = fic::Fp61::from_signed(rng.int_in(-99, 99));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(fic::rank(m));
}
BENCHMARK(BM_rank_fp61)->Arg(16)->Arg(64)->Arg(256);

void BM_monad_cohomology(benchmark::State& state) {
  const fic::MonadInstance M = fic::sample_monad(3, 2, 5);
  const long long t = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fic::monad_cohomology(M, t));
  }
}
BENCHMARK(BM_monad_cohomology)->Arg(0)->Arg(2)->Arg(5);

void BM_line_splitting(benchmark::State& state) {
  const fic::MonadInstance M = fic::sample_monad(2, 1, 7);
  fic::SeededRng rng(3);
  auto point = [&rng]() {
    std::array<fic::Rational, 4> p;
    for (auto& c : p) c = rng.int_in(-9, 9);
    return p;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(fic::line_splitting(M, point(), point()));
  }
}
BENCHMARK(BM_line_splitting);

}  // namespace

BENCHMARK_MAIN();
