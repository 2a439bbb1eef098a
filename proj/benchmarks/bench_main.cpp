// Microbenchmarks for the hot paths: normalization, multiplication,
// inversion, super-summit sets, conjugacy decisions, the brute-force
// oracle, and homology.  Inputs are prepared outside the timing loops
// from a fixed seed so runs are comparable.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hoso/conjugacy.hpp"
#include "hoso/element.hpp"
#include "hoso/invariants.hpp"
#include "hoso/oracle.hpp"
#include "hoso/periodic.hpp"
#include "hoso/presentation.hpp"
#include "hoso/word.hpp"

using namespace hoso;

namespace {

Word random_signed_word(const Presentation& pres, std::mt19937& rng, int letters) {
  Word w;
  std::uniform_int_distribution<int> dpow(-2, 2);
  int k = dpow(rng);
  if (k != 0) w.push_back({true, 0, 0, k});
  std::uniform_int_distribution<int> pick_factor(0, pres.factor_count() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int t = 0; t < letters; ++t) {
    int j = pick_factor(rng);
    std::uniform_int_distribution<int> pick_atom(0, pres.factor(j).atoms - 1);
    w.push_back({false, j, pick_atom(rng), sign(rng) ? 1 : -1});
  }
  return w;
}

std::vector<Word> prepared_words(const Presentation& pres, int count, int letters) {
  std::mt19937 rng(42);
  std::vector<Word> out;
  for (int i = 0; i < count; ++i) out.push_back(random_signed_word(pres, rng, letters));
  return out;
}

std::vector<GarsideElement> prepared_elements(const Presentation& pres, int count,
                                              int letters) {
  std::vector<GarsideElement> out;
  for (const Word& w : prepared_words(pres, count, letters))
    out.push_back(to_left_weighted(pres, w));
  return out;
}

void BM_normalize(benchmark::State& state) {
  Presentation pres = Presentation::parse("3,4");
  std::vector<Word> words = prepared_words(pres, 64, static_cast<int>(state.range(0)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_left_weighted(pres, words[i]));
    i = (i + 1) % words.size();
  }
}
BENCHMARK(BM_normalize)->Arg(8)->Arg(32)->Arg(128);

void BM_multiply(benchmark::State& state) {
  Presentation pres = Presentation::parse("3,4");
  std::vector<GarsideElement> xs = prepared_elements(pres, 64, 32);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(pres, xs[i], xs[(i + 1) % xs.size()]));
    i = (i + 1) % xs.size();
  }
}
BENCHMARK(BM_multiply);

void BM_inverse(benchmark::State& state) {
  Presentation pres = Presentation::parse("3,4");
  std::vector<GarsideElement> xs = prepared_elements(pres, 64, 32);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse(pres, xs[i]));
    i = (i + 1) % xs.size();
  }
}
BENCHMARK(BM_inverse);

void BM_sss_periodic(benchmark::State& state) {
  Presentation pres = Presentation::parse("6,4");
  GarsideElement x = to_left_weighted(pres, parse_word(pres, "a0 a1"));
  for (auto _ : state) benchmark::DoNotOptimize(super_summit_set(pres, x));
}
BENCHMARK(BM_sss_periodic);

void BM_sss_rigid(benchmark::State& state) {
  Presentation pres = Presentation::parse("3,4");
  // A rigid representative sampled once outside the loop.
  std::mt19937 rng(7);
  GarsideElement rep = GarsideElement::delta_power(0);
  for (;;) {
    GarsideElement x = to_left_weighted(pres, random_signed_word(pres, rng, 6));
    auto [r, c] = send_to_sss(pres, x);
    if (is_rigid(pres, r) && r.canonical_length() >= 2 && !periodicity(pres, r)) {
      rep = r;
      break;
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(super_summit_set(pres, rep));
}
BENCHMARK(BM_sss_rigid);

void BM_are_conjugate(benchmark::State& state) {
  Presentation pres = Presentation::parse("3,4");
  std::vector<GarsideElement> xs = prepared_elements(pres, 16, 8);
  std::mt19937 rng(11);
  std::vector<GarsideElement> ys;
  for (const GarsideElement& x : xs)
    ys.push_back(conjugate(pres, x, to_left_weighted(pres, random_signed_word(pres, rng, 4))));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_conjugate(pres, xs[i], ys[i]));
    i = (i + 1) % xs.size();
  }
}
BENCHMARK(BM_are_conjugate);

void BM_oracle_ball(benchmark::State& state) {
  Presentation pres = Presentation::parse("2,3");
  for (auto _ : state) {
    Ball ball(pres, state.range(0), 1000000);
    benchmark::DoNotOptimize(ball.class_count());
  }
}
BENCHMARK(BM_oracle_ball)->Arg(6)->Arg(9);

void BM_homology(benchmark::State& state) {
  Presentation pres = Presentation::parse("6,8;4,6;5,5");
  for (auto _ : state) benchmark::DoNotOptimize(homology(pres, 1));
}
BENCHMARK(BM_homology);

}  // namespace

BENCHMARK_MAIN();
