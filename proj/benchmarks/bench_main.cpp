#include <benchmark/benchmark.h>

#include <vector>

#include "qhalf/autgrp.hpp"
#include "qhalf/backforth.hpp"
#include "qhalf/colouring.hpp"
#include "qhalf/enumerate.hpp"
#include "qhalf/halfgraph.hpp"
#include "qhalf/rational.hpp"

namespace {

using namespace qhalf;

std::vector<Rational> support_of(int size) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) out.push_back(rat(2 * i + 1, 2));
  return out;
}

void BM_enumerate_unit_interval(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    MediantEnumerator points(Interval(Rational(0), Rational(1)));
    Rational last;
    for (std::size_t i = 0; i < count; ++i) last = points.next();
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(count));
}
BENCHMARK(BM_enumerate_unit_interval)->Arg(100)->Arg(1000)->Arg(10000);

void BM_truncation_automorphisms(benchmark::State& state) {
  FiniteGraph g = truncation(support_of(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    PermGroup group = automorphisms(g);
    benchmark::DoNotOptimize(group.elements.size());
  }
}
BENCHMARK(BM_truncation_automorphisms)->Arg(4)->Arg(8)->Arg(12);

void BM_check_structure(benchmark::State& state) {
  std::vector<Rational> support = support_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    StructureReport r = check_structure(support);
    benchmark::DoNotOptimize(r.all());
  }
}
BENCHMARK(BM_check_structure)->Arg(4)->Arg(8)->Arg(12);

void BM_lazy_image_queries(benchmark::State& state) {
  ColouringSpec spec = ColouringSpec::denom_mod(3, {0, 1, 2}, 3);
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    LazyAut aut = refute_order_colouring(spec, 10000);
    MediantEnumerator points(aut.region().interval);
    Rational last;
    for (std::size_t i = 0; i < count; ++i) last = aut.image(points.next());
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(count));
}
BENCHMARK(BM_lazy_image_queries)->Arg(16)->Arg(64)->Arg(256);

void BM_distinguishing_number(benchmark::State& state) {
  FiniteGraph g = truncation(support_of(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto number = distinguishing_number(g);
    benchmark::DoNotOptimize(number.has_value());
  }
}
BENCHMARK(BM_distinguishing_number)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
