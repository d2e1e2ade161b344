#include <benchmark/benchmark.h>

#include <sstream>
#include <vector>

#include "hcentral/analysis.hpp"
#include "hcentral/citation_distribution.hpp"
#include "hcentral/core_metrics.hpp"
#include "hcentral/fixtures.hpp"
#include "hcentral/io.hpp"
#include "hcentral/synthetic.hpp"

namespace {

hcentral::CitationDistribution sized_distribution(int papers) {
  hcentral::Rng rng(static_cast<std::uint64_t>(papers));
  std::vector<hcentral::Count> counts(static_cast<std::size_t>(papers));
  for (auto& c : counts) c = rng.uniform_int(0, 4 * papers);
  return hcentral::CitationDistribution(std::move(counts));
}

void BM_decompose(benchmark::State& state) {
  const auto d = sized_distribution(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hcentral::decompose(d));
}
BENCHMARK(BM_decompose)->Arg(100)->Arg(1000)->Arg(10000);

void BM_radius_series(benchmark::State& state) {
  const auto d = sized_distribution(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hcentral::radius_series(d));
}
BENCHMARK(BM_radius_series)->Arg(100)->Arg(1000)->Arg(10000);

void BM_correlation_matrix(benchmark::State& state) {
  const hcentral::Cohort cohort = hcentral::reference_cohort();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hcentral::correlate_radius_indexes(cohort, hcentral::RadiusIndexKind::area, "1999",
                                           "2004"));
  }
}
BENCHMARK(BM_correlation_matrix);

void BM_parse_index_table(benchmark::State& state) {
  const std::string& text = hcentral::reference_index_table_csv();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(hcentral::read_cohort_csv(in));
  }
}
BENCHMARK(BM_parse_index_table);

void BM_power_law_generation(benchmark::State& state) {
  hcentral::Rng rng(13);
  const hcentral::SyntheticOptions options{.h_target = static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hcentral::generate_power_law(options, rng));
}
BENCHMARK(BM_power_law_generation)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
