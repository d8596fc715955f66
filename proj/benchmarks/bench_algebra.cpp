#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wls/algebra.hpp"
#include "wls/ccrel.hpp"

using namespace wls;

namespace {

std::vector<Designation> random_list(std::size_t n)
{
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::size_t> pick(0, kDesignationCount - 1);
  std::vector<Designation> out(n);
  for (auto& d : out)
    d = kAllDesignations[pick(gen)];
  return out;
}

void BM_CombineMatrix(benchmark::State& state)
{
  const auto mode = state.range(0) ? Mode::Symmetrized : Mode::Raw;
  for (auto _ : state) {
    for (auto a : kAllDesignations)
      for (auto b : kAllDesignations)
        benchmark::DoNotOptimize(combine_matrix(a, b, mode));
  }
  state.SetItemsProcessed(state.iterations() * 144);
}
BENCHMARK(BM_CombineMatrix)->Arg(0)->Arg(1);

void BM_CombineOr(benchmark::State& state)
{
  for (auto _ : state) {
    for (auto a : kAllDesignations)
      for (auto b : kAllDesignations)
        benchmark::DoNotOptimize(combine_or(a, b));
  }
  state.SetItemsProcessed(state.iterations() * 144);
}
BENCHMARK(BM_CombineOr);

// Lists of PD/CC0/BY stay compatible, so the fold runs to the end.
void BM_CombineAll(benchmark::State& state)
{
  std::vector<Designation> list(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < list.size(); ++i)
    list[i] = kAllDesignations[i % 3];
  for (auto _ : state)
    benchmark::DoNotOptimize(combine_all(list, Engine::Matrix, Mode::Symmetrized));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CombineAll)->Range(8, 4096);

void BM_CombineAllRandom(benchmark::State& state)
{
  const auto list = random_list(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(combine_all(list, Engine::Or));
}
BENCHMARK(BM_CombineAllRandom)->Arg(64);

void BM_ValidateAlgebra(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(validate_algebra(Engine::Matrix, Mode::Raw));
}
BENCHMARK(BM_ValidateAlgebra);

LicenseDocument sample_doc()
{
  auto doc = LicenseDocument::for_designation(Designation::BY_NC_SA);
  doc.work_uri = "http://example.org/data/roads";
  doc.title = "roads & rails";
  doc.attribution_name = "Example Mapping Co.";
  doc.attribution_url = "http://example.org/";
  return doc;
}

void BM_EmitCcrel(benchmark::State& state)
{
  const auto doc = sample_doc();
  for (auto _ : state)
    benchmark::DoNotOptimize(emit_ccrel(doc));
}
BENCHMARK(BM_EmitCcrel);

void BM_ParseCcrel(benchmark::State& state)
{
  const auto text = emit_ccrel(sample_doc());
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_ccrel(text));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseCcrel);

}  // namespace

BENCHMARK_MAIN();
