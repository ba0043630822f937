#include <benchmark/benchmark.h>

#include "gredcheck/catalog.hpp"
#include "gredcheck/checker.hpp"

using namespace gredcheck;

namespace {

// Fresh ideal objects each iteration so the basis cache never hides the
// work being measured.
Ideal null_cone_fresh(const std::string& entry) {
  const auto& spec = catalog_get(entry);
  return Ideal(spec.ring, null_cone_ideal(spec).generators());
}

void BM_groebner_null_cone(benchmark::State& state,
                           const std::string& entry) {
  for (auto _ : state) {
    Ideal ideal = null_cone_fresh(entry);
    benchmark::DoNotOptimize(
        ideal.groebner(MonomialOrder::grevlex(), StepBudget(100'000'000)));
  }
}

void BM_rad_member_syzygy(benchmark::State& state) {
  const auto& spec = catalog_get("so2_2v");
  Polynomial e = pull_back(spec, "e");
  for (auto _ : state) {
    Ideal ideal(spec.ring, {pull_back(spec, "f12"), pull_back(spec, "f11*f22")});
    benchmark::DoNotOptimize(rad_member(e, ideal, StepBudget(100'000'000)));
  }
}

void BM_dim_null_cone(benchmark::State& state, const std::string& entry) {
  for (auto _ : state) {
    Ideal ideal = null_cone_fresh(entry);
    benchmark::DoNotOptimize(dim_variety(ideal, StepBudget(100'000'000)));
  }
}

void BM_full_check(benchmark::State& state, const std::string& entry,
                   const std::string& problem) {
  for (auto _ : state) {
    Problem p = bundled_problem(entry, problem);
    benchmark::DoNotOptimize(run_checks(p, {}));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_groebner_null_cone, sl2_k3, std::string("sl2_k3"));
BENCHMARK_CAPTURE(BM_groebner_null_cone, sl2_k4, std::string("sl2_k4"));
BENCHMARK_CAPTURE(BM_groebner_null_cone, su2_quat, std::string("su2_quat"));
BENCHMARK(BM_rad_member_syzygy);
BENCHMARK_CAPTURE(BM_dim_null_cone, sl2_k4, std::string("sl2_k4"));
BENCHMARK_CAPTURE(BM_dim_null_cone, su2_quat, std::string("su2_quat"));
BENCHMARK_CAPTURE(BM_full_check, so3, std::string("so3_2v"),
                  std::string("null_cone"));
BENCHMARK_CAPTURE(BM_full_check, su2, std::string("su2_quat"),
                  std::string("circle_diagonal"));

BENCHMARK_MAIN();
