// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "bcgroup/concrete_group.hpp"
#include "bcgroup/kernels.hpp"
#include "bcgroup/representation.hpp"

namespace {

using namespace bcgroup;

const ConcreteGroup& group_2_3() {
  static const auto g = ConcreteGroup::enumerate(GroupParams(2, 3));
  return g;
}

const ConcreteGroup& group_1_5() {
  static const auto g = ConcreteGroup::enumerate(GroupParams(1, 5));
  return g;
}

Index rank_index(const PoolUpdate& a) { return static_cast<Index>(rank_of(a)); }

template <bool Parallel>
void BM_BuildTable(benchmark::State& state) {
  const auto& g = group_1_5();
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::build_table(g.elements(), rank_index));
    } else {
      benchmark::DoNotOptimize(kernels::serial::build_table(g.elements(), rank_index));
    }
  }
}

template <bool Parallel>
void BM_CheckAxioms(benchmark::State& state) {
  const GroupParams p(6, 5);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::check_axioms(p, 1000, 1));
    } else {
      benchmark::DoNotOptimize(kernels::serial::check_axioms(p, 1000, 1));
    }
  }
}

template <bool Parallel>
void BM_SubgroupLattice(benchmark::State& state) {
  const auto& t = group_2_3().table();
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::subgroup_lattice(t));
    } else {
      benchmark::DoNotOptimize(kernels::serial::subgroup_lattice(t));
    }
  }
}

template <bool Parallel>
void BM_CayleyCheck(benchmark::State& state) {
  const auto& g = group_1_5();
  const auto rep = cayley_embedding(g);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::preserves_composition(g.table(), rep.images));
    } else {
      benchmark::DoNotOptimize(kernels::serial::preserves_composition(g.table(), rep.images));
    }
  }
}

template <bool Parallel>
void BM_Isomorphism(benchmark::State& state) {
  const auto a = to_table(uniform_relabel_subgroup(GroupParams(3, 4)));
  const auto b = symmetric_group_table(4);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::find_isomorphism(a, b));
    } else {
      benchmark::DoNotOptimize(kernels::serial::find_isomorphism(a, b));
    }
  }
}

BENCHMARK(BM_BuildTable<false>)->Name("build_table/serial");
BENCHMARK(BM_BuildTable<true>)->Name("build_table/parallel");
BENCHMARK(BM_CheckAxioms<false>)->Name("check_axioms/serial");
BENCHMARK(BM_CheckAxioms<true>)->Name("check_axioms/parallel");
BENCHMARK(BM_SubgroupLattice<false>)->Name("subgroup_lattice/serial");
BENCHMARK(BM_SubgroupLattice<true>)->Name("subgroup_lattice/parallel");
BENCHMARK(BM_CayleyCheck<false>)->Name("preserves_composition/serial");
BENCHMARK(BM_CayleyCheck<true>)->Name("preserves_composition/parallel");
BENCHMARK(BM_Isomorphism<false>)->Name("find_isomorphism/serial");
BENCHMARK(BM_Isomorphism<true>)->Name("find_isomorphism/parallel");

}  // namespace

BENCHMARK_MAIN();
