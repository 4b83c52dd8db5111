#include "blockscope/blocks.hpp"
#include "blockscope/character_table.hpp"
#include "blockscope/group_library.hpp"
#include "blockscope/group_ops.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace blockscope;

void bm_stab_chain_a6(benchmark::State& state) {
  for (auto _ : state) {
    PermGroup g = alternating_group(6);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(bm_stab_chain_a6);

void bm_conjugacy_classes_s5(benchmark::State& state) {
  PermGroup g = symmetric_group(5);
  for (auto _ : state) {
    ConjugacyClasses c = conjugacy_classes(g);
    benchmark::DoNotOptimize(c.count());
  }
}
BENCHMARK(bm_conjugacy_classes_s5);

void bm_cyclotomic_mul(benchmark::State& state) {
  Cyclotomic a = Cyclotomic::root_of_unity(60, 7) + Cyclotomic::root_of_unity(60, 11);
  Cyclotomic b = Cyclotomic::root_of_unity(60, 13) - Cyclotomic::root_of_unity(60, 29);
  for (auto _ : state) {
    Cyclotomic c = a * b;
    benchmark::DoNotOptimize(c.conductor());
  }
}
BENCHMARK(bm_cyclotomic_mul);

void bm_character_table(benchmark::State& state) {
  const PermGroup g = state.range(0) == 0   ? symmetric_group(5)
                      : state.range(0) == 1 ? alternating_group(5)
                                            : dihedral_group(20);
  for (auto _ : state) {
    CharacterTable t = CharacterTable::compute(g);
    benchmark::DoNotOptimize(t.class_count());
  }
}
BENCHMARK(bm_character_table)->Arg(0)->Arg(1)->Arg(2);

void bm_block_distribution_a5(benchmark::State& state) {
  CharacterTable t = CharacterTable::compute(alternating_group(5));
  for (auto _ : state) {
    BlockPartition bp = block_distribution(t, 2);
    benchmark::DoNotOptimize(bp.blocks.size());
  }
}
BENCHMARK(bm_block_distribution_a5);

} // namespace

BENCHMARK_MAIN();
