#include "blockscope/num_util.hpp"
#include "blockscope/blocks.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/group_library.hpp"
#include "blockscope/table_ops.hpp"

#include <doctest.h>

#include <numeric>

#include <set>

using namespace blockscope;

namespace {

std::multiset<std::multiset<std::uint64_t>> block_degree_sets(const CharacterTable& t,
                                                              const BlockPartition& bp) {
  std::multiset<std::multiset<std::uint64_t>> out;
  for (const auto& block : bp.blocks) {
    std::multiset<std::uint64_t> degrees;
    for (std::size_t idx : block) degrees.insert(t.degree(idx));
    out.insert(std::move(degrees));
  }
  return out;
}

} // namespace

TEST_CASE("spec block examples") {
  SUBCASE("p-groups have a single block") {
    for (const PermGroup& g : {heisenberg3(), dicyclic_group(2), cyclic_group(27)}) {
      CharacterTable t = CharacterTable::compute(g);
      for (std::uint64_t p : prime_divisors(g.order()))
        CHECK(block_distribution(t, p).blocks.size() == 1);
    }
  }
  SUBCASE("S3 at p=3: one block") {
    CharacterTable t = CharacterTable::compute(symmetric_group(3));
    BlockPartition bp = block_distribution(t, 3);
    CHECK(bp.blocks.size() == 1);
  }
  SUBCASE("S3 at p=2: {1, sign} plus a defect-zero block") {
    CharacterTable t = CharacterTable::compute(symmetric_group(3));
    BlockPartition bp = block_distribution(t, 2);
    REQUIRE(bp.blocks.size() == 2);
    CHECK(block_degree_sets(t, bp) ==
          std::multiset<std::multiset<std::uint64_t>>{{1, 1}, {2}});
    CHECK(defect_and_heights(t, bp, bp.principal_index).defect == 1);
    std::size_t other = bp.principal_index == 0 ? 1 : 0;
    CHECK(defect_and_heights(t, bp, other).defect == 0);
  }
  SUBCASE("A4 at p=3: three linears in B_0, the degree-3 character alone") {
    CharacterTable t = CharacterTable::compute(alternating_group(4));
    BlockPartition bp = block_distribution(t, 3);
    REQUIRE(bp.blocks.size() == 2);
    CHECK(block_degree_sets(t, bp) ==
          std::multiset<std::multiset<std::uint64_t>>{{1, 1, 1}, {3}});
    auto principal = principal_block_characters(bp);
    CHECK(principal.size() == 3);
    for (std::size_t idx : principal) CHECK(t.degree(idx) == 1);
  }
}

TEST_CASE("defects and heights") {
  CharacterTable t = CharacterTable::compute(alternating_group(4));
  BlockPartition bp = block_distribution(t, 3);
  BlockData principal = defect_and_heights(t, bp, bp.principal_index);
  CHECK(principal.defect == 1); // full defect
  for (unsigned h : principal.heights) CHECK(h == 0);

  // trivial character: height 0, p-rational, p'-degree, in B_0
  CHECK(bp.in_principal_block(0));
  CHECK(character_is_p_rational(t, 0, 3));
  CHECK(t.degree(0) % 3 != 0);
}

TEST_CASE("p-rationality filters") {
  CharacterTable ta4 = CharacterTable::compute(alternating_group(4));
  // the nontrivial linear characters of A4 carry zeta_3 values: not 3-rational
  std::size_t rational_linears = 0;
  for (std::size_t i = 0; i < ta4.class_count(); ++i)
    if (ta4.degree(i) == 1 && character_is_p_rational(ta4, i, 3)) ++rational_linears;
  CHECK(rational_linears == 1);

  CharacterTable ts3 = CharacterTable::compute(symmetric_group(3));
  // the sign character is 3-rational of 3'-degree in B_0
  BlockPartition bp = block_distribution(ts3, 3);
  std::size_t found = 0;
  for (std::size_t idx : principal_block_characters(bp)) {
    if (idx == 0) continue;
    if (ts3.degree(idx) == 1 && character_is_p_rational(ts3, idx, 3)) ++found;
  }
  CHECK(found == 1);
}

TEST_CASE("defect zero blocks are singletons with full p-valuation, both ways") {
  for (const PermGroup& g : {symmetric_group(4), alternating_group(5), psl_2_7(),
                             metacyclic_group(7, 3, 2)}) {
    CharacterTable t = CharacterTable::compute(g);
    for (std::uint64_t p : prime_divisors(g.order())) {
      BlockPartition bp = block_distribution(t, p);
      const unsigned a = valuation(t.order(), p);
      for (std::size_t b = 0; b < bp.blocks.size(); ++b) {
        BlockData data = defect_and_heights(t, bp, b);
        const bool defect_zero = data.defect == 0;
        const bool singleton_full =
            bp.blocks[b].size() == 1 && valuation(t.degree(bp.blocks[b][0]), p) == a;
        CHECK(defect_zero == singleton_full);
        // some member always has height zero
        bool has_zero = false;
        for (unsigned h : data.heights)
          if (h == 0) has_zero = true;
        CHECK(has_zero);
      }
    }
  }
}

TEST_CASE("principal block is Galois stable") {
  CharacterTable t = CharacterTable::compute(alternating_group(5));
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    BlockPartition bp = block_distribution(t, p);
    for (std::uint64_t mul = 1; mul < t.exponent(); ++mul) {
      if (std::gcd(mul, t.exponent()) != 1) continue;
      std::vector<int> perm = galois_permutation(t, mul);
      for (std::size_t idx : principal_block_characters(bp))
        CHECK(bp.in_principal_block(static_cast<std::size_t>(perm[idx])));
    }
  }
}

TEST_CASE("inflation lands in the principal block") {
  PermGroup a4 = alternating_group(4);
  PermGroup v4(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                   Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  CharacterTable ta4 = CharacterTable::compute(a4);
  QuotientMap q = quotient(a4, v4);
  CharacterTable tq = CharacterTable::compute(q.image());
  BlockPartition bp4 = block_distribution(ta4, 3);
  BlockPartition bpq = block_distribution(tq, 3);
  for (std::size_t i : principal_block_characters(bpq)) {
    ClassFunction lifted = inflate_character(tq, tq.irreducible(i), q, ta4);
    int idx = ta4.index_of_values(lifted.values);
    REQUIRE(idx >= 0);
    CHECK(bp4.in_principal_block(static_cast<std::size_t>(idx)));
  }
}

TEST_CASE("height zero equals p'-degree in full-defect blocks") {
  for (const PermGroup& g : {symmetric_group(4), alternating_group(5), dicyclic_group(3)}) {
    CharacterTable t = CharacterTable::compute(g);
    for (std::uint64_t p : prime_divisors(g.order())) {
      BlockPartition bp = block_distribution(t, p);
      const unsigned a = valuation(t.order(), p);
      for (std::size_t b = 0; b < bp.blocks.size(); ++b) {
        BlockData data = defect_and_heights(t, bp, b);
        if (data.defect != a) continue;
        std::vector<std::size_t> hz = height_zero_characters(t, bp, b);
        std::set<std::size_t> height_zero(hz.begin(), hz.end());
        for (std::size_t idx : bp.blocks[b])
          CHECK(height_zero.contains(idx) == (t.degree(idx) % p != 0));
      }
    }
  }
}

TEST_CASE("sigma2 violations") {
  // rational tables have none
  CHECK(sigma2_violations(CharacterTable::compute(symmetric_group(3))).empty());
  CHECK(sigma2_violations(CharacterTable::compute(symmetric_group(4))).empty());

  // oracle: recompute by the direct Galois-orbit definition
  for (const PermGroup& g : {metacyclic_group(3, 4, 2), dicyclic_group(3), alternating_group(5)}) {
    if (g.order() % 2) continue;
    CharacterTable t = CharacterTable::compute(g);
    BlockPartition bp = block_distribution(t, 2);
    GaloisAut sigma = sigma_two_special(t.exponent());
    std::vector<std::size_t> oracle;
    for (std::size_t idx : principal_block_characters(bp)) {
      if (t.degree(idx) % 2 == 0) continue;
      bool moved = false;
      for (const Cyclotomic& v : t.irreducible(idx).values)
        if (galois_apply(sigma, v) != v) moved = true;
      if (moved) oracle.push_back(idx);
    }
    CHECK(sigma2_violations(t) == oracle);
  }
}

TEST_CASE("blocks for p not dividing the order are singletons") {
  CharacterTable t = CharacterTable::compute(symmetric_group(3));
  BlockPartition bp = block_distribution(t, 5);
  CHECK(bp.blocks.size() == t.class_count());
  for (const auto& block : bp.blocks) CHECK(block.size() == 1);
}

TEST_CASE("block distribution rejects composite p") {
  CharacterTable t = CharacterTable::compute(symmetric_group(3));
  CHECK_THROWS_AS(block_distribution(t, 6), input_error);
}
