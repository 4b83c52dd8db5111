#include "blockscope/errors.hpp"
#include "blockscope/group_library.hpp"
#include "blockscope/group_ops.hpp"
#include "blockscope/permgroup.hpp"

#include <doctest.h>

#include <set>

using namespace blockscope;

TEST_CASE("group_from_generators on worked examples") {
  // degree 3, gens {(0 1 2), (0 1)} -> S3 of order 6
  PermGroup s3 = group_from_generators(
      3, {Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_cycles(3, {{0, 1}})});
  CHECK(s3.order() == 6);

  // degree 1, no gens -> trivial group
  PermGroup trivial = group_from_generators(1, {});
  CHECK(trivial.order() == 1);

  // A6 from two standard even permutations; oracle: exhaustive enumeration
  PermGroup a6 = alternating_group(6);
  CHECK(a6.order() == 360);
  CHECK(a6.elements().size() == 360);
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(group_from_generators(3, {Permutation::from_cycles(3, {{0, 5}})}), input_error);
}

TEST_CASE("chain order equals exhaustive enumeration on sample groups") {
  for (const PermGroup& g :
       {symmetric_group(5), alternating_group(5), dihedral_group(12), dicyclic_group(5),
        metacyclic_group(13, 4, 5), heisenberg3(), direct_product(symmetric_group(4), cyclic_group(6)),
        psl_2_7(), symmetric_group(7), smallgroup_216_158()}) {
    CHECK(g.elements(100000).size() == g.order());
  }
}

TEST_CASE("membership via the chain") {
  PermGroup a4 = alternating_group(4);
  CHECK(a4.contains(Permutation::from_cycles(4, {{0, 1, 2}})));
  CHECK_FALSE(a4.contains(Permutation::from_cycles(4, {{0, 1}})));
  CHECK(a4.contains(Permutation(4)));
}

TEST_CASE("elements refuses past the enumeration limit") {
  PermGroup big = symmetric_group(9); // 362880 > 10^5
  CHECK_THROWS_AS(big.elements(), capacity_error);
}

TEST_CASE("same_group_as ignores the generating set") {
  PermGroup one = PermGroup(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  PermGroup other = PermGroup(3, {Permutation::from_cycles(3, {{0, 2, 1}})});
  CHECK(one.same_group_as(other));
}
