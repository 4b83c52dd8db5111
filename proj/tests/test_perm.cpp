#include "blockscope/errors.hpp"
#include "blockscope/perm.hpp"

#include <doctest.h>

using namespace blockscope;

TEST_CASE("identity and image access") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);
  for (unsigned i = 0; i < 4; ++i) CHECK(id[i] == i);
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0u, 0u, 1u}), input_error);
  CHECK_THROWS_AS(Permutation({0u, 3u}), input_error);
}

TEST_CASE("composition applies the left factor first") {
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{1, 2}});
  Permutation ab = a * b;
  // 0 -> 1 under a, then 1 -> 2 under b
  CHECK(ab[0] == 2);
  CHECK(ab[2] == 1);
  CHECK(ab[1] == 0);
}

TEST_CASE("inverse and conjugation") {
  Permutation g = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  CHECK((g * g.inverse()).is_identity());
  Permutation x = Permutation::from_cycles(5, {{0, 1}});
  Permutation conj = x.conjugated_by(g);
  CHECK(conj == g.inverse() * x * g);
  // conjugate of the transposition (0 1) by the 5-cycle is (1 2)
  CHECK(conj == Permutation::from_cycles(5, {{1, 2}}));
}

TEST_CASE("order and cycles") {
  Permutation g = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(g.order() == 6);
  auto cycles = g.cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<unsigned>{0, 1, 2});
  CHECK(cycles[1] == std::vector<unsigned>{3, 4});
}

TEST_CASE("from_cycles composes overlapping cycles in order") {
  // (0 1) then (1 2): 0 -> 1 -> 2
  Permutation g = Permutation::from_cycles(3, {{0, 1}, {1, 2}});
  CHECK(g[0] == 2);
}

TEST_CASE("lexicographic comparison puts the identity first") {
  Permutation id(3);
  Permutation g = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(id < g);
}
