#include "blockscope/num_util.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/extension.hpp"
#include "blockscope/group_library.hpp"
#include "blockscope/verify.hpp"

#include <doctest.h>

using namespace blockscope;

TEST_CASE("degenerate instance N = G returns theta itself") {
  TableCache cache;
  PermGroup s3 = symmetric_group(3);
  auto table = cache.table_for(s3);
  // theta = the sign character (3-rational, 3'-degree, in the unique block)
  std::size_t sign = 1;
  for (std::size_t i = 0; i < table->class_count(); ++i)
    if (table->degree(i) == 1 && i != 0) sign = i;
  ExtensionResult result = canonical_extension(s3, s3, sign, 3, cache);
  CHECK(result.chi_index == sign);
}

TEST_CASE("hypothesis violations are rejected with a reason") {
  TableCache cache;
  PermGroup s3 = symmetric_group(3);
  PermGroup a3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  // p = 2 is rejected outright
  CHECK(extension_hypothesis_failure(s3, a3, 0, 2, cache) == "p must be an odd prime");
  // a non-invariant theta
  auto ta3 = cache.table_for(a3);
  CHECK(extension_hypothesis_failure(s3, a3, 1, 3, cache) != "");
  CHECK_THROWS_AS(canonical_extension(s3, a3, 1, 3, cache), domain_error);
  // non-normal N
  PermGroup c2(3, {Permutation::from_cycles(3, {{0, 1}})});
  CHECK(extension_hypothesis_failure(s3, c2, 0, 3, cache) == "N is not normal in G");
}

TEST_CASE("C3 x S3 instance: canonical extension is trivial, two in B_0") {
  TableCache cache;
  PermGroup g = direct_product(cyclic_group(3), symmetric_group(3));
  PermGroup n(g.degree(), {g.generators()[0]}); // the C3 direct factor
  ExtensionResult result = canonical_extension(g, n, 0, 3, cache);
  CHECK(result.chi_index == 0); // the trivial character of G
  CHECK(result.p_rational_b0_extensions.size() == 2);

  VerificationReport report = verify_thm_f_instance(g, n, 0, 3, cache, "c3xs3");
  CHECK(report.verdict == Verdict::pass);
  CHECK(report.witnesses.at("p_rational_b0_extensions") == "2");
}

TEST_CASE("construction satisfies its contract on enumerated instances") {
  TableCache cache;
  for (const PermGroup& g :
       {symmetric_group(3), alternating_group(4), dicyclic_group(3),
        direct_product(cyclic_group(3), symmetric_group(3)), metacyclic_group(7, 3, 2)}) {
    for (std::uint64_t p : prime_divisors(g.order())) {
      if (p == 2) continue;
      for (const ExtensionInstance& inst : extension_instances(g, p, cache)) {
        ExtensionResult result = canonical_extension(g, inst.N, inst.theta_index, p, cache);
        auto table_g = cache.table_for(g);
        auto table_n = cache.table_for(inst.N);
        // contract: chi is p-rational, restricts to theta, lies in B_0(G)
        CHECK(character_is_p_rational(*table_g, result.chi_index, p));
        CHECK(restrict_character(*table_g, table_g->irreducible(result.chi_index),
                                 *table_n).values == table_n->irreducible(inst.theta_index).values);
        CHECK(cache.blocks_for(g, p)->in_principal_block(result.chi_index));
      }
    }
  }
}

TEST_CASE("cor-3-6 existence check") {
  TableCache cache;
  PermGroup g = direct_product(cyclic_group(3), symmetric_group(3));
  PermGroup n(g.degree(), {g.generators()[0]});
  VerificationReport report = verify_cor_3_6(g, n, 0, 3, cache, "c3xs3");
  // PN/N self-normalizing in G/N = S3 at p = 3: N_{S3}(C3) = S3, not C3,
  // so the hypothesis fails and the verdict is inapplicable.
  CHECK(report.verdict == Verdict::inapplicable);

  // A4 over V4 at p = 3: PN/N = G/N is the whole quotient, self-normalizing.
  PermGroup a4 = alternating_group(4);
  PermGroup v4(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                   Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  VerificationReport r2 = verify_cor_3_6(a4, v4, 0, 3, cache, "a4");
  CHECK(r2.verdict == Verdict::pass);
}
