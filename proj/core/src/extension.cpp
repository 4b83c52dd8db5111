#include "blockscope/extension.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/group_ops.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace blockscope {

namespace {

PermGroup product_subgroup(const PermGroup& G, const PermGroup& A, const PermGroup& B) {
  std::vector<Permutation> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  PermGroup prod(G.degree(), std::move(gens));
  const std::uint64_t expected =
      A.order() / intersection(A, B).order() * B.order();
  if (prod.order() != expected)
    throw error("product_subgroup: N C_G(Q) is not the generated product (internal error)");
  return prod;
}

} // namespace

std::string subgroup_hypothesis_failure(const PermGroup& G, const PermGroup& N, std::uint64_t p) {
  if (!is_prime(p) || p == 2) return "p must be an odd prime";
  if (!G.contains(N) || !is_normal(G, N)) return "N is not normal in G";
  PermGroup Q = sylow_subgroup(N, p);
  PermGroup M = product_subgroup(G, N, centralizer_of_subgroup(G, Q));
  const std::uint64_t index = G.order() / M.order();
  if (index != p_part(index, p)) return "|G : N C_G(Q)| is not a p-power";
  return {};
}

std::string character_hypothesis_failure(const PermGroup& G, const PermGroup& N,
                                         std::size_t theta_index, std::uint64_t p,
                                         TableCache& cache) {
  auto table_n = cache.table_for(N);
  if (theta_index >= table_n->irreducibles().size()) return "theta index out of range";
  if (table_n->degree(theta_index) % p == 0) return "theta does not have p'-degree";
  if (!character_is_p_rational(*table_n, theta_index, p)) return "theta is not p-rational";
  for (const Permutation& g : G.generators()) {
    if (conjugate_character(*table_n, table_n->irreducible(theta_index), g).values !=
        table_n->irreducible(theta_index).values)
      return "theta is not G-invariant";
  }
  if (!cache.blocks_for(N, p)->in_principal_block(theta_index))
    return "theta is not in the principal block of N";
  return {};
}

std::string extension_hypothesis_failure(const PermGroup& G, const PermGroup& N,
                                         std::size_t theta_index, std::uint64_t p,
                                         TableCache& cache) {
  std::string reason = subgroup_hypothesis_failure(G, N, p);
  if (!reason.empty()) return reason;
  return character_hypothesis_failure(G, N, theta_index, p, cache);
}

ExtensionResult canonical_extension(const PermGroup& G, const PermGroup& N,
                                    std::size_t theta_index, std::uint64_t p, TableCache& cache) {
  {
    std::string reason = extension_hypothesis_failure(G, N, theta_index, p, cache);
    if (!reason.empty()) throw domain_error("canonical_extension: " + reason);
  }

  ExtensionResult result;
  result.table_g = cache.table_for(G);
  auto table_n = cache.table_for(N);
  const ClassFunction& theta = table_n->irreducible(theta_index);

  PermGroup Q = sylow_subgroup(N, p);
  result.M = product_subgroup(G, N, centralizer_of_subgroup(G, Q));
  result.table_m = cache.table_for(result.M);
  const CharacterTable& tm = *result.table_m;

  // eta(m) = value at m of the unique p-rational extension of theta in the
  // principal block of N<m>.
  std::vector<Cyclotomic> eta_values(tm.class_count());
  for (std::size_t c = 0; c < tm.class_count(); ++c) {
    const Permutation& m = tm.class_rep(static_cast<int>(c));
    std::vector<Permutation> hgens = N.generators();
    hgens.push_back(m);
    PermGroup H(G.degree(), std::move(hgens));
    auto table_h = cache.table_for(H);
    auto blocks_h = cache.blocks_for(H, p);

    std::vector<std::size_t> candidates;
    for (std::size_t idx : extensions_of(*table_n, theta, *table_h)) {
      if (!character_is_p_rational(*table_h, idx, p)) continue;
      if (!blocks_h->in_principal_block(idx)) continue;
      candidates.push_back(idx);
    }
    if (candidates.size() != 1) {
      std::ostringstream diag;
      diag << "H = N<m> of order " << H.order() << " admits " << candidates.size()
           << " p-rational extensions of theta in its principal block (p = " << p << ")";
      throw theorem_violation("local p-rational extension is not unique", diag.str());
    }
    eta_values[c] = table_h->irreducible(candidates.front()).value(
        table_h->class_of(m));
  }

  ClassFunction eta = tm.make_class_function(std::move(eta_values));
  {
    Cyclotomic norm = inner_product(tm, eta, eta);
    if (!(norm.is_rational() && norm.rational_value() == 1))
      throw theorem_violation("assembled class function is not irreducible",
                              "[eta, eta] != 1 on M = N C_G(Q)");
  }
  int eta_index = tm.index_of_values(eta.values);
  if (eta_index < 0)
    throw theorem_violation("assembled class function is not a character of M",
                            "eta matches no irreducible of M");
  if (restrict_character(tm, eta, *table_n).values != theta.values)
    throw theorem_violation("eta does not extend theta", "restriction of eta to N != theta");
  for (const Permutation& g : G.generators()) {
    if (conjugate_character(tm, eta, g).values != eta.values)
      throw theorem_violation("eta is not G-invariant", "conjugation moves eta");
  }

  // Lift through the p-power-index step: the unique p-rational member of
  // Irr(G | eta), which must land in the principal block and extend theta.
  const CharacterTable& tg = *result.table_g;
  std::vector<std::size_t> lifts;
  for (std::size_t idx : irr_over(tg, tm, eta))
    if (character_is_p_rational(tg, idx, p)) lifts.push_back(idx);
  if (lifts.size() != 1) {
    std::ostringstream diag;
    diag << "Irr(G | eta) contains " << lifts.size() << " p-rational members (p = " << p << ")";
    throw theorem_violation("global p-rational lift is not unique", diag.str());
  }
  result.chi_index = lifts.front();

  auto blocks_g = cache.blocks_for(G, p);
  if (!blocks_g->in_principal_block(result.chi_index))
    throw theorem_violation("canonical extension misses the principal block",
                            "chi lies outside B_0(G)");
  if (restrict_character(tg, tg.irreducible(result.chi_index), *table_n).values != theta.values)
    throw theorem_violation("canonical extension does not restrict to theta",
                            "chi_N != theta");

  for (std::size_t idx : extensions_of(*table_n, theta, tg)) {
    if (character_is_p_rational(tg, idx, p) && blocks_g->in_principal_block(idx))
      result.p_rational_b0_extensions.push_back(idx);
  }
  return result;
}

} // namespace blockscope
