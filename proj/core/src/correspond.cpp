#include "blockscope/correspond.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace blockscope {

std::vector<std::size_t> p_invariant_characters(const CharacterTable& table, const PermGroup& P) {
  const PermGroup& G = table.group();
  if (P.degree() != G.degree())
    throw domain_error("p_invariant_characters: degree mismatch");
  for (const Permutation& x : P.generators())
    for (const Permutation& g : G.generators())
      if (!G.contains(g.conjugated_by(x)))
        throw domain_error("p_invariant_characters: P does not normalize the group");

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.irreducibles().size(); ++i) {
    bool invariant = true;
    for (const Permutation& x : P.generators()) {
      if (conjugate_character(table, table.irreducible(i), x).values !=
          table.irreducible(i).values) {
        invariant = false;
        break;
      }
    }
    if (invariant) out.push_back(i);
  }
  return out;
}

PermGroup compute_C(const ActionScene& scene) {
  std::vector<Permutation> members;
  for (const Permutation& g : scene.G.elements()) {
    bool fixed = true;
    for (const Permutation& x : scene.P.generators()) {
      if (!scene.N.contains(g.inverse() * g.conjugated_by(x))) {
        fixed = false;
        break;
      }
    }
    if (fixed) members.push_back(g);
  }
  PermGroup C(scene.G.degree(), std::move(members));
  if (!C.contains(scene.N)) throw error("compute_C: C does not contain N (internal error)");
  if ((C.order() / scene.N.order()) % scene.p == 0)
    throw error("compute_C: C/N is not a p'-group (internal error)");
  return C;
}

bool CorrespondenceResult::all_side_conditions_hold() const {
  if (!bijective) return false;
  for (const CorrespondencePair& pair : pairs) {
    if (!pair.e_plus_minus_one || !pair.chi_star_p_invariant || !pair.field_equal ||
        !pair.clifford_consistent)
      return false;
    if (pair.p_prime_degree && !pair.block_preserved) return false;
  }
  return true;
}

namespace {

// Orbit of an irreducible of N under conjugation by C, as a set of indices.
std::set<std::size_t> c_orbit(const CharacterTable& table_n, const PermGroup& C,
                              std::size_t start) {
  std::set<std::size_t> orbit{start};
  std::vector<std::size_t> frontier{start};
  while (!frontier.empty()) {
    std::size_t idx = frontier.back();
    frontier.pop_back();
    for (const Permutation& c : C.generators()) {
      ClassFunction moved = conjugate_character(table_n, table_n.irreducible(idx), c);
      int j = table_n.index_of_values(moved.values);
      if (j < 0) throw error("c_orbit: conjugate is not irreducible (internal error)");
      if (orbit.insert(static_cast<std::size_t>(j)).second)
        frontier.push_back(static_cast<std::size_t>(j));
    }
  }
  return orbit;
}

} // namespace

CorrespondenceResult relative_glauberman(const ActionScene& scene, TableCache& cache) {
  CorrespondenceResult result;
  result.C = compute_C(scene);
  result.table_g = cache.table_for(scene.G);
  result.table_c = cache.table_for(result.C);
  result.table_n = cache.table_for(scene.N);
  result.blocks_g = cache.blocks_for(scene.G, scene.p);
  result.blocks_c = cache.blocks_for(result.C, scene.p);

  const CharacterTable& tg = *result.table_g;
  const CharacterTable& tc = *result.table_c;
  const CharacterTable& tn = *result.table_n;

  result.irr_p_g = p_invariant_characters(tg, scene.P);
  result.irr_p_c = p_invariant_characters(tc, scene.P);
  result.irr_p_n = p_invariant_characters(tn, scene.P);
  std::set<std::size_t> invariant_n(result.irr_p_n.begin(), result.irr_p_n.end());

  // Which Irr(C) lie over some P-invariant character of N (decided once).
  std::vector<char> lies_over_invariant(tc.irreducibles().size(), 0);
  for (std::size_t j = 0; j < tc.irreducibles().size(); ++j) {
    ClassFunction res_n = restrict_character(tc, tc.irreducible(j), tn);
    for (const auto& [theta, mult] : constituents(tn, res_n)) {
      if (invariant_n.contains(theta)) {
        lies_over_invariant[j] = 1;
        break;
      }
    }
  }

  const std::uint64_t common_conductor = lcm_u64(tg.exponent(), tc.exponent());
  std::set<std::size_t> used_stars;

  for (std::size_t chi : result.irr_p_g) {
    CorrespondencePair pair;
    pair.chi = chi;
    ClassFunction res_c = restrict_character(tg, tg.irreducible(chi), tc);
    auto cons = constituents(tc, res_c);

    long long star_mult = 0;
    int star_index = -1;
    int qualifying = 0;
    for (const auto& [j, mult] : cons) {
      if (!lies_over_invariant[j]) {
        pair.xi.emplace_back(j, mult);
        continue;
      }
      if (mult % static_cast<long long>(scene.p) != 0) {
        ++qualifying;
        star_index = static_cast<int>(j);
        star_mult = mult;
      } else {
        pair.delta.emplace_back(j, mult / static_cast<long long>(scene.p));
      }
    }
    if (qualifying != 1) {
      std::ostringstream diag;
      diag << "scene " << scene.name << ": restriction of Irr(G)[" << chi << "] to C has "
           << qualifying << " constituents over P-invariant characters of N with p'-multiplicity"
           << " (p = " << scene.p << "); decomposition:";
      for (const auto& [j, mult] : cons)
        diag << " [" << j << "]x" << mult << (lies_over_invariant[j] ? "" : "(Xi)");
      throw theorem_violation("relative Glauberman correspondence is not single-valued",
                              diag.str());
    }
    pair.chi_star = static_cast<std::size_t>(star_index);
    pair.e = star_mult;
    const long long r = star_mult % static_cast<long long>(scene.p);
    pair.e_plus_minus_one = (r == 1 || r == static_cast<long long>(scene.p) - 1 ||
                             (scene.p == 2 && r == 1));
    pair.chi_star_p_invariant =
        std::find(result.irr_p_c.begin(), result.irr_p_c.end(), pair.chi_star) !=
        result.irr_p_c.end();
    used_stars.insert(pair.chi_star);

    pair.field_equal =
        value_stabilizer(tg.irreducible(chi).values, common_conductor) ==
        value_stabilizer(tc.irreducible(pair.chi_star).values, common_conductor);

    pair.p_prime_degree = tg.degree(chi) % scene.p != 0;
    if (pair.p_prime_degree) {
      pair.block_preserved = result.blocks_g->in_principal_block(chi) ==
                             result.blocks_c->in_principal_block(pair.chi_star);
    }

    // Clifford-style consistency: the P-invariant constituents of chi_N form a
    // single C-orbit.
    {
      ClassFunction res_n = restrict_character(tg, tg.irreducible(chi), tn);
      std::vector<std::size_t> invariant_constituents;
      for (const auto& [theta, mult] : constituents(tn, res_n))
        if (invariant_n.contains(theta)) invariant_constituents.push_back(theta);
      if (invariant_constituents.empty()) {
        pair.clifford_consistent = false;
      } else {
        std::set<std::size_t> orbit = c_orbit(tn, result.C, invariant_constituents.front());
        pair.clifford_consistent = true;
        for (std::size_t theta : invariant_constituents)
          if (!orbit.contains(theta)) pair.clifford_consistent = false;
        // The orbit must not contain invariant constituents missing from the list.
        for (std::size_t theta : orbit)
          if (invariant_n.contains(theta) &&
              std::find(invariant_constituents.begin(), invariant_constituents.end(), theta) ==
                  invariant_constituents.end())
            pair.clifford_consistent = false;
      }
    }

    result.pairs.push_back(std::move(pair));
  }

  result.bijective = used_stars.size() == result.pairs.size() &&
                     result.pairs.size() == result.irr_p_c.size() &&
                     std::all_of(result.irr_p_c.begin(), result.irr_p_c.end(),
                                 [&](std::size_t j) { return used_stars.contains(j); });
  return result;
}

} // namespace blockscope
