#pragma once

#include "blockscope/scene.hpp"
#include "blockscope/table_cache.hpp"
#include "blockscope/table_ops.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace blockscope {

/// Indices of the P-invariant irreducibles of the table's group; P must
/// normalize that group inside a common ambient degree.
std::vector<std::size_t> p_invariant_characters(const CharacterTable& table, const PermGroup& P);

/// The full preimage in G of the fixed points of P on G/N.
PermGroup compute_C(const ActionScene& scene);

/// One computed pair chi -> chi* with its verified side conditions.
struct CorrespondencePair {
  std::size_t chi = 0;      // index in Irr(G)
  std::size_t chi_star = 0; // index in Irr(C)
  long long e = 0;          // multiplicity of chi* in chi restricted to C
  std::vector<std::pair<std::size_t, long long>> delta; // constituents of Delta
  std::vector<std::pair<std::size_t, long long>> xi;    // constituents of Xi
  bool e_plus_minus_one = false; // e = +-1 mod p
  bool chi_star_p_invariant = false;
  bool field_equal = false;      // Q(chi) = Q(chi*)
  bool p_prime_degree = false;
  bool block_preserved = true;   // only meaningful when p_prime_degree
  bool clifford_consistent = false; // P-invariant constituents of chi_N C-conjugate
};

struct CorrespondenceResult {
  PermGroup C{1};
  std::shared_ptr<const CharacterTable> table_g, table_c, table_n;
  std::shared_ptr<const BlockPartition> blocks_g, blocks_c;
  std::vector<std::size_t> irr_p_g, irr_p_c, irr_p_n;
  std::vector<CorrespondencePair> pairs;
  bool bijective = false;

  bool all_side_conditions_hold() const;
};

/// Computes the bijection Irr_P(G) -> Irr_P(C) directly from restriction
/// multiplicities: after discarding constituents lying over no P-invariant
/// character of N, exactly one survivor has multiplicity not divisible by p.
/// A zero or multiple-survivor situation throws theorem_violation with full
/// diagnostics.
CorrespondenceResult relative_glauberman(const ActionScene& scene, TableCache& cache);

} // namespace blockscope
