#pragma once

#include "blockscope/table_cache.hpp"
#include "blockscope/table_ops.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace blockscope {

/// Outcome of the canonical p-rational extension construction.
struct ExtensionResult {
  std::size_t chi_index = 0; // index in Irr(G)
  std::shared_ptr<const CharacterTable> table_g;
  std::shared_ptr<const CharacterTable> table_m; // M = N C_G(Q)
  PermGroup M{1};
  /// All p-rational extensions of theta inside B_0(G) (the canonical one is
  /// among them; the count may exceed 1).
  std::vector<std::size_t> p_rational_b0_extensions;
};

/// Hypothesis check for the construction: p odd, N normal in G, theta
/// G-invariant p-rational of p'-degree in B_0(N), and |G : N C_G(Q)| a
/// p-power for Q a Sylow p-subgroup of N.  Returns an explanation or the
/// empty string when all hypotheses hold.
std::string extension_hypothesis_failure(const PermGroup& G, const PermGroup& N,
                                         std::size_t theta_index, std::uint64_t p,
                                         TableCache& cache);

/// The theta-independent part of the hypothesis (normality and the p-power
/// index of N C_G(Q)); lets sweeps reject a whole subgroup at once.
std::string subgroup_hypothesis_failure(const PermGroup& G, const PermGroup& N, std::uint64_t p);

/// The per-character part (p'-degree, p-rationality, G-invariance, B_0(N)).
std::string character_hypothesis_failure(const PermGroup& G, const PermGroup& N,
                                         std::size_t theta_index, std::uint64_t p,
                                         TableCache& cache);

/// The canonical construction: for each m in M = N C_G(Q) locate the unique
/// p-rational extension of theta in the principal block of N<m>, assemble the
/// class function eta on M, confirm eta is irreducible, and lift it to the
/// unique p-rational member of Irr(G | eta).  Any existence or uniqueness
/// failure throws theorem_violation.  Inputs violating the hypotheses throw
/// domain_error.
ExtensionResult canonical_extension(const PermGroup& G, const PermGroup& N,
                                    std::size_t theta_index, std::uint64_t p, TableCache& cache);

} // namespace blockscope
