#pragma once

#include "blockscope/correspond.hpp"
#include "blockscope/extension.hpp"
#include "blockscope/scene.hpp"
#include "blockscope/table_cache.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blockscope {

enum class Verdict { pass, fail, inapplicable };

std::string verdict_name(Verdict v);

struct VerificationReport {
  std::string target;  // "thm-d", "thm-e", "thm-f", "cor-3-6", "conj-6-2", "counterexample-216"
  std::string inputs;  // label of the group / scene plus parameters
  Verdict verdict = Verdict::inapplicable;
  std::string detail;
  std::map<std::string, std::string> witnesses;
  bool conjecture_finding = false; // set on a conj-6-2 disagreement
  double elapsed_ms = 0.0;
};

/// The normal p-complement when it exists (the subgroup generated by all
/// p'-elements, if it has p'-order).
std::optional<PermGroup> normal_p_complement(const PermGroup& G, std::uint64_t p);

/// Sylow-normalizer / p-rational equivalence for odd p dividing |G|.  The two
/// sides run through disjoint pipelines: the left side never touches
/// character data and the right side never touches Sylow normalizers.
VerificationReport verify_thm_d(const PermGroup& G, std::uint64_t p, TableCache& cache,
                                const std::string& label);

/// Full invariant sweep of the relative correspondence on one scene.
VerificationReport verify_thm_e_scene(const ActionScene& scene, TableCache& cache);

/// Canonical p-rational extension instance; hypothesis violations come back
/// inapplicable, construction failures fail with diagnostics.
VerificationReport verify_thm_f_instance(const PermGroup& G, const PermGroup& N,
                                         std::size_t theta_index, std::uint64_t p,
                                         TableCache& cache, const std::string& label);

/// Existence of a p-rational p'-degree member of Irr(G | nu) in B_0(G), under
/// the self-normalizing hypothesis on PN/N.
VerificationReport verify_cor_3_6(const PermGroup& G, const PermGroup& N, std::size_t nu_index,
                                  std::uint64_t p, TableCache& cache, const std::string& label);

/// sigma-invariance of odd-degree B_0 characters versus the normal
/// 2-complement condition on the Sylow-2 normalizer.  A disagreement is
/// reported as a fail with the conjecture_finding flag set.
VerificationReport verify_conj_6_2(const PermGroup& G, TableCache& cache,
                                   const std::string& label);

/// A witness for the failure of p-rational extension along a cyclic
/// p'-quotient: N normal with G/N cyclic of p'-order, theta p-rational of
/// p'-degree in B_0(N), G with a unique p-block, and no p-rational
/// constituent in theta^G.
struct CounterexampleWitness {
  PermGroup N{1};
  std::size_t theta_index = 0;
  std::uint64_t quotient_order = 0;
};

/// Deterministic search for the configuration above; empty when no (N, theta)
/// works or G has more than one p-block.
std::optional<CounterexampleWitness> find_rational_extension_counterexample(
    const PermGroup& G, std::uint64_t p, TableCache& cache);

/// The catalog reproduction: requires |G| = 216 (input_error otherwise) and
/// passes iff the configuration search succeeds at p = 3.
VerificationReport verify_counterexample_216(const PermGroup& G, TableCache& cache,
                                             const std::string& label);

/// Scenes derived from one ambient group: normal subgroups N <= G with G/N of
/// p'-order and ambient = G * Syl_p, in deterministic order, capped.
std::vector<ActionScene> generate_scenes(const PermGroup& ambient, std::uint64_t p,
                                         std::size_t cap, const std::string& label);

/// Same, over a precomputed normal-subgroup list (sweeps reuse it per prime).
std::vector<ActionScene> generate_scenes(const PermGroup& ambient,
                                         const std::vector<PermGroup>& normals, std::uint64_t p,
                                         std::size_t cap, const std::string& label);

struct ExtensionInstance {
  PermGroup N{1};
  std::size_t theta_index = 0;
};

/// All (N, theta) pairs of G meeting the canonical-extension hypotheses at p.
std::vector<ExtensionInstance> extension_instances(const PermGroup& G, std::uint64_t p,
                                                  TableCache& cache);

/// For scenes Gamma = N P with N nonabelian simple: if B_0(Gamma) has no
/// nontrivial p-rational p'-degree member then the Sylow p-subgroup is
/// self-normalizing.  Returns nullopt when the hypothesis shape is absent.
std::optional<VerificationReport> verify_cor_4_2(const PermGroup& G, std::uint64_t p,
                                                 TableCache& cache, const std::string& label);

} // namespace blockscope
