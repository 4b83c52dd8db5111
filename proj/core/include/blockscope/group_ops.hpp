#pragma once

#include "blockscope/permgroup.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace blockscope {

struct GroupElements {
  std::vector<Permutation> sorted; // lexicographic image order
  std::unordered_map<Permutation, int, PermHash> index_of;
};

std::shared_ptr<const GroupElements> enumerate_elements(
    const PermGroup& G, std::uint64_t limit = PermGroup::kEnumerationLimit);

/// Conjugacy classes in deterministic order: classes are listed by their
/// lexicographically least member, which is also the stored representative.
class ConjugacyClasses {
public:
  std::shared_ptr<const GroupElements> elements;
  std::vector<int> class_of_element;     // element index -> class index
  std::vector<int> rep_element;          // class index -> element index of the least member
  std::vector<std::vector<int>> members; // class index -> sorted element indices

  std::size_t count() const { return rep_element.size(); }
  std::uint64_t size(int c) const { return members[c].size(); }
  const Permutation& rep(int c) const { return elements->sorted[rep_element[c]]; }
  const Permutation& element(int idx) const { return elements->sorted[idx]; }

  /// Throws domain_error when x is not in the group.
  int class_of(const Permutation& x) const;
};

ConjugacyClasses conjugacy_classes(const PermGroup& G);

/// {g in G : gx = xg}; requires x in G.
PermGroup centralizer(const PermGroup& G, const Permutation& x);

/// {g in G : H^g = H}; requires H <= G.
PermGroup normalizer(const PermGroup& G, const PermGroup& H);

/// A Sylow p-subgroup, grown along normalizer chains of p-subgroups.
PermGroup sylow_subgroup(const PermGroup& G, std::uint64_t p);

/// True iff the subgroup generated by all p'-elements has p'-order (in which
/// case it is the unique normal p-complement).
bool has_normal_p_complement(const PermGroup& G, std::uint64_t p);

/// Requires every element to lie in G.
PermGroup subgroup_generated(const PermGroup& G, const std::vector<Permutation>& elems);

bool is_normal(const PermGroup& G, const PermGroup& H);

PermGroup centralizer_of_subgroup(const PermGroup& G, const PermGroup& H);

/// Largest normal p'-subgroup O_{p'}(G).
PermGroup core_p_prime(const PermGroup& G, std::uint64_t p);

/// Smallest normal subgroup of G containing the given elements of G.
PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& elems);

PermGroup derived_subgroup(const PermGroup& G);
bool is_solvable(const PermGroup& G);
bool is_cyclic(const PermGroup& G);

PermGroup intersection(const PermGroup& A, const PermGroup& B);

/// Every normal subgroup, as joins of conjugacy-class closures, sorted by
/// (order, contained-class fingerprint).  Includes the trivial group and G.
std::vector<PermGroup> all_normal_subgroups(const PermGroup& G);

/// lcm of element orders.
std::uint64_t group_exponent(const ConjugacyClasses& classes);

} // namespace blockscope
