#pragma once

#include "blockscope/perm.hpp"
#include "blockscope/stab_chain.hpp"

#include <cstdint>
#include <vector>

namespace blockscope {

/// A finite permutation group on {0..degree-1} with a stabilizer-chain
/// backbone.  Immutable after construction; all operations are const and safe
/// for concurrent use.
class PermGroup {
public:
  /// Exhaustive element listings refuse to go past this many elements.
  static constexpr std::uint64_t kEnumerationLimit = 100000;

  /// Trivial group of the given degree.
  explicit PermGroup(unsigned degree);

  PermGroup(unsigned degree, std::vector<Permutation> generators);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  Permutation identity() const { return Permutation(degree_); }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation& g) const { return chain_.contains(g); }

  /// True when every generator of H lies in this group (degrees must agree).
  bool contains(const PermGroup& H) const;

  /// Equality as subgroups of the symmetric group of this degree.
  bool same_group_as(const PermGroup& other) const;

  bool is_abelian() const;

  /// All elements in lexicographic image order.  Throws capacity_error when
  /// the order exceeds the limit.
  std::vector<Permutation> elements(std::uint64_t limit = kEnumerationLimit) const;

  const StabChain& chain() const { return chain_; }

private:
  unsigned degree_ = 1;
  std::vector<Permutation> gens_;
  StabChain chain_;
  std::uint64_t order_ = 1;
};

/// Validates the generators and constructs the group.
PermGroup group_from_generators(unsigned degree, const std::vector<Permutation>& gens);

} // namespace blockscope
