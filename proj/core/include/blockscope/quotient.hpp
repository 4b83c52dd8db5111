#pragma once

#include "blockscope/group_ops.hpp"
#include "blockscope/permgroup.hpp"

#include <unordered_map>
#include <vector>

namespace blockscope {

/// The quotient G/N realized as a permutation group on the right cosets of N,
/// together with the projection homomorphism.  For N = 1 the map is the
/// identity on G itself (no degree blowup).
class QuotientMap {
public:
  const PermGroup& source() const { return source_; }
  const PermGroup& kernel() const { return kernel_; }
  const PermGroup& image() const { return image_; }

  /// Image of g under the projection; requires g in the source.
  Permutation forward(const Permutation& g) const;

  /// A fixed preimage of each coset (the lexicographically least member).
  const std::vector<Permutation>& coset_reps() const { return coset_reps_; }

private:
  friend QuotientMap quotient(const PermGroup&, const PermGroup&);

  PermGroup source_{1};
  PermGroup kernel_{1};
  PermGroup image_{1};
  bool identity_map_ = false;
  std::vector<Permutation> coset_reps_;
  std::unordered_map<Permutation, unsigned, PermHash> coset_index_;
};

/// Requires N normal in G.
QuotientMap quotient(const PermGroup& G, const PermGroup& N);

} // namespace blockscope
