#pragma once

#include "blockscope/perm.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace blockscope {

/// Deterministic Schreier-Sims stabilizer chain.  Strong generators live in
/// one list; each is registered at every level whose base prefix it fixes.
/// Base points are the first moved points of escaping residues and orbits
/// grow in BFS order, so identical generator lists produce identical chains.
class StabChain {
public:
  StabChain() = default;
  StabChain(unsigned degree, const std::vector<Permutation>& generators);

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;

  const std::vector<unsigned>& base() const { return base_; }
  std::size_t depth() const { return levels_.size(); }

  /// Coset representatives mapping the level's base point onto its orbit, in
  /// BFS discovery order.
  std::vector<Permutation> transversal(std::size_t level) const;

private:
  struct Level {
    unsigned base_point = 0;
    std::vector<std::size_t> gens;                          // indices into sgens_
    std::vector<unsigned> orbit;                            // BFS order
    std::unordered_map<unsigned, Permutation> transversal;  // point -> u with base^u = point
    std::vector<std::size_t> processed;                     // per orbit position: gens prefix done
  };

  unsigned degree_ = 0;
  std::vector<Permutation> sgens_;
  std::vector<unsigned> base_;
  std::vector<Level> levels_;

  void append_level(unsigned base_point);
  /// Strips g; a non-identity residue becomes a strong generator registered
  /// at levels 0..j where j is its escape level.  Returns true if one was
  /// added.
  bool sift_in(Permutation g);
  /// Schreier closure of one level; returns true when a residue was inserted
  /// (the caller restarts from the deepest level).
  bool expand_orbit(std::size_t level);
  void close();
};

} // namespace blockscope
