#pragma once

#include "blockscope/character_table.hpp"
#include "blockscope/reduction.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace blockscope {

/// omega_chi(K) = |K| chi(x_K) / chi(1) per class; always algebraic integers
/// (checked on construction, a failure means the table is corrupt).
struct CentralCharacter {
  std::vector<Cyclotomic> omega;
};

CentralCharacter central_character(const CharacterTable& table, std::size_t i);

/// The partition of Irr(G) into p-blocks by equal reduced central-character
/// fingerprints.  Blocks are ordered with the principal block first, then by
/// least member index.
struct BlockPartition {
  std::uint64_t p = 2;
  std::shared_ptr<const ReductionMap> reduction;
  std::vector<std::vector<FiniteField::Elem>> fingerprints; // per irreducible, per class
  std::vector<std::vector<std::size_t>> blocks;             // member indices per block
  std::vector<int> block_of;                                // per irreducible
  int principal_index = 0;

  bool in_principal_block(std::size_t irr) const {
    return block_of[irr] == principal_index;
  }
};

BlockPartition block_distribution(const CharacterTable& table, std::uint64_t p);

/// Member indices of the block containing the trivial character.
std::vector<std::size_t> principal_block_characters(const BlockPartition& partition);

/// Defect and heights of one block, from character degrees:
/// d = a - min nu_p(chi(1)) over the block (a = nu_p(|G|)),
/// height(chi) = nu_p(chi(1)) - (a - d).
struct BlockData {
  unsigned defect = 0;
  std::vector<unsigned> heights; // parallel to the block's member list
};

BlockData defect_and_heights(const CharacterTable& table, const BlockPartition& partition,
                             std::size_t block_index);

std::vector<std::size_t> p_prime_degree_characters(const CharacterTable& table, std::uint64_t p);
std::vector<std::size_t> p_rational_characters(const CharacterTable& table, std::uint64_t p);
std::vector<std::size_t> height_zero_characters(const CharacterTable& table,
                                                const BlockPartition& partition,
                                                std::size_t block_index);

/// Odd-degree members of the principal 2-block that are not fixed by the
/// automorphism fixing 2-power roots of unity and squaring the odd-order
/// ones.
std::vector<std::size_t> sigma2_violations(const CharacterTable& table);

} // namespace blockscope
