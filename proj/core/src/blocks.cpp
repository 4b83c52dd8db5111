#include "blockscope/blocks.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"
#include "blockscope/table_ops.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace blockscope {

CentralCharacter central_character(const CharacterTable& table, std::size_t i) {
  CentralCharacter out;
  out.omega.reserve(table.class_count());
  const Rat inv_degree(1, table.degree(i));
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    Cyclotomic w = table.irreducible(i).value(c).scaled(
        Rat(table.class_size(static_cast<int>(c))) * inv_degree);
    if (!w.is_algebraic_integer())
      throw error("central character is not an algebraic integer (corrupt table)");
    out.omega.push_back(std::move(w));
  }
  return out;
}

BlockPartition block_distribution(const CharacterTable& table, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("block_distribution: p must be prime");
  BlockPartition partition;
  partition.p = p;
  partition.reduction = std::make_shared<ReductionMap>(p, table.exponent());

  const std::size_t k = table.class_count();
  partition.fingerprints.resize(k);
  std::vector<std::string> keys(k);
  for (std::size_t i = 0; i < k; ++i) {
    CentralCharacter omega = central_character(table, i);
    partition.fingerprints[i].reserve(k);
    std::string key;
    for (std::size_t c = 0; c < k; ++c) {
      FiniteField::Elem e = partition.reduction->reduce(omega.omega[c]);
      key += partition.reduction->field().encode(e);
      key += '|';
      partition.fingerprints[i].push_back(std::move(e));
    }
    keys[i] = std::move(key);
  }

  std::map<std::string, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < k; ++i) grouped[keys[i]].push_back(i);

  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [key, members] : grouped) blocks.push_back(std::move(members));
  // Principal block (the trivial character sits at index 0) first, then by
  // least member index.
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              return a.front() < b.front();
            });
  partition.blocks = std::move(blocks);
  partition.block_of.assign(k, -1);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b)
    for (std::size_t idx : partition.blocks[b]) partition.block_of[idx] = static_cast<int>(b);
  partition.principal_index = partition.block_of[0];

  // The principal block is exactly the fingerprint (|K| mod p) per class.
  const auto& field = partition.reduction->field();
  for (std::size_t c = 0; c < k; ++c) {
    if (partition.fingerprints[0][c] != field.from_int(table.class_size(static_cast<int>(c))))
      throw error("principal block fingerprint differs from |K| mod p (corrupt table)");
  }
  return partition;
}

std::vector<std::size_t> principal_block_characters(const BlockPartition& partition) {
  return partition.blocks[partition.principal_index];
}

BlockData defect_and_heights(const CharacterTable& table, const BlockPartition& partition,
                             std::size_t block_index) {
  const unsigned a = valuation(table.order(), partition.p);
  unsigned min_val = a;
  for (std::size_t idx : partition.blocks[block_index])
    min_val = std::min(min_val, valuation(table.degree(idx), partition.p));
  BlockData data;
  data.defect = a - min_val;
  for (std::size_t idx : partition.blocks[block_index])
    data.heights.push_back(valuation(table.degree(idx), partition.p) - min_val);
  return data;
}

std::vector<std::size_t> p_prime_degree_characters(const CharacterTable& table, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.irreducibles().size(); ++i)
    if (table.degree(i) % p != 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> p_rational_characters(const CharacterTable& table, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.irreducibles().size(); ++i)
    if (character_is_p_rational(table, i, p)) out.push_back(i);
  return out;
}

std::vector<std::size_t> height_zero_characters(const CharacterTable& table,
                                                const BlockPartition& partition,
                                                std::size_t block_index) {
  BlockData data = defect_and_heights(table, partition, block_index);
  std::vector<std::size_t> out;
  const auto& members = partition.blocks[block_index];
  for (std::size_t i = 0; i < members.size(); ++i)
    if (data.heights[i] == 0) out.push_back(members[i]);
  return out;
}

std::vector<std::size_t> sigma2_violations(const CharacterTable& table) {
  BlockPartition partition = block_distribution(table, 2);
  GaloisAut sigma = sigma_two_special(table.exponent());
  std::vector<std::size_t> out;
  for (std::size_t idx : principal_block_characters(partition)) {
    if (table.degree(idx) % 2 == 0) continue;
    for (const Cyclotomic& v : table.irreducible(idx).values) {
      if (galois_apply(sigma, v) != v) {
        out.push_back(idx);
        break;
      }
    }
  }
  return out;
}

} // namespace blockscope
