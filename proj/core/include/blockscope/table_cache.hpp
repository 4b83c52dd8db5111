#pragma once

#include "blockscope/blocks.hpp"
#include "blockscope/character_table.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace blockscope {

/// Memoizes character tables and block partitions per subgroup.  Lookup is by
/// a cheap fingerprint with an exact same-subgroup confirmation on hit, so a
/// fingerprint collision can never return the wrong table.  Thread-safe.
class TableCache {
public:
  std::shared_ptr<const CharacterTable> table_for(const PermGroup& H);
  std::shared_ptr<const BlockPartition> blocks_for(const PermGroup& H, std::uint64_t p);

  std::size_t table_count() const;

private:
  struct Entry {
    PermGroup group{1};
    std::shared_ptr<const CharacterTable> table;
    std::unordered_map<std::uint64_t, std::shared_ptr<const BlockPartition>> blocks;
  };

  static std::uint64_t fingerprint(const PermGroup& H);
  Entry& entry_for(const PermGroup& H);

  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::vector<std::unique_ptr<Entry>>> entries_;
};

} // namespace blockscope
