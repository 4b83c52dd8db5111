#include "blockscope/table_cache.hpp"

namespace blockscope {

std::uint64_t TableCache::fingerprint(const PermGroup& H) {
  return (static_cast<std::uint64_t>(H.degree()) << 40) ^ H.order();
}

TableCache::Entry& TableCache::entry_for(const PermGroup& H) {
  auto& bucket = entries_[fingerprint(H)];
  for (auto& entry : bucket)
    if (entry->group.same_group_as(H)) return *entry;
  bucket.push_back(std::make_unique<Entry>());
  bucket.back()->group = H;
  return *bucket.back();
}

std::shared_ptr<const CharacterTable> TableCache::table_for(const PermGroup& H) {
  std::lock_guard<std::mutex> lock(mutex_);
  Entry& entry = entry_for(H);
  if (!entry.table)
    entry.table = std::make_shared<const CharacterTable>(CharacterTable::compute(entry.group));
  return entry.table;
}

std::shared_ptr<const BlockPartition> TableCache::blocks_for(const PermGroup& H, std::uint64_t p) {
  std::lock_guard<std::mutex> lock(mutex_);
  Entry& entry = entry_for(H);
  if (!entry.table)
    entry.table = std::make_shared<const CharacterTable>(CharacterTable::compute(entry.group));
  auto it = entry.blocks.find(p);
  if (it == entry.blocks.end()) {
    auto partition = std::make_shared<const BlockPartition>(block_distribution(*entry.table, p));
    it = entry.blocks.emplace(p, std::move(partition)).first;
  }
  return it->second;
}

std::size_t TableCache::table_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::size_t n = 0;
  for (const auto& [fp, bucket] : entries_) n += bucket.size();
  return n;
}

} // namespace blockscope
