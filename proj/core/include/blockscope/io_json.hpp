#pragma once

#include "blockscope/blocks.hpp"
#include "blockscope/character_table.hpp"
#include "blockscope/corpus.hpp"
#include "blockscope/correspond.hpp"
#include "blockscope/scene.hpp"
#include "blockscope/verify.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace blockscope {

/// A parsed group file: { "degree": n, "generators": [[cycle...]...],
/// "subgroups": { name: [generator indices or inline cycle lists] },
/// optional "name", "p" and regression pins under "expected".
struct GroupFile {
  std::string name;
  PermGroup group{1};
  std::map<std::string, PermGroup> subgroups;
  std::optional<std::uint64_t> p;
  std::map<std::string, std::string> expected;
};

GroupFile parse_group_file(const std::string& json_text);
GroupFile load_group_file(const std::string& path);
std::string group_file_to_json(const GroupFile& file);

/// Builds the coprime-action scene from a group file carrying subgroups
/// "G", "N", "P" (missing ones default: G = ambient, N = trivial,
/// P = Sylow_p of the ambient).
ActionScene scene_from_group_file(const GroupFile& file, std::optional<std::uint64_t> p_override);

std::string table_to_json(const CharacterTable& table);

/// Imports a table: classes are matched to the engine's canonical class order
/// through their representatives, then every table invariant is re-checked
/// before the table is accepted.
CharacterTable table_from_json(const std::string& json_text);

std::string blocks_to_json(const CharacterTable& table, const BlockPartition& partition);
std::string galois_to_json(const CharacterTable& table, const std::vector<std::uint64_t>& primes);
std::string correspondence_to_json(const ActionScene& scene, const CorrespondenceResult& result);
std::string report_to_json(const VerificationReport& report);
std::string corpus_result_to_json(const CorpusResult& result);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace blockscope
