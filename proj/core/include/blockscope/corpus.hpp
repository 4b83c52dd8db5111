#pragma once

#include "blockscope/verify.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace blockscope {

struct CorpusItem {
  std::string name;
  std::string file; // path of the group file
  /// Regression pins: flat key -> expected value, checked when present.
  std::map<std::string, std::string> expected;
};

struct CorpusOptions {
  std::uint64_t max_order = 500;
  std::vector<std::uint64_t> primes; // empty: primes dividing each order
  bool odd_primes_only = true;       // restrict scene generation to odd p
  bool run_theorem_d = true;
  bool run_conj_6_2 = true;
  bool run_scenes = true;
  std::size_t scene_cap = 50;
  unsigned threads = 0; // 0: BLOCKSCOPE_THREADS or hardware concurrency
};

struct CorpusResult {
  std::vector<VerificationReport> reports; // merged in item-name order
  std::vector<std::string> item_errors;    // quarantined per-item failures
  std::size_t passes = 0;
  std::size_t fails = 0;
  std::size_t inapplicable = 0;
  std::size_t findings = 0;
  std::size_t pin_mismatches = 0;
};

/// Loads every *.json group file of a directory as a corpus item, sorted by
/// file name.
std::vector<CorpusItem> load_corpus_dir(const std::string& directory);

/// Runs the per-group checks over all items.  Items run in parallel (capped
/// by BLOCKSCOPE_THREADS); reports are merged deterministically by item name.
/// Per-item exceptions are quarantined into item_errors and do not stop the
/// run.
CorpusResult corpus_run(const std::vector<CorpusItem>& items, const CorpusOptions& options);

} // namespace blockscope
