#include "blockscope/corpus.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/io_json.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <thread>

namespace blockscope {

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("BLOCKSCOPE_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

} // namespace

std::vector<CorpusItem> load_corpus_dir(const std::string& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) throw input_error("not a directory: " + directory);
  std::vector<CorpusItem> items;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    CorpusItem item;
    item.file = entry.path().string();
    item.name = entry.path().stem().string();
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(),
            [](const CorpusItem& a, const CorpusItem& b) { return a.name < b.name; });
  return items;
}

CorpusResult corpus_run(const std::vector<CorpusItem>& items, const CorpusOptions& options) {
  struct Slot {
    std::vector<VerificationReport> reports;
    std::vector<std::string> errors;
    std::size_t pin_mismatches = 0;
  };
  std::vector<Slot> slots(items.size());

  auto run_item = [&](std::size_t index) {
    Slot& slot = slots[index];
    const CorpusItem& item = items[index];
    try {
      GroupFile file = load_group_file(item.file);
      const PermGroup& G = file.group;
      const std::string label = item.name;
      TableCache cache;

      std::map<std::string, std::string> pins = file.expected;
      for (const auto& [key, value] : item.expected) pins[key] = value;
      auto check_pin = [&](const std::string& key, const std::string& actual) {
        auto it = pins.find(key);
        if (it == pins.end()) return;
        if (it->second != actual) {
          ++slot.pin_mismatches;
          slot.errors.push_back(label + ": pin " + key + " expected " + it->second + ", got " +
                                actual);
        }
      };
      check_pin("order", std::to_string(G.order()));

      if (G.order() > options.max_order) return;

      std::vector<std::uint64_t> primes = options.primes;
      if (primes.empty()) primes = prime_divisors(G.order());

      if (options.run_theorem_d) {
        for (std::uint64_t p : primes) {
          if (p == 2 || G.order() % p != 0) continue;
          VerificationReport report = verify_thm_d(G, p, cache, label);
          check_pin("thm-d.p" + std::to_string(p), verdict_name(report.verdict));
          slot.reports.push_back(std::move(report));
          if (auto cor = verify_cor_4_2(G, p, cache, label)) slot.reports.push_back(*cor);
        }
      }
      if (options.run_conj_6_2 && G.order() % 2 == 0) {
        VerificationReport report = verify_conj_6_2(G, cache, label);
        check_pin("conj-6-2", verdict_name(report.verdict));
        slot.reports.push_back(std::move(report));
      }
      if (options.run_scenes) {
        std::size_t budget = options.scene_cap;
        std::vector<PermGroup> normals;
        for (std::uint64_t p : primes) {
          if (budget == 0) break;
          if (G.order() % p != 0 || (options.odd_primes_only && p == 2)) continue;
          if (normals.empty()) normals = all_normal_subgroups(G);
          std::vector<ActionScene> scenes =
              generate_scenes(G, normals, p, budget, label);
          budget -= std::min(budget, scenes.size());
          for (const ActionScene& scene : scenes)
            slot.reports.push_back(verify_thm_e_scene(scene, cache));
        }
      }
    } catch (const std::exception& ex) {
      slot.errors.push_back(item.name + ": " + ex.what());
    }
  };

  const unsigned threads = std::min<unsigned>(resolve_threads(options.threads),
                                              std::max<std::size_t>(items.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= items.size()) break;
      run_item(index);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  CorpusResult result;
  for (Slot& slot : slots) {
    for (VerificationReport& report : slot.reports) {
      switch (report.verdict) {
        case Verdict::pass: ++result.passes; break;
        case Verdict::fail:
          if (report.conjecture_finding)
            ++result.findings;
          else
            ++result.fails;
          break;
        case Verdict::inapplicable: ++result.inapplicable; break;
      }
      result.reports.push_back(std::move(report));
    }
    result.pin_mismatches += slot.pin_mismatches;
    for (std::string& err : slot.errors) result.item_errors.push_back(std::move(err));
  }
  return result;
}

} // namespace blockscope
