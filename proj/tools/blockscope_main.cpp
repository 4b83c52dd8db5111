#include "blockscope/corpus.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/extension.hpp"
#include "blockscope/io_json.hpp"
#include "blockscope/num_util.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace blockscope;

constexpr int kExitPass = 0;
constexpr int kExitTheoremFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapacityError = 3;

void emit(const std::string& payload, const std::string& report_path) {
  if (report_path.empty())
    std::cout << payload;
  else
    write_text_file(report_path, payload);
}

std::string render_report_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "[" << verdict_name(report.verdict) << "] " << report.target << " (" << report.inputs
     << ")\n  " << report.detail << "\n";
  for (const auto& [key, value] : report.witnesses) os << "  " << key << ": " << value << "\n";
  return os.str();
}

int finish_report(const VerificationReport& report, const std::string& format,
                  const std::string& report_path) {
  emit(format == "text" ? render_report_text(report) : report_to_json(report), report_path);
  if (report.verdict == Verdict::fail && !report.conjecture_finding) return kExitTheoremFail;
  return kExitPass;
}

std::uint64_t parse_prime_flag(const std::vector<std::uint64_t>& primes) {
  if (primes.size() != 1) throw input_error("exactly one -p/--prime required here");
  if (!is_prime(primes[0])) throw input_error("-p must be a prime");
  return primes[0];
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"blockscope: exact character theory, p-blocks and correspondence checks for "
               "finite permutation groups"};
  app.require_subcommand(1);

  std::vector<std::uint64_t> primes;
  std::string report_path;
  std::string format = "json";
  std::string scene_name;
  std::uint64_t max_order = 500;
  std::string sub_name = "N";
  std::size_t theta_index = 0;
  std::string primes_mode = "odd";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-p,--prime", primes, "prime(s) p")->check(CLI::PositiveNumber);
    cmd->add_option("--report", report_path, "write the report to this path");
    cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  std::string input_path;

  CLI::App* table_cmd = app.add_subcommand("table", "character table of a group file");
  table_cmd->add_option("group", input_path, "group JSON file")->required();
  add_common(table_cmd);

  CLI::App* blocks_cmd = app.add_subcommand("blocks", "p-block distribution");
  blocks_cmd->add_option("group", input_path, "group JSON file")->required();
  add_common(blocks_cmd);

  CLI::App* galois_cmd = app.add_subcommand("galois", "Galois orbits and p-rationality flags");
  galois_cmd->add_option("group", input_path, "group JSON file")->required();
  add_common(galois_cmd);

  CLI::App* glauberman_cmd =
      app.add_subcommand("glauberman", "relative Glauberman correspondence on a scene file");
  glauberman_cmd->add_option("file", input_path, "scene JSON file (subgroups G, N, P)")
      ->required();
  glauberman_cmd->add_option("--scene", scene_name,
                             "use subgroups NAME.G / NAME.N / NAME.P from the file");
  add_common(glauberman_cmd);

  CLI::App* extend_cmd =
      app.add_subcommand("extend-f", "canonical p-rational extension of a character of N");
  extend_cmd->add_option("group", input_path, "group JSON file with subgroup N")->required();
  extend_cmd->add_option("--sub", sub_name, "name of the normal subgroup (default N)");
  extend_cmd->add_option("--theta", theta_index, "index of theta in Irr(N)");
  add_common(extend_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run one theorem check");
  std::string target;
  verify_cmd
      ->add_option("target", target,
                   "thm-d | thm-e | thm-f | cor-3-6 | conj-6-2 | counterexample-216")
      ->required()
      ->check(CLI::IsMember(
          {"thm-d", "thm-e", "thm-f", "cor-3-6", "conj-6-2", "counterexample-216"}));
  verify_cmd->add_option("group", input_path, "group/scene JSON file")->required();
  verify_cmd->add_option("--sub", sub_name, "normal subgroup name (thm-f, cor-3-6)");
  verify_cmd->add_option("--theta", theta_index, "character index in Irr(N)");
  add_common(verify_cmd);

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "corpus-wide sweeps");
  CLI::App* corpus_run_cmd = corpus_cmd->add_subcommand("run", "run all checks over a corpus");
  corpus_run_cmd->add_option("dir", input_path, "corpus directory of group files")->required();
  corpus_run_cmd->add_option("--primes", primes_mode, "odd | all | comma list of primes");
  corpus_run_cmd->add_option("--max-order", max_order, "skip groups above this order");
  std::size_t scene_cap = 50;
  corpus_run_cmd->add_option("--scene-cap", scene_cap, "scenes generated per group");
  add_common(corpus_run_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*table_cmd) {
      GroupFile file = load_group_file(input_path);
      CharacterTable table = CharacterTable::compute(file.group);
      if (format == "text") {
        std::ostringstream os;
        os << "group of order " << table.order() << ", " << table.class_count()
           << " classes, exponent " << table.exponent() << "\ndegrees:";
        for (std::size_t i = 0; i < table.class_count(); ++i) os << ' ' << table.degree(i);
        os << '\n';
        emit(os.str(), report_path);
      } else {
        emit(table_to_json(table), report_path);
      }
      return kExitPass;
    }

    if (*blocks_cmd) {
      const std::uint64_t p = parse_prime_flag(primes);
      GroupFile file = load_group_file(input_path);
      CharacterTable table = CharacterTable::compute(file.group);
      BlockPartition partition = block_distribution(table, p);
      if (format == "text") {
        std::ostringstream os;
        os << partition.blocks.size() << " block(s) at p=" << p << "\n";
        for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
          BlockData data = defect_and_heights(table, partition, b);
          os << (static_cast<int>(b) == partition.principal_index ? "B0" : "B" + std::to_string(b))
             << " defect " << data.defect << " degrees";
          for (std::size_t idx : partition.blocks[b]) os << ' ' << table.degree(idx);
          os << '\n';
        }
        emit(os.str(), report_path);
      } else {
        emit(blocks_to_json(table, partition), report_path);
      }
      return kExitPass;
    }

    if (*galois_cmd) {
      GroupFile file = load_group_file(input_path);
      CharacterTable table = CharacterTable::compute(file.group);
      std::vector<std::uint64_t> flags = primes;
      if (flags.empty()) flags = prime_divisors(table.order());
      emit(galois_to_json(table, flags), report_path);
      return kExitPass;
    }

    if (*glauberman_cmd) {
      GroupFile file = load_group_file(input_path);
      if (!scene_name.empty()) {
        // Rebase the named subgroup triple onto the plain names.
        GroupFile renamed = file;
        renamed.subgroups.clear();
        for (const char* key : {"G", "N", "P"}) {
          auto it = file.subgroups.find(scene_name + "." + key);
          if (it != file.subgroups.end()) renamed.subgroups.emplace(key, it->second);
        }
        file = std::move(renamed);
      }
      std::optional<std::uint64_t> p_override;
      if (!primes.empty()) p_override = parse_prime_flag(primes);
      ActionScene scene = scene_from_group_file(file, p_override);
      TableCache cache;
      CorrespondenceResult result = relative_glauberman(scene, cache);
      emit(correspondence_to_json(scene, result), report_path);
      return kExitPass;
    }

    if (*extend_cmd) {
      const std::uint64_t p = parse_prime_flag(primes);
      GroupFile file = load_group_file(input_path);
      auto it = file.subgroups.find(sub_name);
      if (it == file.subgroups.end())
        throw input_error("group file has no subgroup named " + sub_name);
      TableCache cache;
      VerificationReport report =
          verify_thm_f_instance(file.group, it->second, theta_index, p, cache,
                                file.name.empty() ? input_path : file.name);
      return finish_report(report, format, report_path);
    }

    if (*verify_cmd) {
      GroupFile file = load_group_file(input_path);
      const std::string label = file.name.empty() ? input_path : file.name;
      TableCache cache;
      VerificationReport report;
      if (target == "thm-d") {
        report = verify_thm_d(file.group, parse_prime_flag(primes), cache, label);
      } else if (target == "thm-e") {
        std::optional<std::uint64_t> p_override;
        if (!primes.empty()) p_override = parse_prime_flag(primes);
        report = verify_thm_e_scene(scene_from_group_file(file, p_override), cache);
      } else if (target == "thm-f" || target == "cor-3-6") {
        auto it = file.subgroups.find(sub_name);
        if (it == file.subgroups.end())
          throw input_error("group file has no subgroup named " + sub_name);
        const std::uint64_t p = parse_prime_flag(primes);
        report = target == "thm-f"
                     ? verify_thm_f_instance(file.group, it->second, theta_index, p, cache, label)
                     : verify_cor_3_6(file.group, it->second, theta_index, p, cache, label);
      } else if (target == "conj-6-2") {
        report = verify_conj_6_2(file.group, cache, label);
      } else {
        report = verify_counterexample_216(file.group, cache, label);
      }
      return finish_report(report, format, report_path);
    }

    if (*corpus_run_cmd) {
      CorpusOptions options;
      options.max_order = max_order;
      options.scene_cap = scene_cap;
      if (primes_mode == "odd") {
        options.odd_primes_only = true;
      } else if (primes_mode == "all") {
        options.odd_primes_only = false;
      } else {
        std::stringstream ss(primes_mode);
        std::string tok;
        while (std::getline(ss, tok, ',')) options.primes.push_back(std::stoull(tok));
      }
      std::vector<CorpusItem> items = load_corpus_dir(input_path);
      CorpusResult result = corpus_run(items, options);
      if (format == "text") {
        std::ostringstream os;
        os << "corpus: " << items.size() << " items, " << result.passes << " pass, "
           << result.fails << " fail, " << result.inapplicable << " inapplicable, "
           << result.findings << " findings, " << result.pin_mismatches << " pin mismatches, "
           << result.item_errors.size() << " item errors\n";
        for (const std::string& err : result.item_errors) os << "  error: " << err << '\n';
        for (const VerificationReport& report : result.reports)
          if (report.verdict == Verdict::fail) os << render_report_text(report);
        emit(os.str(), report_path);
      } else {
        emit(corpus_result_to_json(result), report_path);
      }
      return (result.fails == 0 && result.item_errors.empty() && result.pin_mismatches == 0)
                 ? kExitPass
                 : kExitTheoremFail;
    }
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacityError;
  } catch (const theorem_violation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n' << e.diagnostics() << '\n';
    return kExitTheoremFail;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
