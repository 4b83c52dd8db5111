#include "blockscope/io_json.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/group_ops.hpp"
#include "blockscope/num_util.hpp"
#include "blockscope/table_ops.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace blockscope {

using nlohmann::json;

namespace {

json cycles_json(const Permutation& g) {
  json out = json::array();
  for (const auto& cycle : g.cycles()) out.push_back(cycle);
  return out;
}

Permutation permutation_from_cycles_json(unsigned degree, const json& j) {
  if (!j.is_array()) throw input_error("permutation must be an array of cycles");
  std::vector<std::vector<unsigned>> cycles;
  for (const json& cj : j) {
    if (!cj.is_array()) throw input_error("cycle must be an array of points");
    std::vector<unsigned> cycle;
    for (const json& pt : cj) {
      if (!pt.is_number_unsigned()) throw input_error("cycle points must be non-negative");
      cycle.push_back(pt.get<unsigned>());
    }
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(degree, cycles);
}

json cyclotomic_json(const Cyclotomic& x) {
  json coeffs = json::object();
  for (const auto& [k, c] : x.terms()) coeffs[std::to_string(k)] = rational_to_string(c);
  return json{{"n", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
    throw input_error("cyclotomic value needs fields n and coeffs");
  const std::uint64_t n = j.at("n").get<std::uint64_t>();
  std::vector<Cyclotomic::Term> terms;
  for (const auto& [key, value] : j.at("coeffs").items())
    terms.emplace_back(std::stoull(key), parse_rational(value.get<std::string>()));
  return Cyclotomic::from_terms(n, terms);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON");
  return j;
}

} // namespace

GroupFile parse_group_file(const std::string& json_text) {
  json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw input_error("group file needs fields degree and generators");
  GroupFile file;
  file.name = j.value("name", std::string{});
  const unsigned degree = j.at("degree").get<unsigned>();
  std::vector<Permutation> gens;
  for (const json& gj : j.at("generators")) gens.push_back(permutation_from_cycles_json(degree, gj));
  file.group = PermGroup(degree, gens);
  if (j.contains("p")) file.p = j.at("p").get<std::uint64_t>();
  if (j.contains("subgroups")) {
    for (const auto& [name, spec] : j.at("subgroups").items()) {
      if (!spec.is_array()) throw input_error("subgroup " + name + " must be an array");
      std::vector<Permutation> sub_gens;
      for (const json& entry : spec) {
        if (entry.is_number_unsigned()) {
          const std::size_t idx = entry.get<std::size_t>();
          if (idx >= gens.size())
            throw input_error("subgroup " + name + " references generator " +
                              std::to_string(idx) + " out of range");
          sub_gens.push_back(gens[idx]);
        } else {
          sub_gens.push_back(permutation_from_cycles_json(degree, entry));
        }
      }
      PermGroup H(degree, sub_gens);
      if (!file.group.contains(H))
        throw input_error("subgroup " + name + " is not contained in the group");
      file.subgroups.emplace(name, std::move(H));
    }
  }
  if (j.contains("expected")) {
    for (const auto& [key, value] : j.at("expected").items())
      file.expected.emplace(key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  return file;
}

GroupFile load_group_file(const std::string& path) {
  return parse_group_file(read_text_file(path));
}

std::string group_file_to_json(const GroupFile& file) {
  json j;
  if (!file.name.empty()) j["name"] = file.name;
  j["degree"] = file.group.degree();
  json gens = json::array();
  for (const Permutation& g : file.group.generators()) gens.push_back(cycles_json(g));
  j["generators"] = std::move(gens);
  if (file.p) j["p"] = *file.p;
  if (!file.subgroups.empty()) {
    json subs = json::object();
    for (const auto& [name, H] : file.subgroups) {
      json list = json::array();
      for (const Permutation& g : H.generators()) list.push_back(cycles_json(g));
      subs[name] = std::move(list);
    }
    j["subgroups"] = std::move(subs);
  }
  if (!file.expected.empty()) {
    json pins = json::object();
    for (const auto& [key, value] : file.expected) pins[key] = value;
    j["expected"] = std::move(pins);
  }
  return j.dump(2) + "\n";
}

ActionScene scene_from_group_file(const GroupFile& file,
                                  std::optional<std::uint64_t> p_override) {
  std::uint64_t p = 0;
  if (p_override)
    p = *p_override;
  else if (file.p)
    p = *file.p;
  else
    throw input_error("scene needs a prime (field \"p\" or the -p flag)");

  const PermGroup& ambient = file.group;
  auto get = [&](const char* name) -> std::optional<PermGroup> {
    auto it = file.subgroups.find(name);
    if (it == file.subgroups.end()) return std::nullopt;
    return it->second;
  };
  PermGroup G = get("G").value_or(ambient);
  PermGroup N = get("N").value_or(PermGroup(ambient.degree()));
  PermGroup P = get("P") ? *get("P") : sylow_subgroup(ambient, p);
  return make_scene(file.name.empty() ? "scene" : file.name, ambient, G, N, P, p);
}

std::string table_to_json(const CharacterTable& table) {
  json j;
  j["schema_version"] = 1;
  json group;
  group["degree"] = table.group().degree();
  json gens = json::array();
  for (const Permutation& g : table.group().generators()) gens.push_back(cycles_json(g));
  group["generators"] = std::move(gens);
  j["group"] = std::move(group);
  j["order"] = table.order();
  j["exponent"] = table.exponent();
  json classes = json::array();
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    json cj;
    cj["rep"] = table.class_rep(static_cast<int>(c)).images();
    cj["size"] = table.class_size(static_cast<int>(c));
    cj["element_order"] = table.element_order(static_cast<int>(c));
    cj["power_map"] = table.class_data().power_map[c];
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  json irr = json::array();
  for (const ClassFunction& chi : table.irreducibles()) {
    json row = json::array();
    for (const Cyclotomic& v : chi.values) row.push_back(cyclotomic_json(v));
    irr.push_back(std::move(row));
  }
  j["irreducibles"] = std::move(irr);
  return j.dump(2) + "\n";
}

CharacterTable table_from_json(const std::string& json_text) {
  json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("group") || !j.contains("classes") ||
      !j.contains("irreducibles"))
    throw input_error("table file needs group, classes and irreducibles");
  const json& gj = j.at("group");
  const unsigned degree = gj.at("degree").get<unsigned>();
  std::vector<Permutation> gens;
  for (const json& g : gj.at("generators")) gens.push_back(permutation_from_cycles_json(degree, g));
  PermGroup group(degree, std::move(gens));

  // Match the file's class order to the canonical one via representatives.
  ClassData canonical = build_class_data(group);
  const std::size_t k = canonical.sizes.size();
  const json& classes = j.at("classes");
  if (classes.size() != k) throw input_error("table file: wrong number of classes");
  std::vector<int> file_to_canonical(k, -1);
  std::vector<char> hit(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    const json& cj = classes[c];
    Permutation rep(cj.at("rep").get<std::vector<unsigned>>());
    int mine = canonical.classes.class_of(rep);
    if (hit[mine]) throw input_error("table file: two classes share a representative");
    hit[mine] = 1;
    file_to_canonical[c] = mine;
    if (cj.at("size").get<std::uint64_t>() != canonical.sizes[mine])
      throw input_error("table file: class size mismatch");
    if (cj.contains("element_order") &&
        cj.at("element_order").get<std::uint64_t>() != canonical.element_orders[mine])
      throw input_error("table file: element order mismatch");
  }

  const json& irr = j.at("irreducibles");
  if (irr.size() != k) throw input_error("table file: wrong number of irreducibles");
  std::vector<std::vector<Cyclotomic>> values(k, std::vector<Cyclotomic>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (irr[i].size() != k) throw input_error("table file: irreducible row length mismatch");
    for (std::size_t c = 0; c < k; ++c)
      values[i][file_to_canonical[c]] = cyclotomic_from_json(irr[i][c]);
  }
  return CharacterTable::from_values(group, std::move(values));
}

std::string blocks_to_json(const CharacterTable& table, const BlockPartition& partition) {
  json j;
  j["schema_version"] = 1;
  j["p"] = partition.p;
  j["order"] = table.order();
  j["field"] = {{"p", partition.reduction->field().p()},
                {"f", partition.reduction->field().f()},
                {"modulus", partition.reduction->field().modulus()}};
  j["principal_index"] = partition.principal_index;
  json blocks = json::array();
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    BlockData data = defect_and_heights(table, partition, b);
    json bj;
    bj["members"] = partition.blocks[b];
    json degrees = json::array();
    json rational = json::array();
    json fingerprints = json::array();
    for (std::size_t idx : partition.blocks[b]) {
      degrees.push_back(table.degree(idx));
      rational.push_back(character_is_p_rational(table, idx, partition.p));
      json fp = json::array();
      for (const auto& e : partition.fingerprints[idx])
        fp.push_back(partition.reduction->field().encode(e));
      fingerprints.push_back(std::move(fp));
    }
    bj["degrees"] = std::move(degrees);
    bj["p_rational"] = std::move(rational);
    bj["defect"] = data.defect;
    bj["heights"] = data.heights;
    bj["fingerprints"] = std::move(fingerprints);
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  return j.dump(2) + "\n";
}

std::string galois_to_json(const CharacterTable& table,
                           const std::vector<std::uint64_t>& primes) {
  json j;
  j["schema_version"] = 1;
  j["exponent"] = table.exponent();
  // Orbits of the full Galois action on the irreducibles.
  const std::size_t k = table.class_count();
  std::vector<int> orbit_of(k, -1);
  json orbits = json::array();
  for (std::size_t i = 0; i < k; ++i) {
    if (orbit_of[i] != -1) continue;
    std::vector<std::size_t> orbit{i};
    orbit_of[i] = static_cast<int>(orbits.size());
    for (std::uint64_t mul = 2; mul <= table.exponent(); ++mul) {
      if (std::gcd(mul, table.exponent()) != 1) continue;
      std::vector<int> perm = galois_permutation(table, mul % table.exponent());
      std::size_t j2 = static_cast<std::size_t>(perm[i]);
      if (orbit_of[j2] == -1) {
        orbit_of[j2] = orbit_of[i];
        orbit.push_back(j2);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(orbit);
  }
  j["orbits"] = std::move(orbits);
  json chars = json::array();
  for (std::size_t i = 0; i < k; ++i) {
    json cj;
    cj["index"] = i;
    cj["degree"] = table.degree(i);
    json flags = json::object();
    for (std::uint64_t p : primes)
      flags[std::to_string(p)] = character_is_p_rational(table, i, p);
    cj["p_rational"] = std::move(flags);
    chars.push_back(std::move(cj));
  }
  j["characters"] = std::move(chars);
  return j.dump(2) + "\n";
}

std::string correspondence_to_json(const ActionScene& scene,
                                   const CorrespondenceResult& result) {
  json j;
  j["schema_version"] = 1;
  j["scene"] = {{"name", scene.name},
                {"p", scene.p},
                {"ambient_order", scene.ambient.order()},
                {"G_order", scene.G.order()},
                {"N_order", scene.N.order()},
                {"P_order", scene.P.order()},
                {"C_order", result.C.order()}};
  j["bijective"] = result.bijective;
  j["irr_p_g"] = result.irr_p_g;
  j["irr_p_c"] = result.irr_p_c;
  json pairs = json::array();
  for (const CorrespondencePair& pair : result.pairs) {
    json pj;
    pj["chi"] = pair.chi;
    pj["chi_star"] = pair.chi_star;
    pj["e"] = pair.e;
    json delta = json::array();
    for (const auto& [idx, mult] : pair.delta) delta.push_back({idx, mult});
    json xi = json::array();
    for (const auto& [idx, mult] : pair.xi) xi.push_back({idx, mult});
    pj["delta"] = std::move(delta);
    pj["xi"] = std::move(xi);
    pj["checks"] = {{"e_plus_minus_one", pair.e_plus_minus_one},
                    {"chi_star_p_invariant", pair.chi_star_p_invariant},
                    {"field_equal", pair.field_equal},
                    {"p_prime_degree", pair.p_prime_degree},
                    {"block_preserved", pair.block_preserved},
                    {"clifford_consistent", pair.clifford_consistent}};
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report) {
  json j;
  j["target"] = report.target;
  j["inputs"] = report.inputs;
  j["verdict"] = verdict_name(report.verdict);
  j["detail"] = report.detail;
  json w = json::object();
  for (const auto& [key, value] : report.witnesses) w[key] = value;
  j["witnesses"] = std::move(w);
  if (report.conjecture_finding) j["conjecture_finding"] = true;
  j["timings_ms"] = {{"elapsed", report.elapsed_ms}};
  return j.dump(2) + "\n";
}

std::string corpus_result_to_json(const CorpusResult& result) {
  json j;
  j["schema_version"] = 1;
  j["summary"] = {{"pass", result.passes},
                  {"fail", result.fails},
                  {"inapplicable", result.inapplicable},
                  {"findings", result.findings},
                  {"pin_mismatches", result.pin_mismatches},
                  {"item_errors", result.item_errors.size()}};
  json reports = json::array();
  double total_ms = 0;
  for (const VerificationReport& report : result.reports) {
    total_ms += report.elapsed_ms;
    json rj;
    rj["target"] = report.target;
    rj["inputs"] = report.inputs;
    rj["verdict"] = verdict_name(report.verdict);
    rj["detail"] = report.detail;
    if (report.conjecture_finding) rj["conjecture_finding"] = true;
    json w = json::object();
    for (const auto& [key, value] : report.witnesses) w[key] = value;
    rj["witnesses"] = std::move(w);
    reports.push_back(std::move(rj));
  }
  j["reports"] = std::move(reports);
  j["item_errors"] = result.item_errors;
  j["timings_ms"] = {{"total", total_ms}};
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

} // namespace blockscope
