// Generates the bundled group corpus under data/corpus and the scene files
// under data/scenes.  Deterministic: rerunning reproduces identical files.

#include "blockscope/corpus.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/group_library.hpp"
#include "blockscope/group_ops.hpp"
#include "blockscope/io_json.hpp"
#include "blockscope/num_util.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace {

using namespace blockscope;

struct Item {
  std::string name;
  GroupFile file;
};

std::vector<Item> items;

void add(const std::string& name, PermGroup group,
         std::map<std::string, PermGroup> subgroups = {},
         std::optional<std::uint64_t> p = std::nullopt) {
  Item item;
  item.name = name;
  item.file.name = name;
  item.file.group = std::move(group);
  item.file.subgroups = std::move(subgroups);
  item.file.p = p;
  items.push_back(std::move(item));
}

// All invariant-factor chains d1 | d2 | ... with product <= bound (>= 2 parts).
void add_abelian(unsigned bound) {
  std::vector<unsigned> chain;
  auto rec = [&](auto&& self, unsigned first, unsigned product) -> void {
    for (unsigned d = first; product * d <= bound; ++d) {
      if (!chain.empty() && d % chain.back() != 0) continue;
      chain.push_back(d);
      if (chain.size() >= 2) {
        std::ostringstream name;
        name << "abelian";
        for (unsigned f : chain) name << "_" << f;
        add(name.str(), abelian_group(chain));
      }
      self(self, d, product * d);
      chain.pop_back();
    }
  };
  rec(rec, 2, 1);
}

// Nonabelian split metacyclic groups C_m x| C_k, deduplicated by the acting
// subgroup of (Z/m)^*.
void add_metacyclic(unsigned bound) {
  for (unsigned m = 3; m <= bound / 2; ++m) {
    std::set<std::set<unsigned>> seen;
    for (unsigned a = 2; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const unsigned k = static_cast<unsigned>(multiplicative_order(a, m));
      if (k < 2 || static_cast<std::uint64_t>(m) * k > bound) continue;
      std::set<unsigned> subgroup;
      std::uint64_t x = 1;
      for (unsigned i = 0; i < k; ++i) {
        x = x * a % m;
        subgroup.insert(static_cast<unsigned>(x));
      }
      if (!seen.insert(subgroup).second) continue;
      std::ostringstream name;
      name << "c" << m << "rc" << k << "a" << a;
      add(name.str(), metacyclic_group(m, k, a));
    }
  }
}

PermGroup matrix_group_gl23(bool special_only) {
  // Action on the 8 nonzero vectors of F_3^2.
  std::vector<std::pair<int, int>> points;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) points.emplace_back(x, y);
  auto index_of = [&](int x, int y) {
    for (unsigned i = 0; i < points.size(); ++i)
      if (points[i] == std::make_pair(x, y)) return i;
    throw error("unreachable");
  };
  auto mat_perm = [&](int a, int b, int c, int d) {
    std::vector<unsigned> images(points.size());
    for (unsigned i = 0; i < points.size(); ++i) {
      auto [x, y] = points[i];
      images[i] = index_of(((a * x + b * y) % 3 + 3) % 3, ((c * x + d * y) % 3 + 3) % 3);
    }
    return Permutation(images);
  };
  std::vector<Permutation> gens{mat_perm(1, 1, 0, 1), mat_perm(0, -1, 1, 0)};
  if (!special_only) gens.push_back(mat_perm(1, 0, 0, -1));
  return PermGroup(8, gens);
}

std::uint64_t element_map_order(const ElementMap& alpha) {
  std::uint64_t ord = 1;
  std::vector<char> seen(alpha.size(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(alpha[j]);
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

// First automorphism tuple, each automorphism of the same order as the
// matching generator of B, that defines a split extension.  The order match
// keeps cyclic actions faithful.
std::optional<PermGroup> first_semidirect(const PermGroup& A, const PermGroup& B) {
  std::vector<ElementMap> autos = all_automorphisms(A);
  const auto& bgens = B.generators();
  std::vector<std::vector<std::size_t>> candidates(bgens.size());
  for (std::size_t g = 0; g < bgens.size(); ++g)
    for (std::size_t a = 0; a < autos.size(); ++a)
      if (element_map_order(autos[a]) == bgens[g].order()) candidates[g].push_back(a);
  for (const auto& c : candidates)
    if (c.empty()) return std::nullopt;

  std::vector<std::size_t> pick(bgens.size(), 0);
  while (true) {
    std::vector<ElementMap> action;
    for (std::size_t g = 0; g < bgens.size(); ++g) action.push_back(autos[candidates[g][pick[g]]]);
    try {
      return semidirect_product(A, B, action);
    } catch (const domain_error&) {
    }
    std::size_t g = 0;
    while (g < bgens.size()) {
      if (++pick[g] < candidates[g].size()) break;
      pick[g] = 0;
      ++g;
    }
    if (g == bgens.size()) return std::nullopt;
  }
}

void build_items() {
  for (unsigned n = 1; n <= 100; ++n) add("cyclic_" + std::to_string(n), cyclic_group(n));
  add_abelian(100);
  for (unsigned n = 3; 2 * n <= 100; ++n)
    add("dihedral_" + std::to_string(2 * n), dihedral_group(n));
  for (unsigned n = 2; 4 * n <= 100; ++n)
    add("dicyclic_" + std::to_string(4 * n), dicyclic_group(n));
  add_metacyclic(100);

  add("s3", symmetric_group(3));
  add("s4", symmetric_group(4));
  add("s5", symmetric_group(5));
  add("s6", symmetric_group(6));
  add("a4", alternating_group(4),
      {{"G", PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                           Permutation::from_cycles(4, {{0, 2}, {1, 3}})})},
       {"N", PermGroup(4)},
       {"P", PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2}})})}},
      3);
  add("a5", alternating_group(5));
  add("a6", alternating_group(6));
  add("psl_2_7", psl_2_7());
  add("heisenberg_27", heisenberg3());
  add("sl_2_3", matrix_group_gl23(true));
  add("gl_2_3", matrix_group_gl23(false));

  {
    PermGroup f21 = metacyclic_group(7, 3, 2);
    std::map<std::string, PermGroup> subs;
    subs.emplace("G", PermGroup(10, {f21.generators()[0]}));
    subs.emplace("N", PermGroup(10));
    subs.emplace("P", PermGroup(10, {f21.generators()[1]}));
    add("frobenius_21", std::move(f21), std::move(subs), 3);
  }
  {
    PermGroup g = direct_product(cyclic_group(3), symmetric_group(3));
    std::map<std::string, PermGroup> subs;
    subs.emplace("N", PermGroup(g.degree(), {g.generators()[0]}));
    add("c3xs3", std::move(g), std::move(subs), 3);
  }

  add("c2xa4", direct_product(cyclic_group(2), alternating_group(4)));
  add("c3xa4", direct_product(cyclic_group(3), alternating_group(4)));
  add("s3xs3", direct_product(symmetric_group(3), symmetric_group(3)));
  add("c2xs4", direct_product(cyclic_group(2), symmetric_group(4)));
  add("c4xs3", direct_product(cyclic_group(4), symmetric_group(3)));
  add("c5xs3", direct_product(cyclic_group(5), symmetric_group(3)));
  add("c3xd8", direct_product(cyclic_group(3), dihedral_group(4)));
  add("c3xq8", direct_product(cyclic_group(3), dicyclic_group(2)));
  add("c2xa5", direct_product(cyclic_group(2), alternating_group(5)));
  add("c3xa5", direct_product(cyclic_group(3), alternating_group(5)));

  // (C3 x C3) extensions through subgroups of its automorphism group.
  {
    PermGroup c3c3 = abelian_group({3, 3});
    if (auto g = first_semidirect(c3c3, cyclic_group(2))) add("c3c3_c2", *g);
    if (auto g = first_semidirect(c3c3, cyclic_group(4))) add("c3c3_c4", *g);
    if (auto g = first_semidirect(c3c3, cyclic_group(8))) add("c3c3_c8", *g);
    if (auto g = first_semidirect(c3c3, dicyclic_group(2))) add("c3c3_q8", *g);
  }
  if (auto g = first_semidirect(heisenberg3(), cyclic_group(2))) add("heisenberg_27_c2", *g);

  add("smallgroup_216_158", smallgroup_216_158(), {}, 3);

  // The two sibling order-216 extensions C3^3 x| D8 with faithful dihedral
  // action; like the catalog group they have a unique 3-block.
  {
    using C = std::vector<std::vector<unsigned>>;
    auto base = [] {
      std::vector<Permutation> gens;
      const C t1{{0, 9, 18}, {1, 10, 19}, {2, 11, 20}, {3, 12, 21}, {4, 13, 22},
                 {5, 14, 23}, {6, 15, 24}, {7, 16, 25}, {8, 17, 26}};
      const C t2{{0, 3, 6},    {1, 4, 7},    {2, 5, 8},    {9, 12, 15},  {10, 13, 16},
                 {11, 14, 17}, {18, 21, 24}, {19, 22, 25}, {20, 23, 26}};
      const C t3{{0, 1, 2},    {3, 4, 5},    {6, 7, 8},    {9, 10, 11},  {12, 13, 14},
                 {15, 16, 17}, {18, 19, 20}, {21, 22, 23}, {24, 25, 26}};
      gens.push_back(Permutation::from_cycles(27, t1));
      gens.push_back(Permutation::from_cycles(27, t2));
      gens.push_back(Permutation::from_cycles(27, t3));
      return gens;
    };
    {
      std::vector<Permutation> gens = base();
      const C s{{9, 18}, {10, 19}, {11, 20}, {12, 21}, {13, 22}, {14, 23}, {15, 24},
                {16, 25}, {17, 26}};
      const C r{{1, 2},  {3, 9},  {4, 11},  {5, 10},  {6, 18},  {7, 20},
                {8, 19}, {13, 14}, {15, 21}, {16, 23}, {17, 22}, {25, 26}};
      gens.push_back(Permutation::from_cycles(27, s));
      gens.push_back(Permutation::from_cycles(27, r));
      add("c3c3c3_d8a", PermGroup(27, gens));
    }
    {
      std::vector<Permutation> gens = base();
      const C s{{3, 9, 6, 18},  {4, 10, 7, 19},  {5, 11, 8, 20},
                {12, 15, 24, 21}, {13, 16, 25, 22}, {14, 17, 26, 23}};
      const C r{{1, 2},  {4, 5},  {7, 8},  {9, 18},  {10, 20}, {11, 19},
                {12, 21}, {13, 23}, {14, 22}, {15, 24}, {16, 26}, {17, 25}};
      gens.push_back(Permutation::from_cycles(27, s));
      gens.push_back(Permutation::from_cycles(27, r));
      add("c3c3c3_d8b", PermGroup(27, gens));
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"generate the bundled corpus"};
  std::string corpus_dir = "data/corpus";
  std::string scenes_dir = "data/scenes";
  bool with_pins = false;
  std::uint64_t pin_max_order = 120;
  app.add_option("--corpus", corpus_dir, "corpus output directory");
  app.add_option("--scenes", scenes_dir, "scene output directory");
  app.add_flag("--pins", with_pins, "embed regression pins (runs the verifier)");
  app.add_option("--pin-max-order", pin_max_order, "pin groups up to this order");
  CLI11_PARSE(app, argc, argv);

  try {
    build_items();
  } catch (const std::exception& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return 1;
  }

  namespace fs = std::filesystem;
  fs::create_directories(corpus_dir);
  fs::create_directories(scenes_dir);

  std::size_t written = 0;
  for (Item& item : items) {
    item.file.expected["order"] = std::to_string(item.file.group.order());
    if (with_pins && item.file.group.order() <= pin_max_order) {
      TableCache cache;
      for (std::uint64_t p : prime_divisors(item.file.group.order())) {
        if (p == 2) continue;
        VerificationReport report = verify_thm_d(item.file.group, p, cache, item.name);
        item.file.expected["thm-d.p" + std::to_string(p)] = verdict_name(report.verdict);
      }
      if (item.file.group.order() % 2 == 0) {
        VerificationReport report = verify_conj_6_2(item.file.group, cache, item.name);
        item.file.expected["conj-6-2"] = verdict_name(report.verdict);
      }
    }
    write_text_file((fs::path(corpus_dir) / (item.name + ".json")).string(),
                    group_file_to_json(item.file));
    ++written;
  }

  // Scene files: the classical fixed-point-free actions plus a trivial-P one.
  {
    GroupFile scene;
    scene.name = "scene_frobenius21";
    PermGroup f21 = metacyclic_group(7, 3, 2);
    scene.group = f21;
    scene.subgroups.emplace("G", PermGroup(10, {f21.generators()[0]}));
    scene.subgroups.emplace("N", PermGroup(10));
    scene.subgroups.emplace("P", PermGroup(10, {f21.generators()[1]}));
    scene.p = 3;
    write_text_file((fs::path(scenes_dir) / "frobenius21.json").string(),
                    group_file_to_json(scene));
  }
  {
    GroupFile scene;
    scene.name = "scene_a4_v4";
    scene.group = alternating_group(4);
    scene.subgroups.emplace("G", PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                               Permutation::from_cycles(4, {{0, 2}, {1, 3}})}));
    scene.subgroups.emplace("N", PermGroup(4));
    scene.subgroups.emplace("P", PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2}})}));
    scene.p = 3;
    write_text_file((fs::path(scenes_dir) / "a4_v4.json").string(), group_file_to_json(scene));
  }
  {
    GroupFile scene;
    scene.name = "scene_s3_trivial_p";
    scene.group = symmetric_group(3);
    scene.subgroups.emplace("G", symmetric_group(3));
    scene.subgroups.emplace("N", PermGroup(3, {Permutation::from_cycles(3, {{0, 1, 2}})}));
    scene.subgroups.emplace("P", PermGroup(3));
    scene.p = 5;
    write_text_file((fs::path(scenes_dir) / "s3_trivial_p.json").string(),
                    group_file_to_json(scene));
  }

  std::cout << "wrote " << written << " corpus files to " << corpus_dir << '\n';
  return 0;
}
