#include "blockscope/group_ops.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace blockscope {

namespace {

/// Incrementally absorbs elements into a subgroup, rebuilding the chain only
/// when the element is genuinely new.  Each rebuild at least doubles the
/// order, so there are at most log2|G| rebuilds.
class GrowingGroup {
public:
  explicit GrowingGroup(unsigned degree) : group_(degree) {}

  bool absorb(const Permutation& g) {
    if (group_.contains(g)) return false;
    std::vector<Permutation> gens = group_.generators();
    gens.push_back(g);
    group_ = PermGroup(group_.degree(), std::move(gens));
    return true;
  }

  const PermGroup& group() const { return group_; }
  PermGroup take() { return std::move(group_); }

private:
  PermGroup group_;
};

} // namespace

std::shared_ptr<const GroupElements> enumerate_elements(const PermGroup& G,
                                                        std::uint64_t limit) {
  auto out = std::make_shared<GroupElements>();
  out->sorted = G.elements(limit);
  out->index_of.reserve(out->sorted.size());
  for (std::size_t i = 0; i < out->sorted.size(); ++i)
    out->index_of.emplace(out->sorted[i], static_cast<int>(i));
  return out;
}

int ConjugacyClasses::class_of(const Permutation& x) const {
  auto it = elements->index_of.find(x);
  if (it == elements->index_of.end()) throw domain_error("element is not in the group");
  return class_of_element[it->second];
}

ConjugacyClasses conjugacy_classes(const PermGroup& G) {
  ConjugacyClasses out;
  out.elements = enumerate_elements(G);
  const auto& elems = out.elements->sorted;
  out.class_of_element.assign(elems.size(), -1);

  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (out.class_of_element[start] != -1) continue;
    int cls = static_cast<int>(out.rep_element.size());
    out.rep_element.push_back(static_cast<int>(start));
    std::vector<int> member_indices;
    std::deque<int> frontier{static_cast<int>(start)};
    out.class_of_element[start] = cls;
    member_indices.push_back(static_cast<int>(start));
    while (!frontier.empty()) {
      int idx = frontier.front();
      frontier.pop_front();
      for (const Permutation& g : G.generators()) {
        Permutation conj = elems[idx].conjugated_by(g);
        int cidx = out.elements->index_of.at(conj);
        if (out.class_of_element[cidx] == -1) {
          out.class_of_element[cidx] = cls;
          member_indices.push_back(cidx);
          frontier.push_back(cidx);
        }
      }
    }
    std::sort(member_indices.begin(), member_indices.end());
    out.members.push_back(std::move(member_indices));
  }
  return out;
}

PermGroup centralizer(const PermGroup& G, const Permutation& x) {
  if (!G.contains(x)) throw domain_error("centralizer: element is not in the group");
  GrowingGroup cent(G.degree());
  for (const Permutation& g : G.elements()) {
    if (g * x == x * g) cent.absorb(g);
  }
  return cent.take();
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
  if (!G.contains(H)) throw domain_error("normalizer: H is not a subgroup of G");
  GrowingGroup norm(G.degree());
  for (const Permutation& g : G.elements()) {
    bool normalizes = true;
    for (const Permutation& h : H.generators()) {
      if (!H.contains(h.conjugated_by(g))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) norm.absorb(g);
  }
  return norm.take();
}

PermGroup sylow_subgroup(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("sylow_subgroup: p must be prime");
  const std::uint64_t target = p_part(G.order(), p);
  if (target == 1) return PermGroup(G.degree());

  // Seed with the p-part of some element of order divisible by p.
  GrowingGroup syl(G.degree());
  auto elems = enumerate_elements(G);
  for (const Permutation& g : elems->sorted) {
    std::uint64_t ord = g.order();
    if (ord % p == 0) {
      Permutation y = g;
      std::uint64_t cof = p_prime_part(ord, p);
      for (std::uint64_t i = 1; i < cof; ++i) y = y * g;
      syl.absorb(y);
      break;
    }
  }

  // Ascend: inside N_G(P) any p-element outside P extends P to a larger
  // p-subgroup, and one exists while |P| < |G|_p.
  while (syl.group().order() < target) {
    PermGroup norm = normalizer(G, syl.group());
    bool grew = false;
    for (const Permutation& g : norm.elements()) {
      std::uint64_t ord = g.order();
      if (ord == p_part(ord, p) && ord > 1 && !syl.group().contains(g)) {
        syl.absorb(g);
        grew = true;
        break;
      }
    }
    if (!grew)
      throw error("sylow_subgroup: ascent stalled (internal error)");
  }
  return syl.take();
}

bool has_normal_p_complement(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("has_normal_p_complement: p must be prime");
  const std::uint64_t target = p_prime_part(G.order(), p);
  GrowingGroup comp(G.degree());
  for (const Permutation& g : G.elements()) {
    if (g.order() % p != 0) comp.absorb(g);
  }
  return comp.group().order() == target;
}

PermGroup subgroup_generated(const PermGroup& G, const std::vector<Permutation>& elems) {
  for (const Permutation& g : elems)
    if (!G.contains(g)) throw domain_error("subgroup_generated: element is not in the group");
  return PermGroup(G.degree(), elems);
}

bool is_normal(const PermGroup& G, const PermGroup& H) {
  if (!G.contains(H)) throw domain_error("is_normal: H is not a subgroup of G");
  for (const Permutation& g : G.generators())
    for (const Permutation& h : H.generators())
      if (!H.contains(h.conjugated_by(g))) return false;
  return true;
}

PermGroup centralizer_of_subgroup(const PermGroup& G, const PermGroup& H) {
  if (!G.contains(H)) throw domain_error("centralizer_of_subgroup: H is not a subgroup of G");
  GrowingGroup cent(G.degree());
  for (const Permutation& g : G.elements()) {
    bool central = true;
    for (const Permutation& h : H.generators()) {
      if (g * h != h * g) {
        central = false;
        break;
      }
    }
    if (central) cent.absorb(g);
  }
  return cent.take();
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& elems) {
  for (const Permutation& g : elems)
    if (!G.contains(g)) throw domain_error("normal_closure: element is not in the group");
  GrowingGroup closure(G.degree());
  std::deque<Permutation> todo(elems.begin(), elems.end());
  while (!todo.empty()) {
    Permutation x = std::move(todo.front());
    todo.pop_front();
    if (!closure.absorb(x)) continue;
    for (const Permutation& g : G.generators()) todo.push_back(x.conjugated_by(g));
  }
  return closure.take();
}

PermGroup core_p_prime(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("core_p_prime: p must be prime");
  ConjugacyClasses classes = conjugacy_classes(G);
  std::vector<Permutation> gens;
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const Permutation& x = classes.rep(static_cast<int>(c));
    if (x.order() % p == 0) continue;
    PermGroup closure = normal_closure(G, {x});
    if (closure.order() % p != 0) gens.push_back(x);
  }
  return PermGroup(G.degree(), std::move(gens));
}

PermGroup derived_subgroup(const PermGroup& G) {
  std::vector<Permutation> commutators;
  const auto& gens = G.generators();
  for (const Permutation& a : gens)
    for (const Permutation& b : gens)
      commutators.push_back(a.inverse() * b.inverse() * a * b);
  return normal_closure(G, commutators);
}

bool is_solvable(const PermGroup& G) {
  PermGroup current = G;
  while (!current.is_trivial()) {
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

bool is_cyclic(const PermGroup& G) {
  if (!G.is_abelian()) return false;
  for (const Permutation& g : G.elements())
    if (g.order() == G.order()) return true;
  return false;
}

PermGroup intersection(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree()) throw domain_error("intersection: degree mismatch");
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& large = A.order() <= B.order() ? B : A;
  GrowingGroup meet(A.degree());
  for (const Permutation& g : small.elements())
    if (large.contains(g)) meet.absorb(g);
  return meet.take();
}

std::vector<PermGroup> all_normal_subgroups(const PermGroup& G) {
  ConjugacyClasses classes = conjugacy_classes(G);

  // A normal subgroup is a union of classes, so the set of contained class
  // representatives is a perfect dedup key.
  auto class_key = [&](const PermGroup& N) {
    std::string key(classes.count(), '0');
    for (std::size_t c = 0; c < classes.count(); ++c)
      if (N.contains(classes.rep(static_cast<int>(c)))) key[c] = '1';
    return key;
  };

  // Atoms: normal closures of single classes.
  std::vector<PermGroup> atoms;
  {
    std::map<std::string, bool> seen;
    for (std::size_t c = 1; c < classes.count(); ++c) {
      PermGroup closure = normal_closure(G, {classes.rep(static_cast<int>(c))});
      std::string key = class_key(closure);
      if (seen.emplace(std::move(key), true).second) atoms.push_back(std::move(closure));
    }
  }

  std::map<std::string, PermGroup> normals;
  normals.emplace(class_key(PermGroup(G.degree())), PermGroup(G.degree()));
  std::deque<PermGroup> work;
  for (const PermGroup& atom : atoms) {
    std::string key = class_key(atom);
    if (!normals.contains(key)) {
      work.push_back(atom);
      normals.emplace(std::move(key), atom);
    }
  }
  while (!work.empty()) {
    PermGroup current = std::move(work.front());
    work.pop_front();
    for (const PermGroup& atom : atoms) {
      if (current.contains(atom)) continue;
      std::vector<Permutation> gens = current.generators();
      gens.insert(gens.end(), atom.generators().begin(), atom.generators().end());
      PermGroup join(G.degree(), std::move(gens));
      std::string key = class_key(join);
      if (!normals.contains(key)) {
        work.push_back(join);
        normals.emplace(std::move(key), std::move(join));
      }
      if (normals.size() > 20000)
        throw capacity_error("all_normal_subgroups: lattice too large");
    }
  }

  std::vector<PermGroup> out;
  out.reserve(normals.size());
  for (auto& [key, group] : normals) out.push_back(std::move(group));
  std::stable_sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    return a.order() < b.order();
  });
  return out;
}

std::uint64_t group_exponent(const ConjugacyClasses& classes) {
  std::uint64_t e = 1;
  for (std::size_t c = 0; c < classes.count(); ++c)
    e = std::lcm(e, classes.rep(static_cast<int>(c)).order());
  return e;
}

} // namespace blockscope
