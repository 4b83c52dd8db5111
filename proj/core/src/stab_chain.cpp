#include "blockscope/stab_chain.hpp"

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

unsigned first_moved_point(const Permutation& g) {
  for (unsigned i = 0; i < g.degree(); ++i)
    if (g[i] != i) return i;
  throw domain_error("identity permutation has no moved point");
}

} // namespace

StabChain::StabChain(unsigned degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree_) throw domain_error("generator degree mismatch");
    if (!g.is_identity()) sift_in(g);
  }
  close();
}

void StabChain::append_level(unsigned base_point) {
  Level level;
  level.base_point = base_point;
  level.orbit.push_back(base_point);
  level.transversal.emplace(base_point, Permutation(degree_));
  level.processed.push_back(0);
  base_.push_back(base_point);
  levels_.push_back(std::move(level));
}

bool StabChain::sift_in(Permutation g) {
  std::size_t j = 0;
  while (!g.is_identity()) {
    if (j == levels_.size()) append_level(first_moved_point(g));
    Level& level = levels_[j];
    const unsigned img = g[level.base_point];
    auto it = level.transversal.find(img);
    if (it == level.transversal.end()) {
      // g fixes bases 0..j-1 and moves base j: active at levels 0..j.
      const std::size_t idx = sgens_.size();
      sgens_.push_back(std::move(g));
      for (std::size_t l = 0; l <= j; ++l) levels_[l].gens.push_back(idx);
      return true;
    }
    g = g * it->second.inverse();
    ++j;
  }
  return false;
}

// Processes levels bottom-up; when level i is worked on, all deeper levels
// are complete, so a residue that fails to sift strictly enlarges the group
// known below level i.  That bounds the number of insertIons.
void StabChain::close() {
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    if (expand_orbit(static_cast<std::size_t>(i)))
      i = static_cast<long>(levels_.size()) - 1;
    else
      --i;
  }
}

bool StabChain::expand_orbit(std::size_t li) {
  for (std::size_t pos = 0; pos < levels_[li].orbit.size(); ++pos) {
    const unsigned p = levels_[li].orbit[pos];
    for (std::size_t s = levels_[li].processed[pos]; s < levels_[li].gens.size(); ++s) {
      const Permutation& gen = sgens_[levels_[li].gens[s]];
      const unsigned q = gen[p];
      if (!levels_[li].transversal.contains(q)) {
        Permutation u = levels_[li].transversal.at(p) * gen;
        levels_[li].transversal.emplace(q, std::move(u));
        levels_[li].orbit.push_back(q);
        levels_[li].processed.push_back(0);
      }
      Permutation schreier =
          levels_[li].transversal.at(p) * gen * levels_[li].transversal.at(q).inverse();
      levels_[li].processed[pos] = s + 1;
      if (!schreier.is_identity()) {
        // The Schreier generator fixes bases 0..li, so sift from li+1 down.
        std::size_t j = li + 1;
        Permutation g = std::move(schreier);
        bool added = false;
        while (!g.is_identity()) {
          if (j == levels_.size()) append_level(first_moved_point(g));
          Level& deeper = levels_[j];
          const unsigned img = g[deeper.base_point];
          auto it = deeper.transversal.find(img);
          if (it == deeper.transversal.end()) {
            const std::size_t idx = sgens_.size();
            sgens_.push_back(std::move(g));
            for (std::size_t l = 0; l <= j; ++l) levels_[l].gens.push_back(idx);
            added = true;
            break;
          }
          g = g * it->second.inverse();
          ++j;
        }
        if (added) return true;
      }
    }
  }
  return false;
}

std::uint64_t StabChain::order() const {
  unsigned __int128 ord = 1;
  for (const Level& level : levels_) {
    ord *= level.orbit.size();
    if (ord > static_cast<unsigned __int128>(UINT64_MAX))
      throw capacity_error("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(ord);
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  Permutation h = g;
  for (const Level& level : levels_) {
    if (h.is_identity()) return true;
    auto it = level.transversal.find(h[level.base_point]);
    if (it == level.transversal.end()) return false;
    h = h * it->second.inverse();
  }
  return h.is_identity();
}

std::vector<Permutation> StabChain::transversal(std::size_t level) const {
  std::vector<Permutation> out;
  out.reserve(levels_[level].orbit.size());
  for (unsigned p : levels_[level].orbit) out.push_back(levels_[level].transversal.at(p));
  return out;
}

} // namespace blockscope
