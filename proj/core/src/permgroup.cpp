#include "blockscope/permgroup.hpp"

#include "blockscope/errors.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace blockscope {

PermGroup::PermGroup(unsigned degree) : PermGroup(degree, {}) {}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators)
    : degree_(degree) {
  if (degree_ == 0) throw input_error("group degree must be at least 1");
  for (const Permutation& g : generators) {
    if (g.degree() != degree_)
      throw input_error("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(degree_));
  }
  // Drop identities and duplicates but keep the caller's order.
  for (Permutation& g : generators) {
    if (g.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
  chain_ = StabChain(degree_, gens_);
  order_ = chain_.order();
}

bool PermGroup::contains(const PermGroup& H) const {
  if (H.degree() != degree_) return false;
  for (const Permutation& g : H.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  return order_ == other.order_ && contains(other);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  if (order_ > limit)
    throw capacity_error("group of order " + std::to_string(order_) +
                         " exceeds the enumeration limit " + std::to_string(limit));
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> frontier{identity()};
  seen.insert(frontier.front());
  std::vector<Permutation> out{frontier.front()};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& g : gens_) {
        Permutation y = x * g;
        if (seen.insert(y).second) {
          out.push_back(y);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup group_from_generators(unsigned degree, const std::vector<Permutation>& gens) {
  return PermGroup(degree, gens);
}

} // namespace blockscope
