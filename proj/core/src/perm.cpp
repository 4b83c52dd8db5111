#include "blockscope/perm.hpp"

#include "blockscope/errors.hpp"

#include <numeric>
#include <string>

namespace blockscope {

Permutation::Permutation(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned img : images_) {
    if (img >= images_.size() || seen[img])
      throw input_error("permutation images are not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::from_cycles(unsigned degree,
                                     const std::vector<std::vector<unsigned>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<unsigned> step(degree);
    std::iota(step.begin(), step.end(), 0u);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      unsigned from = cycle[i];
      unsigned to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw input_error("cycle point " + std::to_string(from) + " exceeds degree");
      step[from] = to;
    }
    result = result * Permutation(std::move(step));
  }
  return result;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw domain_error("composing permutations of different degree");
  std::vector<unsigned> out(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> out(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) out[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  if (degree() != g.degree()) throw domain_error("conjugating by permutation of different degree");
  // (g^-1 * x * g)[p] = g[x[g^-1[p]]]; build directly to avoid temporaries.
  std::vector<unsigned> out(images_.size());
  for (unsigned p = 0; p < images_.size(); ++p) out[g.images_[p]] = g.images_[images_[p]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<unsigned> cycle;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      cycle.push_back(j);
      j = images_[j];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t PermHash::operator()(const Permutation& p) const {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (unsigned img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace blockscope
