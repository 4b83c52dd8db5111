#include "blockscope/quotient.hpp"

#include "blockscope/errors.hpp"

namespace blockscope {

Permutation QuotientMap::forward(const Permutation& g) const {
  if (identity_map_) {
    if (!source_.contains(g)) throw domain_error("forward: element is not in the source");
    return g;
  }
  auto it = coset_index_.find(g);
  if (it == coset_index_.end()) throw domain_error("forward: element is not in the source");
  const unsigned n = static_cast<unsigned>(coset_reps_.size());
  std::vector<unsigned> images(n);
  for (unsigned c = 0; c < n; ++c) images[c] = coset_index_.at(coset_reps_[c] * g);
  return Permutation(std::move(images));
}

QuotientMap quotient(const PermGroup& G, const PermGroup& N) {
  if (!is_normal(G, N)) throw domain_error("quotient: kernel is not normal in the source");

  QuotientMap q;
  q.source_ = G;
  q.kernel_ = N;
  if (N.is_trivial()) {
    q.identity_map_ = true;
    q.image_ = G;
    return q;
  }

  const auto elems = enumerate_elements(G);
  const auto kernel_elems = N.elements();

  // Right cosets Ng, labelled in order of their least member; since elements
  // are scanned in lexicographic order, the first unassigned element of a
  // coset is exactly its least member.
  std::vector<int> coset_of(elems->sorted.size(), -1);
  for (std::size_t i = 0; i < elems->sorted.size(); ++i) {
    if (coset_of[i] != -1) continue;
    const unsigned c = static_cast<unsigned>(q.coset_reps_.size());
    q.coset_reps_.push_back(elems->sorted[i]);
    for (const Permutation& n : kernel_elems) {
      int idx = elems->index_of.at(n * elems->sorted[i]);
      coset_of[idx] = static_cast<int>(c);
    }
  }
  for (std::size_t i = 0; i < elems->sorted.size(); ++i)
    q.coset_index_.emplace(elems->sorted[i], static_cast<unsigned>(coset_of[i]));

  const unsigned n_cosets = static_cast<unsigned>(q.coset_reps_.size());
  std::vector<Permutation> image_gens;
  for (const Permutation& g : G.generators()) {
    std::vector<unsigned> images(n_cosets);
    for (unsigned c = 0; c < n_cosets; ++c)
      images[c] = q.coset_index_.at(q.coset_reps_[c] * g);
    image_gens.emplace_back(std::move(images));
  }
  q.image_ = PermGroup(n_cosets, std::move(image_gens));
  if (q.image_.order() * N.order() != G.order())
    throw error("quotient: |image| * |kernel| != |source| (internal error)");
  return q;
}

} // namespace blockscope
