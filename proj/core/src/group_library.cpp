#include "blockscope/group_library.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/group_ops.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace blockscope {

PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw input_error("cyclic_group: n must be positive");
  if (n == 1) return PermGroup(1);
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(std::move(images))});
}

PermGroup abelian_group(const std::vector<unsigned>& factors) {
  PermGroup result(1);
  for (unsigned f : factors) result = direct_product(result, cyclic_group(f));
  return result;
}

PermGroup dihedral_group(unsigned n) {
  if (n < 3) throw input_error("dihedral_group: n must be at least 3");
  std::vector<unsigned> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup dicyclic_group(unsigned n) {
  if (n < 2) throw input_error("dicyclic_group: n must be at least 2");
  const unsigned two_n = 2 * n;
  // Points are a^i b^eps, indexed i + 2n*eps; generators act by right
  // translation: (a^i b) a = a^(i-1) b and (a^i b) b = a^(i+n).
  std::vector<unsigned> ra(4 * n), rb(4 * n);
  for (unsigned i = 0; i < two_n; ++i) {
    ra[i] = (i + 1) % two_n;
    ra[two_n + i] = two_n + (i + two_n - 1) % two_n;
    rb[i] = two_n + i;
    rb[two_n + i] = (i + n) % two_n;
  }
  return PermGroup(4 * n, {Permutation(std::move(ra)), Permutation(std::move(rb))});
}

PermGroup symmetric_group(unsigned n) {
  if (n == 0) throw input_error("symmetric_group: n must be positive");
  if (n == 1) return PermGroup(1);
  std::vector<std::vector<unsigned>> ncycle{{}};
  for (unsigned i = 0; i < n; ++i) ncycle[0].push_back(i);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}),
                       Permutation::from_cycles(n, ncycle)});
}

PermGroup alternating_group(unsigned n) {
  if (n == 0) throw input_error("alternating_group: n must be positive");
  if (n <= 2) return PermGroup(std::max(1u, n));
  if (n == 3) return PermGroup(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  std::vector<unsigned> cycle;
  for (unsigned i = (n % 2 == 0 ? 1u : 0u); i < n; ++i) cycle.push_back(i);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1, 2}}),
                       Permutation::from_cycles(n, {cycle})});
}

PermGroup metacyclic_group(unsigned m, unsigned k, unsigned a) {
  if (m == 0 || k == 0) throw input_error("metacyclic_group: orders must be positive");
  a %= m;
  if (std::gcd<unsigned>(a, m) != 1 || pow_mod(a, k, m) != 1 % m)
    throw input_error("metacyclic_group: a must be a unit with a^k = 1 mod m");
  const unsigned degree = m + k;
  std::vector<unsigned> c(degree), t(degree);
  std::iota(c.begin(), c.end(), 0u);
  std::iota(t.begin(), t.end(), 0u);
  for (unsigned i = 0; i < m; ++i) {
    c[i] = (i + 1) % m;
    t[i] = static_cast<unsigned>((static_cast<std::uint64_t>(a) * i) % m);
  }
  for (unsigned j = 0; j < k; ++j) t[m + j] = m + (j + 1) % k;
  return PermGroup(degree, {Permutation(std::move(c)), Permutation(std::move(t))});
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  const unsigned degree = A.degree() + B.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : A.generators()) {
    std::vector<unsigned> images(degree);
    for (unsigned i = 0; i < A.degree(); ++i) images[i] = g[i];
    for (unsigned i = 0; i < B.degree(); ++i) images[A.degree() + i] = A.degree() + i;
    gens.emplace_back(std::move(images));
  }
  for (const Permutation& g : B.generators()) {
    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.begin() + A.degree(), 0u);
    for (unsigned i = 0; i < B.degree(); ++i) images[A.degree() + i] = A.degree() + g[i];
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup heisenberg3() {
  // Points (i,j) on the 3x3 grid; a shifts rows, b shears columns by the row.
  std::vector<unsigned> a(9), b(9);
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      a[3 * i + j] = 3 * ((i + 1) % 3) + j;
      b[3 * i + j] = 3 * i + (j + i) % 3;
    }
  }
  return PermGroup(9, {Permutation(std::move(a)), Permutation(std::move(b))});
}

PermGroup psl_2_7() {
  // Projective line over F_7 with infinity as point 7: z -> z+1 and z -> -1/z.
  Permutation shift = Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6}});
  Permutation inv = Permutation::from_cycles(8, {{7, 0}, {1, 6}, {2, 3}, {4, 5}});
  return PermGroup(8, {shift, inv});
}

std::vector<ElementMap> all_automorphisms(const PermGroup& A) {
  if (A.order() > 200) throw capacity_error("all_automorphisms: group too large");
  const auto elems = enumerate_elements(A);
  const auto& sorted = elems->sorted;
  const int n = static_cast<int>(sorted.size());

  // Greedy minimal-ish generating sequence over the sorted elements.
  std::vector<int> gen_idx;
  {
    PermGroup partial(A.degree());
    for (int i = 0; i < n && partial.order() < A.order(); ++i) {
      if (partial.contains(sorted[i])) continue;
      std::vector<Permutation> gens = partial.generators();
      gens.push_back(sorted[i]);
      partial = PermGroup(A.degree(), std::move(gens));
      gen_idx.push_back(i);
    }
  }

  // Edges of the Cayley graph: products element * generator as indices.
  std::vector<std::vector<int>> edge(gen_idx.size(), std::vector<int>(n));
  for (std::size_t g = 0; g < gen_idx.size(); ++g)
    for (int i = 0; i < n; ++i)
      edge[g][i] = elems->index_of.at(sorted[i] * sorted[gen_idx[g]]);

  std::vector<std::uint64_t> order_of(n);
  for (int i = 0; i < n; ++i) order_of[i] = sorted[i].order();

  // Candidate images per generator, filtered by element order.
  std::vector<std::vector<int>> candidates(gen_idx.size());
  for (std::size_t g = 0; g < gen_idx.size(); ++g)
    for (int i = 0; i < n; ++i)
      if (order_of[i] == order_of[gen_idx[g]]) candidates[g].push_back(i);

  const int id_idx = elems->index_of.at(A.identity());

  std::vector<ElementMap> autos;
  std::vector<int> pick(gen_idx.size(), 0);
  std::vector<int> image(n);

  auto try_current = [&]() {
    // Extend gen images over the Cayley graph; reject on any inconsistency.
    std::fill(image.begin(), image.end(), -1);
    image[id_idx] = id_idx;
    std::vector<int> queue{id_idx};
    std::vector<char> hit(n, 0);
    hit[id_idx] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int e = queue[head];
      for (std::size_t g = 0; g < gen_idx.size(); ++g) {
        int target = edge[g][e];
        int img = elems->index_of.at(sorted[image[e]] * sorted[candidates[g][pick[g]]]);
        if (image[target] == -1) {
          image[target] = img;
          if (!hit[target]) {
            hit[target] = 1;
            queue.push_back(target);
          }
        } else if (image[target] != img) {
          return false;
        }
      }
    }
    if (queue.size() != static_cast<std::size_t>(n)) return false;
    // Bijectivity, then the full edge check (which implies multiplicativity).
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (seen[image[i]]) return false;
      seen[image[i]] = 1;
    }
    for (std::size_t g = 0; g < gen_idx.size(); ++g) {
      int y = candidates[g][pick[g]];
      for (int i = 0; i < n; ++i)
        if (image[edge[g][i]] != elems->index_of.at(sorted[image[i]] * sorted[y]))
          return false;
    }
    return true;
  };

  // Odometer over candidate tuples.
  while (true) {
    if (try_current()) autos.push_back(image);
    std::size_t g = 0;
    while (g < gen_idx.size()) {
      if (++pick[g] < static_cast<int>(candidates[g].size())) break;
      pick[g] = 0;
      ++g;
    }
    if (g == gen_idx.size()) break;
  }
  return autos;
}

PermGroup semidirect_product(const PermGroup& A, const PermGroup& B,
                             const std::vector<ElementMap>& action_of_b_gens) {
  if (action_of_b_gens.size() != B.generators().size())
    throw domain_error("semidirect_product: one automorphism per generator of B required");
  const auto elems = enumerate_elements(A);
  const unsigned na = static_cast<unsigned>(elems->sorted.size());
  const unsigned degree = na + B.degree();

  std::vector<Permutation> gens;
  for (const Permutation& a : A.generators()) {
    std::vector<unsigned> images(degree);
    for (unsigned i = 0; i < na; ++i)
      images[i] = static_cast<unsigned>(elems->index_of.at(elems->sorted[i] * a));
    for (unsigned i = 0; i < B.degree(); ++i) images[na + i] = na + i;
    gens.emplace_back(std::move(images));
  }
  for (std::size_t g = 0; g < action_of_b_gens.size(); ++g) {
    const ElementMap& alpha = action_of_b_gens[g];
    if (alpha.size() != na) throw domain_error("semidirect_product: automorphism size mismatch");
    std::vector<unsigned> images(degree);
    for (unsigned i = 0; i < na; ++i) images[i] = static_cast<unsigned>(alpha[i]);
    const Permutation& b = B.generators()[g];
    for (unsigned i = 0; i < B.degree(); ++i) images[na + i] = na + b[i];
    gens.emplace_back(std::move(images));
  }
  PermGroup result(degree, std::move(gens));
  if (result.order() != A.order() * B.order())
    throw domain_error("semidirect_product: action does not define a homomorphism (order " +
                       std::to_string(result.order()) + " != " +
                       std::to_string(A.order() * B.order()) + ")");
  return result;
}

PermGroup smallgroup_216_158() {
  // The catalog group of order 216 with elementary abelian Sylow 3-subgroup
  // and quaternion complement acting through its faithful two-dimensional
  // symplectic representation plus the sign character.  Frozen from the
  // deterministic construction in tools/corpusgen (points are the elements of
  // C3^3, the complement acts by automorphisms).
  using C = std::vector<std::vector<unsigned>>;
  const C t1{{0, 9, 18}, {1, 10, 19}, {2, 11, 20}, {3, 12, 21}, {4, 13, 22},
             {5, 14, 23}, {6, 15, 24}, {7, 16, 25}, {8, 17, 26}};
  const C t2{{0, 3, 6},    {1, 4, 7},    {2, 5, 8},    {9, 12, 15},  {10, 13, 16},
             {11, 14, 17}, {18, 21, 24}, {19, 22, 25}, {20, 23, 26}};
  const C t3{{0, 1, 2},    {3, 4, 5},    {6, 7, 8},    {9, 10, 11},  {12, 13, 14},
             {15, 16, 17}, {18, 19, 20}, {21, 22, 23}, {24, 25, 26}};
  const C q1{{3, 12, 6, 24},  {4, 13, 7, 25},  {5, 14, 8, 26},
             {9, 21, 18, 15}, {10, 22, 19, 16}, {11, 23, 20, 17}};
  const C q2{{1, 2},          {3, 9, 6, 18},   {4, 11, 7, 20},  {5, 10, 8, 19},
             {12, 15, 24, 21}, {13, 17, 25, 23}, {14, 16, 26, 22}};
  return PermGroup(27, {Permutation::from_cycles(27, t1), Permutation::from_cycles(27, t2),
                        Permutation::from_cycles(27, t3), Permutation::from_cycles(27, q1),
                        Permutation::from_cycles(27, q2)});
}

} // namespace blockscope
