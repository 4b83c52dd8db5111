#include "blockscope/character_table.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <cmath>
#include <string>

// Dixon-Schneider: split the class-sum matrices over F_ell (ell = 1 mod
// exponent, ell > 2*sqrt(|G|)) into common one-dimensional eigenspaces, read
// off the reduced central characters, then lift the character values through
// the discrete Fourier inversion over the power maps.

namespace blockscope::detail {

namespace {

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t ell) { return inverse_mod(a % ell, ell); }

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, std::uint64_t ell) {
  std::vector<int> pivots;
  std::size_t row = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const std::uint64_t inv = mod_inv(m[row][col], ell);
    for (auto& x : m[row]) x = x * inv % ell;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint64_t factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c)
        m[r][c] = (m[r][c] + (ell - factor) * m[row][c]) % ell;
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Nullspace basis (column vectors) of a square matrix.
std::vector<Row> nullspace(Matrix m, std::uint64_t ell) {
  const std::size_t n = m.size();
  std::vector<int> pivots = rref(m, ell);
  std::vector<char> is_pivot(n, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (ell - m[r][free] % ell) % ell;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction (valid for any field
// size, unlike interpolation).  Returns coefficients of det(xI - M), degree
// ascending.
Row char_poly(Matrix m, std::uint64_t ell) {
  const std::size_t n = m.size();
  // Similarity reduction to upper Hessenberg with pivoting.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t pivot = col + 1;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      std::swap(m[pivot], m[col + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(m[r][pivot], m[r][col + 1]);
    }
    const std::uint64_t inv = mod_inv(m[col + 1][col], ell);
    for (std::size_t r = col + 2; r < n; ++r) {
      const std::uint64_t factor = m[r][col] * inv % ell;
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        m[r][c] = (m[r][c] + (ell - factor) * m[col + 1][c]) % ell;
      for (std::size_t r2 = 0; r2 < n; ++r2)
        m[r2][col + 1] = (m[r2][col + 1] + factor * m[r2][r]) % ell;
    }
  }
  // p_t = (x - H[t-1][t-1]) p_{t-1} - sum_i H[i][t-1] (prod subdiagonals) p_i
  std::vector<Row> p(n + 1);
  p[0] = {1};
  for (std::size_t t = 1; t <= n; ++t) {
    Row cur(t + 1, 0);
    const std::uint64_t diag = m[t - 1][t - 1] % ell;
    for (std::size_t d = 0; d < p[t - 1].size(); ++d) {
      cur[d + 1] = (cur[d + 1] + p[t - 1][d]) % ell;
      cur[d] = (cur[d] + (ell - diag) * p[t - 1][d]) % ell;
    }
    std::uint64_t sub_prod = 1;
    for (std::size_t i = t - 1; i-- > 0;) {
      sub_prod = sub_prod * (m[i + 1][i] % ell) % ell;
      if (sub_prod == 0) break;
      const std::uint64_t coeff = m[i][t - 1] % ell * sub_prod % ell;
      if (coeff == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d)
        cur[d] = (cur[d] + (ell - coeff) * p[i][d]) % ell;
    }
    p[t] = std::move(cur);
  }
  return p[n];
}

std::uint64_t eval_poly(const Row& poly, std::uint64_t x, std::uint64_t ell) {
  std::uint64_t acc = 0;
  for (std::size_t d = poly.size(); d-- > 0;) acc = (acc * x + poly[d]) % ell;
  return acc;
}

struct Subspace {
  std::vector<Row> basis; // RREF rows, each a vector in class coordinates
  std::vector<int> pivots;
};

} // namespace

std::vector<std::vector<Cyclotomic>> dixon_irreducibles(const ClassData& data) {
  const std::size_t k = data.sizes.size();
  const std::uint64_t order = data.group_order;
  const std::uint64_t e = data.exponent;

  // Working prime.
  const std::uint64_t bound = 2 * static_cast<std::uint64_t>(std::ceil(std::sqrt((double)order)));
  std::uint64_t ell = e + 1;
  while (ell <= bound || !is_prime(ell)) ell += e;

  // Primitive e-th root of unity mod ell.
  std::uint64_t zeta_e = 1;
  {
    auto e_primes = prime_divisors(e);
    for (std::uint64_t x = 2; x < ell; ++x) {
      std::uint64_t cand = pow_mod(x, (ell - 1) / e, ell);
      if (cand == 1 && e > 1) continue;
      bool exact = true;
      for (std::uint64_t q : e_primes)
        if (pow_mod(cand, e / q, ell) == 1) {
          exact = false;
          break;
        }
      if (exact) {
        zeta_e = cand;
        break;
      }
    }
  }

  const auto& elements = data.classes.elements->sorted;

  auto class_matrix = [&](std::size_t i) {
    Matrix a(k, Row(k, 0));
    std::vector<Permutation> inverses;
    inverses.reserve(data.classes.members[i].size());
    for (int idx : data.classes.members[i]) inverses.push_back(elements[idx].inverse());
    for (std::size_t col = 0; col < k; ++col) {
      const Permutation& target = data.classes.rep(static_cast<int>(col));
      for (const Permutation& xinv : inverses) {
        int j = data.classes.class_of(xinv * target);
        ++a[j][col];
      }
    }
    for (auto& row : a)
      for (auto& x : row) x %= ell;
    return a;
  };

  // Start from the full space and split until one-dimensional.
  std::vector<Subspace> spaces;
  {
    Subspace full;
    full.basis.assign(k, Row(k, 0));
    for (std::size_t i = 0; i < k; ++i) full.basis[i][i] = 1;
    for (std::size_t i = 0; i < k; ++i) full.pivots.push_back(static_cast<int>(i));
    spaces.push_back(std::move(full));
  }

  for (std::size_t i = 1; i < k; ++i) {
    bool split_needed = false;
    for (const Subspace& s : spaces)
      if (s.basis.size() > 1) split_needed = true;
    if (!split_needed) break;

    const Matrix a = class_matrix(i);
    std::vector<Subspace> next;
    for (Subspace& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Restriction matrix B: column r = coordinates of A * basis_r.
      std::vector<Row> images(d, Row(k, 0));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t row = 0; row < k; ++row) {
          std::uint64_t acc = 0;
          for (std::size_t col = 0; col < k; ++col) {
            if (a[row][col] == 0 || s.basis[r][col] == 0) continue;
            acc = (acc + a[row][col] * s.basis[r][col]) % ell;
          }
          images[r][row] = acc;
        }
      Matrix b(d, Row(d, 0));
      for (std::size_t r = 0; r < d; ++r) {
        Row w = images[r];
        for (std::size_t s_idx = 0; s_idx < d; ++s_idx) {
          const std::uint64_t c = w[s.pivots[s_idx]] % ell;
          b[s_idx][r] = c;
          if (c == 0) continue;
          for (std::size_t col = 0; col < k; ++col)
            w[col] = (w[col] + (ell - c) * s.basis[s_idx][col]) % ell;
        }
        for (std::uint64_t x : w)
          if (x % ell != 0) throw error("dixon: subspace is not invariant (internal error)");
      }
      // Scalar restriction: nothing to split.
      bool scalar = true;
      for (std::size_t r = 0; r < d && scalar; ++r)
        for (std::size_t c = 0; c < d && scalar; ++c)
          if (b[r][c] != (r == c ? b[0][0] : 0)) scalar = false;
      if (scalar) {
        next.push_back(std::move(s));
        continue;
      }

      Row poly = char_poly(b, ell);
      std::size_t found_dim = 0;
      for (std::uint64_t lambda = 0; lambda < ell; ++lambda) {
        if (eval_poly(poly, lambda, ell) != 0) continue;
        Matrix shifted = b;
        for (std::size_t r = 0; r < d; ++r) shifted[r][r] = (shifted[r][r] + ell - lambda) % ell;
        std::vector<Row> null = nullspace(std::move(shifted), ell);
        if (null.empty()) continue;
        Subspace child;
        for (const Row& coords : null) {
          Row v(k, 0);
          for (std::size_t r = 0; r < d; ++r) {
            if (coords[r] == 0) continue;
            for (std::size_t col = 0; col < k; ++col)
              v[col] = (v[col] + coords[r] * s.basis[r][col]) % ell;
          }
          child.basis.push_back(std::move(v));
        }
        child.pivots = rref(child.basis, ell);
        found_dim += child.basis.size();
        next.push_back(std::move(child));
      }
      if (found_dim != d) throw error("dixon: eigenspaces do not fill the subspace");
    }
    spaces = std::move(next);
  }

  for (const Subspace& s : spaces)
    if (s.basis.size() != 1) throw error("dixon: splitting finished with dim > 1");

  // Reduced central characters, normalized at the identity class.
  std::vector<Row> omegas;
  omegas.reserve(k);
  for (const Subspace& s : spaces) {
    Row u = s.basis[0];
    if (u[0] == 0) throw error("dixon: eigenvector vanishes at the identity class");
    const std::uint64_t inv = mod_inv(u[0], ell);
    for (auto& x : u) x = x * inv % ell;
    omegas.push_back(std::move(u));
  }

  // Degrees from the orthogonality relation |G| / d^2 = sum_j w_j w_{j*} / h_j.
  const std::uint64_t max_degree = static_cast<std::uint64_t>(std::floor(std::sqrt((double)order)));
  std::vector<std::uint64_t> degrees(k, 0);
  for (std::size_t chi = 0; chi < k; ++chi) {
    std::uint64_t t = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t w = omegas[chi][j];
      const std::uint64_t wstar = omegas[chi][data.inverse_class[j]];
      t = (t + w * wstar % ell * mod_inv(data.sizes[j] % ell, ell)) % ell;
    }
    if (t == 0) throw error("dixon: degree relation degenerate");
    const std::uint64_t target = order % ell * mod_inv(t, ell) % ell;
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
      if (d * d % ell == target) {
        degrees[chi] = d;
        break;
      }
    }
    if (degrees[chi] == 0) throw error("dixon: no degree matches the orthogonality relation");
  }

  // Lift values through the DFT over each class's power map.
  std::vector<std::vector<Cyclotomic>> result(k);
  for (std::size_t chi = 0; chi < k; ++chi) {
    // chi(rep_j) mod ell for all j.
    std::vector<std::uint64_t> chi_mod(k);
    for (std::size_t j = 0; j < k; ++j)
      chi_mod[j] = degrees[chi] % ell * omegas[chi][j] % ell *
                   mod_inv(data.sizes[j] % ell, ell) % ell;
    result[chi].resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t m = data.element_orders[j];
      const std::uint64_t zeta_m = pow_mod(zeta_e, e / m, ell);
      std::vector<std::uint64_t> zeta_pow(m);
      zeta_pow[0] = 1;
      for (std::uint64_t t = 1; t < m; ++t) zeta_pow[t] = zeta_pow[t - 1] * zeta_m % ell;
      const std::uint64_t m_inv = mod_inv(m % ell, ell);
      std::vector<Cyclotomic::Term> terms;
      for (std::uint64_t t = 0; t < m; ++t) {
        std::uint64_t acc = 0;
        for (std::uint64_t s = 0; s < m; ++s) {
          const std::uint64_t minus_ts = (m - t * s % m) % m;
          acc = (acc + chi_mod[data.power_map[j][s]] * zeta_pow[minus_ts]) % ell;
        }
        std::uint64_t c = acc * m_inv % ell;
        if (c == 0) continue;
        if (c > degrees[chi])
          throw error("dixon: lifted multiplicity " + std::to_string(c) + " exceeds the degree");
        terms.emplace_back(t, Rat(static_cast<long long>(c)));
      }
      result[chi][j] = Cyclotomic::from_terms(m, terms);
    }
  }
  return result;
}

} // namespace blockscope::detail
