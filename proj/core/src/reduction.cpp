#include "blockscope/reduction.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"

#include <numeric>
#include <string>

namespace blockscope {

namespace {

FiniteField make_field(std::uint64_t p, std::uint64_t m) {
  unsigned f = m == 1 ? 1u : static_cast<unsigned>(multiplicative_order(p % m, m));
  return FiniteField(p, f);
}

} // namespace

ReductionMap::ReductionMap(std::uint64_t p, std::uint64_t n)
    : p_(p), n_(n), m_(p_prime_part(n, p)), pa_(p_part(n, p)), field_(make_field(p, m_)) {
  if (!is_prime(p)) throw input_error("ReductionMap: p must be prime");
  if (n == 0) throw input_error("ReductionMap: n must be positive");
  pa_inv_mod_m_ = m_ == 1 ? 0 : inverse_mod(pa_ % m_, m_);

  // Pick the m-th roots of unity in the field: the set {w0^j} for any element
  // w0 of exact order m.  Among the primitive ones, keep the one with the
  // least encoding, so the choice is reproducible.
  if (m_ == 1) {
    zeta_image_ = field_.one();
  } else {
    Int cofactor = (field_.size() - 1) / Int(m_);
    auto primes_m = prime_divisors(m_);
    FiniteField::Elem w0;
    bool found = false;
    Int counter = 1;
    while (!found) {
      // Field elements enumerated as base-p digit strings of the counter.
      FiniteField::Elem x(field_.f(), 0);
      Int rest = counter;
      for (unsigned i = 0; i < field_.f(); ++i) {
        x[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rest % Int(p_)));
        rest /= Int(p_);
      }
      ++counter;
      if (counter > field_.size())
        throw error("ReductionMap: no m-th root of unity found (internal error)");
      if (field_.is_zero(x)) continue;
      FiniteField::Elem w = field_.pow(x, cofactor);
      bool exact = !field_.is_one(w);
      for (std::uint64_t r : primes_m)
        if (exact && field_.is_one(field_.pow(w, Int(m_ / r)))) exact = false;
      if (exact) {
        w0 = w;
        found = true;
      }
    }
    FiniteField::Elem best;
    FiniteField::Elem wj = field_.one();
    std::string best_key;
    for (std::uint64_t j = 1; j < m_; ++j) {
      wj = field_.mul(wj, w0);
      if (std::gcd(j, m_) != 1) continue;
      std::string key = field_.encode(wj);
      if (best_key.empty() || key < best_key) {
        best_key = key;
        best = wj;
      }
    }
    zeta_image_ = best;
  }

  zeta_powers_.resize(m_);
  zeta_powers_[0] = field_.one();
  for (std::uint64_t j = 1; j < m_; ++j)
    zeta_powers_[j] = field_.mul(zeta_powers_[j - 1], zeta_image_);
}

FiniteField::Elem ReductionMap::reduce(const Cyclotomic& x) const {
  if (n_ % x.conductor() != 0)
    throw arithmetic_error("reduce: value conductor does not divide the map's n");
  const std::uint64_t scale = n_ / x.conductor();
  FiniteField::Elem acc = field_.zero();
  for (const auto& [k, c] : x.terms()) {
    Int den = rat_den(c);
    Int den_mod = den % Int(p_);
    if (den_mod == 0)
      throw arithmetic_error("reduce: coefficient " + rational_to_string(c) +
                             " is not integral at p = " + std::to_string(p_));
    Int num_mod = rat_num(c) % Int(p_);
    if (num_mod < 0) num_mod += Int(p_);
    std::uint64_t scalar = static_cast<std::uint64_t>(num_mod) *
                           inverse_mod(static_cast<std::uint64_t>(den_mod), p_) % p_;
    if (scalar == 0) continue;
    // zeta_n^k = zeta_{p^a}^{u k} * zeta_m^{v k} with v = (p^a)^-1 mod m; the
    // p-power factor reduces to 1.
    std::uint64_t j = m_ == 1 ? 0
                              : static_cast<std::uint64_t>(
                                    (unsigned __int128)(k * scale % m_) * pa_inv_mod_m_ % m_);
    FiniteField::Elem term = zeta_powers_[j];
    for (auto& coeff : term)
      coeff = static_cast<std::uint32_t>((std::uint64_t)coeff * scalar % p_);
    acc = field_.add(acc, term);
  }
  return acc;
}

} // namespace blockscope
