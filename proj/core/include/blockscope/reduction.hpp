#pragma once

#include "blockscope/cyclotomic.hpp"
#include "blockscope/finite_field.hpp"

#include <cstdint>
#include <vector>

namespace blockscope {

/// The reduction of Z[zeta_n] (localized away from p) modulo a fixed maximal
/// ideal over p: p-power roots of unity map to 1 and zeta_m maps to a fixed
/// primitive m-th root of unity in F_{p^f}, where n = p^a * m with p not
/// dividing m and f is the order of p mod m.  Coefficients may have
/// p'-denominators, which reduce through modular inversion.
class ReductionMap {
public:
  ReductionMap(std::uint64_t p, std::uint64_t n);

  std::uint64_t p() const { return p_; }
  std::uint64_t n() const { return n_; }
  std::uint64_t m() const { return m_; }
  const FiniteField& field() const { return field_; }
  const FiniteField::Elem& zeta_image() const { return zeta_image_; }

  /// Requires the value's conductor to divide n and every coefficient
  /// denominator to be coprime to p; throws arithmetic_error otherwise.
  FiniteField::Elem reduce(const Cyclotomic& x) const;

private:
  std::uint64_t p_;
  std::uint64_t n_;
  std::uint64_t m_;
  std::uint64_t pa_; // p-part of n
  std::uint64_t pa_inv_mod_m_;
  FiniteField field_;
  FiniteField::Elem zeta_image_;
  std::vector<FiniteField::Elem> zeta_powers_; // zeta_image^j for j in [0, m)
};

} // namespace blockscope
