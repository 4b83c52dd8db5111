#pragma once

#include "blockscope/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace blockscope {

/// F_{p^f} as F_p[x] modulo a deterministically chosen monic irreducible of
/// degree f (the first one found when enumerating constant coefficient
/// vectors as base-p digit strings of an increasing counter).  Elements are
/// coefficient vectors of length f.
class FiniteField {
public:
  using Elem = std::vector<std::uint32_t>;

  FiniteField(std::uint64_t p, unsigned f);

  std::uint64_t p() const { return p_; }
  unsigned f() const { return f_; }

  /// Full modulus polynomial x^f + c_{f-1} x^{f-1} + ... + c_0 as the vector
  /// (c_0, ..., c_{f-1}).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem(f_, 0); }
  Elem one() const;
  Elem from_int(std::uint64_t v) const;

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem base, Int exponent) const; // exponent >= 0

  /// Number of elements as a big integer.
  Int size() const;

  std::string encode(const Elem& a) const;

private:
  std::uint64_t p_ = 2;
  unsigned f_ = 1;
  std::vector<std::uint32_t> modulus_;
};

} // namespace blockscope
