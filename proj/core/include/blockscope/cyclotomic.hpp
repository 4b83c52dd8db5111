#pragma once

#include "blockscope/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace blockscope {

/// An exact element of Q(zeta_n), held in a canonical form: the conductor is
/// minimal and the exponents form a tensor-product power basis (for each
/// prime power q^a || n the q-component of the exponent avoids its top
/// digit, eliminated through 1 + zeta_q + ... + zeta_q^{q-1} = 0).  Equality
/// of values is therefore structural equality.
class Cyclotomic {
public:
  using Term = std::pair<std::uint64_t, Rat>; // exponent, coefficient

  Cyclotomic() = default; // zero

  static Cyclotomic from_rational(const Rat& r);
  static Cyclotomic from_int(long long v) { return from_rational(Rat(v)); }

  /// zeta_n^k (k may be negative).
  static Cyclotomic root_of_unity(std::uint64_t n, long long k);

  /// sum of c_k * zeta_n^k over the given terms.
  static Cyclotomic from_terms(std::uint64_t n, const std::vector<Term>& terms);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }

  /// Requires is_rational().
  Rat rational_value() const;

  /// True when all canonical coefficients are integers, i.e. the value lies
  /// in Z[zeta_n].
  bool is_algebraic_integer() const;

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic scaled(const Rat& r) const;

  /// Field inverse via the product of Galois conjugates; throws
  /// arithmetic_error on zero.
  Cyclotomic inverse() const;

  /// Complex conjugate (the Galois action with multiplier -1).
  Cyclotomic conjugate() const;

  bool operator==(const Cyclotomic&) const = default;
  bool operator<(const Cyclotomic& rhs) const;

  /// Canonical text form "n;k:c,k:c,..." usable as an ordering/hash key.
  std::string encode() const;

private:
  std::uint64_t conductor_ = 1;
  std::vector<Term> terms_; // sorted by exponent; canonical

  friend Cyclotomic galois_apply(const struct GaloisAut&, const Cyclotomic&);
  static Cyclotomic canonicalize(std::uint64_t n, std::vector<Term> raw);
  std::vector<Term> lifted_terms(std::uint64_t target_conductor) const;
};

/// The automorphism of Q(zeta_n) sending zeta_n to zeta_n^multiplier.
struct GaloisAut {
  std::uint64_t conductor = 1;
  std::uint64_t multiplier = 1; // coprime to conductor, reduced mod conductor
};

GaloisAut make_galois(std::uint64_t conductor, std::uint64_t multiplier);
GaloisAut compose(const GaloisAut& first, const GaloisAut& second);
GaloisAut conjugation_aut(std::uint64_t conductor);

/// Applies sigma; the value's conductor must divide sigma's.
Cyclotomic galois_apply(const GaloisAut& sigma, const Cyclotomic& x);

/// True iff every multiplier k = 1 (mod m), gcd(k, n) = 1 fixes all values,
/// where m is the p'-part of n.  Preconditions: p prime, every value's
/// conductor divides n.
bool is_p_rational(const std::vector<Cyclotomic>& values, std::uint64_t p, std::uint64_t n);

/// The automorphism fixing 2-power roots of unity and squaring odd-order
/// ones: multiplier k = 1 (mod 2^a), k = 2 (mod m) for n = 2^a * m, m odd.
GaloisAut sigma_two_special(std::uint64_t n);

} // namespace blockscope
