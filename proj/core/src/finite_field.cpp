#include "blockscope/finite_field.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"

#include <sstream>

namespace blockscope {

namespace {

using Poly = std::vector<std::uint64_t>; // dense, index = degree, may carry leading zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + (unsigned __int128)a[i] * b[j]) % p;
  }
  // mod is monic of degree d
  const std::size_t d = mod.size() - 1;
  for (std::size_t i = prod.size(); i-- > d;) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < d; ++j)
      prod[i - d + j] = (prod[i - d + j] + (p - mod[j] % p) * (unsigned __int128)c) % p;
  }
  prod.resize(d);
  return prod;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& mod, std::uint64_t p) {
  Poly acc{1};
  acc.resize(mod.size() - 1, 0);
  base.resize(mod.size() - 1, 0);
  while (e) {
    if (e & 1) acc = poly_mul_mod(acc, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    std::uint64_t lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t c = (unsigned __int128)a.back() * lead_inv % p;
      if (c != 0) {
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
          a[shift + j] = (a[shift + j] + (p - c) * (unsigned __int128)b[j]) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& mod, std::uint64_t p) {
  const std::size_t f = mod.size() - 1;
  Poly x{0, 1};
  // x^(p^f) = x (mod g) and gcd(x^(p^(f/r)) - x, g) = 1 for primes r | f.
  Poly frob = x;
  frob.resize(f, 0);
  std::vector<Poly> powers(f + 1); // powers[i] = x^(p^i) mod g
  powers[0] = frob;
  for (std::size_t i = 1; i <= f; ++i)
    powers[i] = poly_pow_mod(powers[i - 1], p, mod, p);
  Poly diff = powers[f];
  // subtract x
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (std::uint64_t r : prime_divisors(f)) {
    Poly d = powers[f / r];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    Poly g = poly_gcd(Poly(mod), d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

} // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned f) : p_(p), f_(f) {
  if (!is_prime(p)) throw input_error("FiniteField: p must be prime");
  if (f == 0) throw input_error("FiniteField: degree must be positive");
  if (f == 1) {
    modulus_.assign(1, 0); // x
    return;
  }
  // Scan constant vectors as base-p digits of an increasing counter.
  Int total = 1;
  for (unsigned i = 0; i < f; ++i) total *= Int(p);
  for (Int counter = 0; counter < total; ++counter) {
    Poly mod(f + 1, 0);
    mod[f] = 1;
    Int rest = counter;
    for (unsigned i = 0; i < f; ++i) {
      mod[i] = static_cast<std::uint64_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(mod, p_)) {
      modulus_.assign(f, 0);
      for (unsigned i = 0; i < f; ++i) modulus_[i] = static_cast<std::uint32_t>(mod[i]);
      return;
    }
  }
  throw error("FiniteField: no irreducible polynomial found (internal error)");
}

FiniteField::Elem FiniteField::one() const {
  Elem e(f_, 0);
  e[0] = 1;
  return e;
}

FiniteField::Elem FiniteField::from_int(std::uint64_t v) const {
  Elem e(f_, 0);
  e[0] = static_cast<std::uint32_t>(v % p_);
  return e;
}

bool FiniteField::is_zero(const Elem& a) const {
  for (std::uint32_t c : a)
    if (c) return false;
  return true;
}

bool FiniteField::is_one(const Elem& a) const {
  if (a[0] != 1) return false;
  for (unsigned i = 1; i < f_; ++i)
    if (a[i]) return false;
  return true;
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
  Elem out(f_);
  for (unsigned i = 0; i < f_; ++i) out[i] = static_cast<std::uint32_t>((a[i] + (std::uint64_t)b[i]) % p_);
  return out;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
  Elem out(f_);
  for (unsigned i = 0; i < f_; ++i)
    out[i] = static_cast<std::uint32_t>((a[i] + p_ - (std::uint64_t)b[i]) % p_);
  return out;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const { return sub(zero(), a); }

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
  if (f_ == 1) return from_int((std::uint64_t)a[0] * b[0] % p_);
  Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  Poly mod(f_ + 1, 0);
  mod[f_] = 1;
  for (unsigned i = 0; i < f_; ++i) mod[i] = modulus_[i];
  Poly prod = poly_mul_mod(pa, pb, mod, p_);
  Elem out(f_, 0);
  for (unsigned i = 0; i < f_ && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

FiniteField::Elem FiniteField::pow(Elem base, Int exponent) const {
  if (exponent < 0) throw arithmetic_error("FiniteField::pow: negative exponent");
  Elem acc = one();
  while (exponent > 0) {
    if ((exponent & 1) != 0) acc = mul(acc, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return acc;
}

Int FiniteField::size() const {
  Int s = 1;
  for (unsigned i = 0; i < f_; ++i) s *= Int(p_);
  return s;
}

std::string FiniteField::encode(const Elem& a) const {
  std::ostringstream os;
  for (unsigned i = 0; i < f_; ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

} // namespace blockscope
