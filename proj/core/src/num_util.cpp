#include "blockscope/num_util.hpp"

#include "blockscope/errors.hpp"

#include <numeric>

namespace blockscope {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (q > UINT64_MAX / b) throw capacity_error("lcm overflows 64 bits");
  return q * b;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(mod), new_r = static_cast<long long>(a % mod);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw arithmetic_error("inverse_mod: arguments not coprime");
  if (t < 0) t += static_cast<long long>(mod);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) throw arithmetic_error("multiplicative_order: not coprime");
  std::uint64_t ord = 1;
  std::uint64_t x = a % n;
  while (x != 1) {
    x = static_cast<std::uint64_t>((unsigned __int128)x * a % n);
    ++ord;
  }
  return ord;
}

namespace {

std::uint64_t primitive_root_mod_prime_power(std::uint64_t q, unsigned a) {
  std::uint64_t qa = 1;
  for (unsigned i = 0; i < a; ++i) qa *= q;
  const std::uint64_t phi = qa / q * (q - 1);
  auto primes = prime_divisors(phi);
  for (std::uint64_t g = 2; g < qa; ++g) {
    if (g % q == 0) continue;
    bool primitive = true;
    for (std::uint64_t r : primes)
      if (pow_mod(g, phi / r, qa) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw error("primitive root not found (internal error)");
}

} // namespace

std::vector<std::uint64_t> unit_group_generators(std::uint64_t n) {
  std::vector<std::uint64_t> gens;
  if (n <= 2) return gens;
  for (auto [q, a] : factorize(n)) {
    std::uint64_t qa = 1;
    for (unsigned i = 0; i < a; ++i) qa *= q;
    const std::uint64_t cof = n / qa;
    auto lift = [&](std::uint64_t g) {
      return cof == 1 ? g % n : crt(g % qa, qa, 1 % cof, cof);
    };
    if (q == 2) {
      if (a >= 2) gens.push_back(lift(qa - 1));
      if (a >= 3) gens.push_back(lift(5));
    } else {
      gens.push_back(lift(primitive_root_mod_prime_power(q, a)));
    }
  }
  return gens;
}

std::uint64_t crt(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2) {
  if (std::gcd(m1, m2) != 1) throw arithmetic_error("crt: moduli not coprime");
  // x = r1 + m1 * t, solve m1 * t = r2 - r1 (mod m2)
  std::uint64_t diff = ((r2 % m2) + m2 - (r1 % m2)) % m2;
  std::uint64_t t = static_cast<std::uint64_t>(
      (unsigned __int128)diff * inverse_mod(m1 % m2, m2) % m2);
  return r1 % m1 + m1 * t;
}

} // namespace blockscope
