#pragma once

#include <cstdint>
#include <vector>

namespace blockscope {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// (prime, multiplicity) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

unsigned valuation(std::uint64_t n, std::uint64_t p);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b); // throws capacity_error on overflow

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod); // gcd(a,mod)=1 required

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// Solves x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2;
/// returns the least non-negative solution.
std::uint64_t crt(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2);

/// Generators of the unit group (Z/n)^x: per odd prime power the least
/// primitive root lifted to be 1 modulo the cofactor, plus {-1, 5} style
/// generators for the 2-part.  Empty for n <= 2.
std::vector<std::uint64_t> unit_group_generators(std::uint64_t n);

} // namespace blockscope
