#include "blockscope/cyclotomic.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace blockscope {

namespace {

struct PrimeComponent {
  std::uint64_t q;      // prime
  std::uint64_t qa;     // q^a
  std::uint64_t qa1;    // q^(a-1)
  std::uint64_t cominv; // (n / q^a)^-1 mod q^a
};

std::vector<PrimeComponent> components(std::uint64_t n) {
  std::vector<PrimeComponent> out;
  for (auto [q, a] : factorize(n)) {
    PrimeComponent c;
    c.q = q;
    c.qa = 1;
    for (unsigned i = 0; i < a; ++i) c.qa *= q;
    c.qa1 = c.qa / q;
    c.cominv = c.qa == 1 ? 0 : inverse_mod((n / c.qa) % c.qa, c.qa);
    out.push_back(c);
  }
  return out;
}

// q-component exponent of zeta_n^k, i.e. e with
// zeta_n^k = zeta_{q^a}^e * (prime-to-q part).
std::uint64_t q_component(std::uint64_t k, const PrimeComponent& c) {
  return static_cast<std::uint64_t>((unsigned __int128)(k % c.qa) * c.cominv % c.qa);
}

} // namespace

Cyclotomic Cyclotomic::from_rational(const Rat& r) {
  Cyclotomic x;
  if (r != 0) x.terms_.emplace_back(0, r);
  return x;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, long long k) {
  if (n == 0) throw input_error("root_of_unity: conductor must be positive");
  long long m = k % static_cast<long long>(n);
  if (m < 0) m += static_cast<long long>(n);
  return from_terms(n, {{static_cast<std::uint64_t>(m), Rat(1)}});
}

Cyclotomic Cyclotomic::from_terms(std::uint64_t n, const std::vector<Term>& terms) {
  if (n == 0) throw input_error("from_terms: conductor must be positive");
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& [k, c] : terms) raw.emplace_back(k % n, c);
  return canonicalize(n, std::move(raw));
}

Cyclotomic Cyclotomic::canonicalize(std::uint64_t n, std::vector<Term> raw) {
  std::map<std::uint64_t, Rat> acc;
  for (auto& [k, c] : raw) {
    if (c == 0) continue;
    auto [it, fresh] = acc.emplace(k % n, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) acc.erase(it);
    }
  }

  // Eliminate top digits prime by prime; a rewrite for q never reintroduces a
  // top q-digit and leaves the other components untouched.
  for (const PrimeComponent& c : components(n)) {
    std::vector<Term> offending;
    for (auto it = acc.begin(); it != acc.end();) {
      if (q_component(it->first, c) / c.qa1 == c.q - 1) {
        offending.emplace_back(it->first, it->second);
        it = acc.erase(it);
      } else {
        ++it;
      }
    }
    const std::uint64_t step = n / c.q;
    for (const auto& [k, coeff] : offending) {
      for (std::uint64_t t = 1; t < c.q; ++t) {
        std::uint64_t k2 = (k + t * step) % n;
        auto [it, fresh] = acc.emplace(k2, -coeff);
        if (!fresh) {
          it->second -= coeff;
          if (it->second == 0) acc.erase(it);
        }
      }
    }
  }

  // Descend to the minimal conductor: zeta_n^k = zeta_{n/q}^{k/q} whenever
  // every exponent is divisible by q.
  bool descended = true;
  while (descended && n > 1 && !acc.empty()) {
    descended = false;
    for (std::uint64_t q : prime_divisors(n)) {
      bool all = true;
      for (const auto& [k, c] : acc) {
        if (k % q != 0) {
          all = false;
          break;
        }
      }
      if (all) {
        std::map<std::uint64_t, Rat> down;
        for (const auto& [k, c] : acc) down.emplace(k / q, c);
        acc = std::move(down);
        n /= q;
        descended = true;
        break;
      }
    }
  }
  if (acc.empty()) n = 1;

  Cyclotomic x;
  x.conductor_ = n;
  x.terms_.assign(acc.begin(), acc.end());
  return x;
}

std::vector<Cyclotomic::Term> Cyclotomic::lifted_terms(std::uint64_t target) const {
  if (target % conductor_ != 0)
    throw arithmetic_error("conductor " + std::to_string(conductor_) +
                           " does not divide " + std::to_string(target));
  const std::uint64_t scale = target / conductor_;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(k * scale, c);
  return out;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw arithmetic_error("value is not rational");
  return terms_.empty() ? Rat(0) : terms_.front().second;
}

bool Cyclotomic::is_algebraic_integer() const {
  for (const auto& [k, c] : terms_)
    if (!is_integral(c)) return false;
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  std::uint64_t n = lcm_u64(conductor_, rhs.conductor_);
  std::vector<Term> raw = lifted_terms(n);
  std::vector<Term> other = rhs.lifted_terms(n);
  raw.insert(raw.end(), other.begin(), other.end());
  return canonicalize(n, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic x = *this;
  for (auto& [k, c] : x.terms_) c = -c;
  return x;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  if (is_zero() || rhs.is_zero()) return Cyclotomic();
  std::uint64_t n = lcm_u64(conductor_, rhs.conductor_);
  std::vector<Term> a = lifted_terms(n);
  std::vector<Term> b = rhs.lifted_terms(n);
  std::vector<Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) raw.emplace_back((ka + kb) % n, ca * cb);
  return canonicalize(n, std::move(raw));
}

Cyclotomic Cyclotomic::scaled(const Rat& r) const {
  if (r == 0) return Cyclotomic();
  Cyclotomic x = *this;
  for (auto& [k, c] : x.terms_) c *= r;
  return x;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw arithmetic_error("inversion of zero");
  if (is_rational()) return from_rational(Rat(1) / rational_value());
  Cyclotomic prod = from_rational(Rat(1));
  for (std::uint64_t k = 2; k < conductor_; ++k) {
    if (std::gcd(k, conductor_) != 1) continue;
    prod = prod * galois_apply(make_galois(conductor_, k), *this);
  }
  Cyclotomic norm = *this * prod;
  if (!norm.is_rational() || norm.rational_value() == 0)
    throw arithmetic_error("inverse: norm computation failed");
  return prod.scaled(Rat(1) / norm.rational_value());
}

Cyclotomic Cyclotomic::conjugate() const {
  if (is_rational()) return *this;
  return galois_apply(conjugation_aut(conductor_), *this);
}

bool Cyclotomic::operator<(const Cyclotomic& rhs) const {
  if (conductor_ != rhs.conductor_) return conductor_ < rhs.conductor_;
  return terms_ < rhs.terms_;
}

std::string Cyclotomic::encode() const {
  std::ostringstream os;
  os << conductor_ << ';';
  for (const auto& [k, c] : terms_) os << k << ':' << rational_to_string(c) << ',';
  return os.str();
}

GaloisAut make_galois(std::uint64_t conductor, std::uint64_t multiplier) {
  if (conductor == 0) throw input_error("galois: conductor must be positive");
  multiplier %= conductor;
  if (conductor == 1) return {1, 1};
  if (std::gcd(multiplier, conductor) != 1)
    throw domain_error("galois multiplier is not coprime to the conductor");
  return {conductor, multiplier};
}

GaloisAut compose(const GaloisAut& first, const GaloisAut& second) {
  if (first.conductor != second.conductor)
    throw domain_error("composing automorphisms of different conductors");
  return make_galois(first.conductor,
                     static_cast<std::uint64_t>((unsigned __int128)first.multiplier *
                                                second.multiplier % first.conductor));
}

GaloisAut conjugation_aut(std::uint64_t conductor) {
  return make_galois(conductor, conductor - 1);
}

Cyclotomic galois_apply(const GaloisAut& sigma, const Cyclotomic& x) {
  if (sigma.conductor % x.conductor() != 0)
    throw domain_error("galois_apply: value conductor does not divide the automorphism's");
  if (x.is_rational()) return x;
  const std::uint64_t n = x.conductor();
  const std::uint64_t k = sigma.multiplier % n;
  if (std::gcd(k, n) != 1)
    throw domain_error("galois_apply: multiplier not coprime after restriction");
  std::vector<Cyclotomic::Term> raw;
  raw.reserve(x.terms().size());
  for (const auto& [e, c] : x.terms())
    raw.emplace_back(static_cast<std::uint64_t>((unsigned __int128)e * k % n), c);
  return Cyclotomic::canonicalize(n, std::move(raw));
}

bool is_p_rational(const std::vector<Cyclotomic>& values, std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw input_error("is_p_rational: p must be prime");
  for (const Cyclotomic& v : values)
    if (n % v.conductor() != 0)
      throw domain_error("is_p_rational: n is not a multiple of a value conductor");
  const std::uint64_t m = p_prime_part(n, p);
  for (std::uint64_t k = 1; k < n; ++k) {
    if (k % m != 1 % m || std::gcd(k, n) != 1) continue;
    GaloisAut sigma = make_galois(n, k);
    for (const Cyclotomic& v : values)
      if (galois_apply(sigma, v) != v) return false;
  }
  return true;
}

GaloisAut sigma_two_special(std::uint64_t n) {
  if (n == 0) throw input_error("sigma_two_special: n must be positive");
  const std::uint64_t two_part = p_part(n, 2);
  const std::uint64_t m = n / two_part;
  if (m == 1) return make_galois(n, 1);
  return make_galois(n, crt(1 % two_part, two_part, 2 % m, m));
}

} // namespace blockscope
