#include "blockscope/table_ops.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace blockscope {

namespace {

void check_same_table(const CharacterTable& table, const ClassFunction& f) {
  if (f.table_id != table.id() || f.values.size() != table.class_count())
    throw domain_error("class function does not belong to this table");
}

} // namespace

Cyclotomic inner_product(const CharacterTable& table, const ClassFunction& f,
                         const ClassFunction& g) {
  check_same_table(table, f);
  check_same_table(table, g);
  Cyclotomic acc;
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    Cyclotomic term = f.value(c) * g.value(c).conjugate();
    acc = acc + term.scaled(Rat(table.class_size(static_cast<int>(c))));
  }
  return acc.scaled(Rat(1, table.order()));
}

std::vector<int> class_fusion(const CharacterTable& sub, const CharacterTable& big) {
  if (!big.group().contains(sub.group()))
    throw domain_error("class_fusion: not a subgroup of the ambient group");
  std::vector<int> fusion(sub.class_count());
  for (std::size_t c = 0; c < sub.class_count(); ++c)
    fusion[c] = big.class_of(sub.class_rep(static_cast<int>(c)));
  return fusion;
}

ClassFunction restrict_character(const CharacterTable& big, const ClassFunction& f,
                                 const CharacterTable& sub) {
  check_same_table(big, f);
  std::vector<int> fusion = class_fusion(sub, big);
  std::vector<Cyclotomic> values(sub.class_count());
  for (std::size_t c = 0; c < sub.class_count(); ++c) values[c] = f.value(fusion[c]);
  return sub.make_class_function(std::move(values));
}

ClassFunction induce_character(const CharacterTable& sub, const ClassFunction& f,
                               const CharacterTable& big) {
  check_same_table(sub, f);
  std::vector<int> fusion = class_fusion(sub, big);
  std::vector<Cyclotomic> values(big.class_count());
  for (std::size_t c = 0; c < big.class_count(); ++c) {
    Cyclotomic acc;
    for (std::size_t d = 0; d < sub.class_count(); ++d) {
      if (fusion[d] != static_cast<int>(c)) continue;
      // |C_G(x)| * sum over fused H-classes of theta(h) / |C_H(h)|
      acc = acc + f.value(d).scaled(Rat(sub.class_size(static_cast<int>(d)), sub.order()));
    }
    const Rat centralizer_order(big.order() / big.class_size(static_cast<int>(c)));
    values[c] = acc.scaled(centralizer_order);
  }
  return big.make_class_function(std::move(values));
}

ClassFunction inflate_character(const CharacterTable& quotient_table, const ClassFunction& f,
                                const QuotientMap& q, const CharacterTable& big_table) {
  check_same_table(quotient_table, f);
  if (!quotient_table.group().same_group_as(q.image()))
    throw domain_error("inflate_character: table does not match the quotient image");
  if (!big_table.group().same_group_as(q.source()))
    throw domain_error("inflate_character: table does not match the quotient source");
  std::vector<Cyclotomic> values(big_table.class_count());
  for (std::size_t c = 0; c < big_table.class_count(); ++c) {
    Permutation image = q.forward(big_table.class_rep(static_cast<int>(c)));
    values[c] = f.value(quotient_table.class_of(image));
  }
  return big_table.make_class_function(std::move(values));
}

std::vector<Cyclotomic> decompose(const CharacterTable& table, const ClassFunction& f) {
  std::vector<Cyclotomic> out;
  out.reserve(table.class_count());
  for (const ClassFunction& chi : table.irreducibles()) out.push_back(inner_product(table, f, chi));
  return out;
}

std::vector<std::pair<std::size_t, long long>> constituents(const CharacterTable& table,
                                                            const ClassFunction& f) {
  std::vector<std::pair<std::size_t, long long>> out;
  std::vector<Cyclotomic> coeffs = decompose(table, f);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!coeffs[i].is_rational() || !is_integral(coeffs[i].rational_value()) ||
        coeffs[i].rational_value() < 0)
      throw domain_error("constituents: class function is not a character combination");
    out.emplace_back(i, rat_to_int64(coeffs[i].rational_value()));
  }
  return out;
}

std::vector<std::size_t> irr_over(const CharacterTable& table_g, const CharacterTable& table_n,
                                  const ClassFunction& theta) {
  if (!is_normal(table_g.group(), table_n.group()))
    throw domain_error("irr_over: N is not normal in G");
  // Route one: constituents of the induced character.
  ClassFunction induced = induce_character(table_n, theta, table_g);
  std::vector<std::size_t> via_induction;
  for (const auto& [idx, mult] : constituents(table_g, induced)) via_induction.push_back(idx);

  // Route two: nonzero restriction multiplicity.
  std::vector<std::size_t> via_restriction;
  for (std::size_t i = 0; i < table_g.irreducibles().size(); ++i) {
    ClassFunction res = restrict_character(table_g, table_g.irreducible(i), table_n);
    if (!inner_product(table_n, res, theta).is_zero()) via_restriction.push_back(i);
  }
  if (via_induction != via_restriction)
    throw error("irr_over: induction and restriction routes disagree (internal error)");
  return via_induction;
}

std::vector<std::size_t> extensions_of(const CharacterTable& table_n, const ClassFunction& theta,
                                       const CharacterTable& table_g) {
  check_same_table(table_n, theta);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table_g.irreducibles().size(); ++i) {
    ClassFunction res = restrict_character(table_g, table_g.irreducible(i), table_n);
    if (res.values == theta.values) out.push_back(i);
  }
  return out;
}

PermGroup character_kernel(const CharacterTable& table, const ClassFunction& f) {
  check_same_table(table, f);
  const Cyclotomic degree = f.value(0);
  std::vector<Permutation> members;
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    if (f.value(c) != degree) continue;
    for (int idx : table.class_data().classes.members[c])
      members.push_back(table.class_data().classes.element(idx));
  }
  return PermGroup(table.group().degree(), std::move(members));
}

ClassFunction galois_on_class_function(const CharacterTable& table, const ClassFunction& f,
                                       std::uint64_t multiplier) {
  check_same_table(table, f);
  GaloisAut sigma = make_galois(table.exponent(), multiplier);
  std::vector<Cyclotomic> values;
  values.reserve(f.values.size());
  for (const Cyclotomic& v : f.values) values.push_back(galois_apply(sigma, v));
  return table.make_class_function(std::move(values));
}

std::vector<int> galois_permutation(const CharacterTable& table, std::uint64_t multiplier) {
  std::map<std::string, int> by_key;
  for (std::size_t i = 0; i < table.irreducibles().size(); ++i) {
    std::string key;
    for (const Cyclotomic& v : table.irreducible(i).values) key += v.encode() + '|';
    by_key.emplace(std::move(key), static_cast<int>(i));
  }
  std::vector<int> perm(table.irreducibles().size());
  for (std::size_t i = 0; i < table.irreducibles().size(); ++i) {
    ClassFunction image = galois_on_class_function(table, table.irreducible(i), multiplier);
    std::string key;
    for (const Cyclotomic& v : image.values) key += v.encode() + '|';
    auto it = by_key.find(key);
    if (it == by_key.end())
      throw error("galois_permutation: irreducibles are not Galois-stable (internal error)");
    perm[i] = it->second;
  }
  return perm;
}

std::vector<std::uint64_t> value_stabilizer(const std::vector<Cyclotomic>& values,
                                            std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k % n == 0 ? n : k % n, n) != 1) continue;
    GaloisAut sigma = make_galois(n, k % n == 0 ? n : k);
    bool fixes = true;
    for (const Cyclotomic& v : values) {
      if (galois_apply(sigma, v) != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(k % n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool character_is_p_rational(const CharacterTable& table, std::size_t i, std::uint64_t p) {
  return is_p_rational(table.irreducible(i).values, p, table.exponent());
}

ClassFunction conjugate_character(const CharacterTable& table, const ClassFunction& f,
                                  const Permutation& y) {
  check_same_table(table, f);
  const Permutation y_inv = y.inverse();
  std::vector<Cyclotomic> values(table.class_count());
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    // chi^y(g) = chi(y g y^-1)
    Permutation moved = table.class_rep(static_cast<int>(c)).conjugated_by(y_inv);
    values[c] = f.value(table.class_of(moved));
  }
  return table.make_class_function(std::move(values));
}

} // namespace blockscope
