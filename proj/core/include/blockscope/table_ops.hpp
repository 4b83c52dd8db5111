#pragma once

#include "blockscope/character_table.hpp"
#include "blockscope/quotient.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace blockscope {

/// (1/|G|) sum_K |K| f(x_K) conj(g(x_K)), complex conjugation being the
/// Galois action with multiplier -1.  Exact.
Cyclotomic inner_product(const CharacterTable& table, const ClassFunction& f,
                         const ClassFunction& g);

/// For H <= G: the G-class of each H-class representative.
std::vector<int> class_fusion(const CharacterTable& sub, const CharacterTable& big);

ClassFunction restrict_character(const CharacterTable& big, const ClassFunction& f,
                                 const CharacterTable& sub);

ClassFunction induce_character(const CharacterTable& sub, const ClassFunction& f,
                               const CharacterTable& big);

/// Pullback along the quotient map: value at g is f at forward(g).
ClassFunction inflate_character(const CharacterTable& quotient_table, const ClassFunction& f,
                                const QuotientMap& q, const CharacterTable& big_table);

/// All coefficients <f, chi_i>.
std::vector<Cyclotomic> decompose(const CharacterTable& table, const ClassFunction& f);

/// Irreducible constituents with non-negative integer multiplicities; throws
/// domain_error when f is not such a combination.
std::vector<std::pair<std::size_t, long long>> constituents(const CharacterTable& table,
                                                            const ClassFunction& f);

/// Irr(G | theta) for N normal in G: computed both as the constituents of
/// theta^G and as {chi : <chi_N, theta> != 0}; the two routes are checked
/// against each other.
std::vector<std::size_t> irr_over(const CharacterTable& table_g, const CharacterTable& table_n,
                                  const ClassFunction& theta);

/// chi in Irr(G) with chi restricted to N equal to theta.
std::vector<std::size_t> extensions_of(const CharacterTable& table_n, const ClassFunction& theta,
                                       const CharacterTable& table_g);

PermGroup character_kernel(const CharacterTable& table, const ClassFunction& f);

/// Value-wise sigma_multiplier.
ClassFunction galois_on_class_function(const CharacterTable& table, const ClassFunction& f,
                                       std::uint64_t multiplier);

/// The permutation i -> j with chi_i^sigma = chi_j; throws if the set of
/// irreducibles is not Galois-stable (it always is for a correct table).
std::vector<int> galois_permutation(const CharacterTable& table, std::uint64_t multiplier);

/// {k in (Z/n)^x : sigma_k fixes every value}; requires each conductor | n.
std::vector<std::uint64_t> value_stabilizer(const std::vector<Cyclotomic>& values,
                                            std::uint64_t n);

bool character_is_p_rational(const CharacterTable& table, std::size_t i, std::uint64_t p);

/// chi^y with chi^y(g) = chi(y g y^-1); y must normalize the table's group.
ClassFunction conjugate_character(const CharacterTable& table, const ClassFunction& f,
                                  const Permutation& y);

} // namespace blockscope
