#include "blockscope/character_table.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/num_util.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

namespace blockscope {

namespace {

std::atomic<std::uint64_t> next_table_id{1};

} // namespace

ClassData build_class_data(const PermGroup& G) {
  ClassData data;
  data.classes = conjugacy_classes(G);
  data.group_order = G.order();
  const std::size_t k = data.classes.count();
  data.sizes.resize(k);
  data.element_orders.resize(k);
  data.inverse_class.resize(k);
  data.power_map.resize(k);
  data.exponent = 1;
  for (std::size_t c = 0; c < k; ++c) {
    const Permutation& rep = data.classes.rep(static_cast<int>(c));
    data.sizes[c] = data.classes.size(static_cast<int>(c));
    data.element_orders[c] = rep.order();
    data.exponent = std::lcm(data.exponent, data.element_orders[c]);
    data.inverse_class[c] = data.classes.class_of(rep.inverse());
    data.power_map[c].resize(data.element_orders[c]);
    Permutation pw = G.identity();
    for (std::uint64_t t = 0; t < data.element_orders[c]; ++t) {
      data.power_map[c][t] = data.classes.class_of(pw);
      pw = pw * rep;
    }
  }
  return data;
}

CharacterTable CharacterTable::compute(const PermGroup& G) {
  CharacterTable table;
  table.id_ = next_table_id.fetch_add(1);
  table.group_ = G;
  table.data_ = std::make_shared<const ClassData>(build_class_data(G));
  table.finalize(detail::dixon_irreducibles(*table.data_));
  verify_table_invariants(table);
  return table;
}

CharacterTable CharacterTable::from_values(const PermGroup& G,
                                           std::vector<std::vector<Cyclotomic>> values) {
  CharacterTable table;
  table.id_ = next_table_id.fetch_add(1);
  table.group_ = G;
  table.data_ = std::make_shared<const ClassData>(build_class_data(G));
  table.finalize(std::move(values));
  verify_table_invariants(table);
  return table;
}

void CharacterTable::finalize(std::vector<std::vector<Cyclotomic>> values) {
  const std::size_t k = data_->sizes.size();
  if (values.size() != k)
    throw input_error("character table: expected " + std::to_string(k) + " irreducibles, got " +
                      std::to_string(values.size()));

  struct Row {
    std::vector<Cyclotomic> values;
    std::uint64_t degree;
    bool trivial;
    std::vector<std::string> key;
  };
  std::vector<Row> rows;
  rows.reserve(k);
  for (auto& v : values) {
    if (v.size() != k) throw input_error("character table: row length mismatch");
    Row row;
    if (!v[0].is_rational() || !is_integral(v[0].rational_value()) || v[0].rational_value() <= 0)
      throw input_error("character table: degree is not a positive integer");
    row.degree = static_cast<std::uint64_t>(rat_to_int64(v[0].rational_value()));
    row.trivial = true;
    for (const Cyclotomic& x : v) {
      if (!(x.is_rational() && x.rational_value() == 1)) {
        row.trivial = false;
        break;
      }
    }
    row.key.reserve(k);
    for (const Cyclotomic& x : v) row.key.push_back(x.encode());
    row.values = std::move(v);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.trivial != b.trivial) return a.trivial;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.key < b.key;
  });

  irreducibles_.clear();
  degrees_.clear();
  for (Row& row : rows) {
    ClassFunction f;
    f.table_id = id_;
    f.values = std::move(row.values);
    irreducibles_.push_back(std::move(f));
    degrees_.push_back(row.degree);
  }
}

int CharacterTable::index_of_values(const std::vector<Cyclotomic>& values) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    if (irreducibles_[i].values == values) return static_cast<int>(i);
  return -1;
}

ClassFunction CharacterTable::trivial_character() const {
  ClassFunction f;
  f.table_id = id_;
  f.values.assign(class_count(), Cyclotomic::from_int(1));
  return f;
}

ClassFunction CharacterTable::make_class_function(std::vector<Cyclotomic> values) const {
  if (values.size() != class_count())
    throw domain_error("class function has wrong number of values");
  ClassFunction f;
  f.table_id = id_;
  f.values = std::move(values);
  return f;
}

namespace {

// Dense integer view of a value in Z[zeta_e]: exponent -> coefficient, used
// for the exact orthogonality sweep without rational arithmetic.
struct DenseValue {
  std::vector<long long> coeff; // length e
};

DenseValue densify(const Cyclotomic& x, std::uint64_t e) {
  DenseValue d;
  d.coeff.assign(e, 0);
  if (e % x.conductor() != 0) throw error("densify: conductor does not divide exponent");
  const std::uint64_t scale = e / x.conductor();
  for (const auto& [k, c] : x.terms()) {
    if (!is_integral(c)) throw input_error("character value is not an algebraic integer");
    d.coeff[k * scale] = rat_to_int64(Rat(c));
  }
  return d;
}

Cyclotomic sparse_from_acc(const std::vector<__int128>& acc, std::uint64_t e) {
  std::vector<Cyclotomic::Term> terms;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (acc[k] == 0) continue;
    __int128 v = acc[k];
    bool neg = v < 0;
    if (neg) v = -v;
    Int big = 0;
    // assemble the 128-bit magnitude
    big = Int(static_cast<std::uint64_t>(v >> 64));
    big <<= 64;
    big += Int(static_cast<std::uint64_t>(v));
    if (neg) big = -big;
    terms.emplace_back(k, Rat(big));
  }
  return Cyclotomic::from_terms(e, terms);
}

} // namespace

void verify_table_invariants(const CharacterTable& table) {
  const std::size_t k = table.class_count();
  const std::uint64_t order = table.order();
  const std::uint64_t e = table.exponent();

  std::uint64_t size_sum = 0;
  for (std::size_t c = 0; c < k; ++c) {
    size_sum += table.class_size(static_cast<int>(c));
    if (order % table.class_size(static_cast<int>(c)) != 0)
      throw error("table invariant: class size does not divide the order");
  }
  if (size_sum != order) throw error("table invariant: class equation fails");

  if (table.irreducibles().size() != k)
    throw error("table invariant: number of irreducibles != number of classes");

  // Trivial character first.
  for (std::size_t c = 0; c < k; ++c) {
    const Cyclotomic& v = table.irreducible(0).value(c);
    if (!(v.is_rational() && v.rational_value() == 1))
      throw error("table invariant: first irreducible is not the trivial character");
  }

  unsigned __int128 degree_square_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t d = table.degree(i);
    if (order % d != 0) throw error("table invariant: degree does not divide the group order");
    degree_square_sum += (unsigned __int128)d * d;
  }
  if (degree_square_sum != order) throw error("table invariant: sum of squared degrees != |G|");

  // Dense integer views; values must be algebraic integers.
  std::vector<std::vector<DenseValue>> dense(k);
  for (std::size_t i = 0; i < k; ++i) {
    dense[i].reserve(k);
    for (std::size_t c = 0; c < k; ++c) dense[i].push_back(densify(table.irreducible(i).value(c), e));
  }

  // Row orthogonality: sum_c h_c X_i(c) X_j(c^-1) = delta_ij |G|.
  std::vector<__int128> acc(e);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t c = 0; c < k; ++c) {
        const long long h = static_cast<long long>(table.class_size(static_cast<int>(c)));
        const DenseValue& a = dense[i][c];
        const DenseValue& b = dense[j][table.inverse_class(static_cast<int>(c))];
        for (std::uint64_t ka = 0; ka < e; ++ka) {
          if (a.coeff[ka] == 0) continue;
          const __int128 ha = (__int128)h * a.coeff[ka];
          for (std::uint64_t kb = 0; kb < e; ++kb) {
            if (b.coeff[kb] == 0) continue;
            acc[(ka + kb) % e] += ha * b.coeff[kb];
          }
        }
      }
      Cyclotomic total = sparse_from_acc(acc, e);
      Cyclotomic expected = Cyclotomic::from_int(i == j ? static_cast<long long>(order) : 0);
      if (total != expected) throw error("table invariant: row orthogonality fails");
    }
  }

  // Column orthogonality: sum_X X(c_i) X(c_j^-1) = delta_ij |C(x_i)|.
  for (std::size_t ci = 0; ci < k; ++ci) {
    for (std::size_t cj = 0; cj <= ci; ++cj) {
      std::fill(acc.begin(), acc.end(), 0);
      const int cj_inv = table.inverse_class(static_cast<int>(cj));
      for (std::size_t x = 0; x < k; ++x) {
        const DenseValue& a = dense[x][ci];
        const DenseValue& b = dense[x][cj_inv];
        for (std::uint64_t ka = 0; ka < e; ++ka) {
          if (a.coeff[ka] == 0) continue;
          const __int128 va = a.coeff[ka];
          for (std::uint64_t kb = 0; kb < e; ++kb) {
            if (b.coeff[kb] == 0) continue;
            acc[(ka + kb) % e] += va * b.coeff[kb];
          }
        }
      }
      Cyclotomic total = sparse_from_acc(acc, e);
      Cyclotomic expected = Cyclotomic::from_int(
          ci == cj ? static_cast<long long>(order / table.class_size(static_cast<int>(ci))) : 0);
      if (total != expected) throw error("table invariant: column orthogonality fails");
    }
  }
}

} // namespace blockscope
