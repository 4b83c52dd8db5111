#pragma once

#include "blockscope/cyclotomic.hpp"
#include "blockscope/group_ops.hpp"
#include "blockscope/permgroup.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace blockscope {

/// Conjugacy-class bookkeeping shared by a table and everything derived from
/// it: sizes, element orders, inverse classes and full power maps.
struct ClassData {
  ConjugacyClasses classes;
  std::uint64_t group_order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> element_orders;
  std::vector<int> inverse_class;
  std::vector<std::vector<int>> power_map; // power_map[c][t] = class of rep_c^t, t < order
};

/// A class function on a fixed table, stored as one Cyclotomic per class.
/// The table_id ties it to the table it was created against.
struct ClassFunction {
  std::uint64_t table_id = 0;
  std::vector<Cyclotomic> values;

  const Cyclotomic& value(std::size_t c) const { return values[c]; }
  bool operator==(const ClassFunction&) const = default;
};

/// The ordinary character table of a finite permutation group.  Irreducibles
/// are ordered deterministically: the trivial character first, then by
/// (degree, lexicographic canonical value encoding).
class CharacterTable {
public:
  /// Dixon-Schneider computation; capacity_error beyond the enumeration
  /// threshold.  The returned table has passed all structural invariants
  /// (orthogonality, degree sum, integrality).
  static CharacterTable compute(const PermGroup& G);

  /// Assembles a table from externally supplied irreducible values (import
  /// path); throws unless every invariant holds.
  static CharacterTable from_values(const PermGroup& G,
                                    std::vector<std::vector<Cyclotomic>> values);

  std::uint64_t id() const { return id_; }
  const PermGroup& group() const { return group_; }
  std::uint64_t order() const { return data_->group_order; }
  std::uint64_t exponent() const { return data_->exponent; }

  std::size_t class_count() const { return data_->sizes.size(); }
  const ClassData& class_data() const { return *data_; }
  const Permutation& class_rep(int c) const { return data_->classes.rep(c); }
  std::uint64_t class_size(int c) const { return data_->sizes[c]; }
  std::uint64_t element_order(int c) const { return data_->element_orders[c]; }
  int inverse_class(int c) const { return data_->inverse_class[c]; }
  int power_class(int c, std::uint64_t t) const {
    return data_->power_map[c][t % data_->element_orders[c]];
  }
  int class_of(const Permutation& x) const { return data_->classes.class_of(x); }

  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  const ClassFunction& irreducible(std::size_t i) const { return irreducibles_[i]; }
  std::uint64_t degree(std::size_t i) const { return degrees_[i]; }

  /// Index of the matching irreducible, or -1.
  int index_of_values(const std::vector<Cyclotomic>& values) const;

  ClassFunction trivial_character() const;
  ClassFunction make_class_function(std::vector<Cyclotomic> values) const;

private:
  CharacterTable() = default;

  std::uint64_t id_ = 0;
  PermGroup group_{1};
  std::shared_ptr<const ClassData> data_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::uint64_t> degrees_;

  void finalize(std::vector<std::vector<Cyclotomic>> values);
};

/// Builds the class bookkeeping on its own (used by compute and by tests).
ClassData build_class_data(const PermGroup& G);

/// Exact structural verification: class sizes, trivial-first ordering,
/// algebraic integrality, degree divisibility, sum of squares, and exact row
/// and column orthogonality.  Throws on any violation.
void verify_table_invariants(const CharacterTable& table);

namespace detail {
/// Raw Dixon-Schneider: irreducible value matrices in arbitrary order.
std::vector<std::vector<Cyclotomic>> dixon_irreducibles(const ClassData& data);
} // namespace detail

} // namespace blockscope
