#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace blockscope {

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Composition acts on the right: (a * b)[p] = b[a[p]], i.e. a is applied
/// first.  Conjugation follows the same convention: x^g = g^-1 * x * g.
class Permutation {
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(unsigned degree);

  /// Takes ownership of an image array; throws input_error unless it is a
  /// bijection on {0..degree-1}.
  explicit Permutation(std::vector<unsigned> images);

  /// Builds from disjoint-or-not cycles of 0-based points.  Later cycles are
  /// composed after earlier ones.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned point) const { return images_[point]; }
  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  /// g^-1 * (*this) * g.
  Permutation conjugated_by(const Permutation& g) const;

  std::uint64_t order() const;

  /// Disjoint cycle decomposition; fixed points omitted, each cycle starting
  /// at its least point, cycles ordered by least point.
  std::vector<std::vector<unsigned>> cycles() const;

  bool operator==(const Permutation&) const = default;
  /// Lexicographic order on image arrays (shorter degree first).
  auto operator<=>(const Permutation& rhs) const {
    return images_ <=> rhs.images_;
  }

private:
  std::vector<unsigned> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

} // namespace blockscope
