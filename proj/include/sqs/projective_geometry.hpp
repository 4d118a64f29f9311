#pragma once

#include "sqs/combinatorics.hpp"
#include "sqs/finite_field.hpp"

#include <span>
#include <vector>

namespace sqs {

/// (q^n - 1) / (q - 1), the number of points of PG(n-1, q).
std::uint64_t point_count(unsigned n, std::uint64_t q);

/// A point of the projective line F_q together with infinity.
/// Indexing: a finite point is its field code, infinity is q.
struct LinePoint {
  bool infinite = false;
  Elem value = 0;

  static LinePoint at_infinity() { return {true, 0}; }
  static LinePoint finite(Elem x) { return {false, x}; }

  Point index(std::uint32_t q) const { return infinite ? q : value; }

  /// Throws DomainError for an index outside [0, q].
  static LinePoint from_index(Point i, std::uint32_t q);

  friend bool operator==(const LinePoint&, const LinePoint&) = default;
};

/// Points of PG(n-1, q) as homogeneous vectors whose first nonzero coordinate
/// is 1, indexed by rank in lexicographic order of those vectors.
class ProjectiveSpace {
public:
  /// Requires n >= 2. Throws DomainError when the point count is too large to tabulate.
  ProjectiveSpace(Field field, unsigned n);

  const Field& field() const { return field_; }
  unsigned dimension() const { return n_; }
  std::uint32_t size() const { return size_; }

  /// Scales `raw` so its first nonzero coordinate is 1. Throws on the zero vector.
  std::vector<Elem> normalize(std::span<const Elem> raw) const;

  /// Rank of an already normalized vector. Throws DomainError if not normalized.
  Point index(std::span<const Elem> normalized) const;

  Point index_of_raw(std::span<const Elem> raw) const;

  /// Inverse of index(). Throws DomainError for i >= size().
  std::span<const Elem> point(Point i) const;

private:
  Field field_;
  unsigned n_;
  std::uint32_t size_;
  std::vector<Elem> table_; // size_ rows of n_ coordinates
};

} // namespace sqs
