#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latmorph/point.hpp"

namespace latmorph {

/// Finite set of lattice points of one dimension, stored sorted
/// lexicographically and without duplicates. Iteration order is the
/// canonical order used for deterministic witness and counterexample
/// selection everywhere in the library.
class PointSet {
 public:
  using const_iterator = std::vector<Point>::const_iterator;

  /// Empty set of the given dimension.
  explicit PointSet(std::size_t dimension);
  /// Sorts and deduplicates. Throws InvalidArgument on an empty list
  /// (the dimension would be unknown) and DimensionMismatch on mixed points.
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points);
  /// Explicit dimension, which allows empty input.
  PointSet(std::size_t dimension, std::vector<Point> points);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const_iterator begin() const { return points_.begin(); }
  const_iterator end() const { return points_.end(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  bool contains(const Point& p) const;
  /// Position of p in canonical order, if present.
  std::optional<std::size_t> index_of(const Point& p) const;
  bool is_subset_of(const PointSet& other) const;
  /// Smallest (canonical order) element of *this missing from other.
  std::optional<Point> first_not_in(const PointSet& other) const;

  PointSet translated(const Point& v) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  void normalize();

  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

/// Componentwise bounding box of a non-empty set.
struct Box {
  Point lo;
  Point hi;
};
Box bounding_box(const PointSet& s);

/// True iff s equals Z^m ∩ [lo, hi] for its bounding box.
bool is_rectangle(const PointSet& s);

/// {a + b | a ∈ A, b ∈ B}.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);
/// {a - b | a ∈ A, b ∈ B}.
PointSet minkowski_diff(const PointSet& a, const PointSet& b);
/// {-x | x ∈ B}.
PointSet negate(const PointSet& b);
bool is_symmetric(const PointSet& b);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);

void require_same_dimension(const PointSet& a, const PointSet& b);

}  // namespace latmorph
