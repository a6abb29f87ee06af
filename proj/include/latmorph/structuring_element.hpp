#pragma once

#include <cstddef>
#include <initializer_list>

#include "latmorph/pixel_set.hpp"
#include "latmorph/point_set.hpp"

namespace latmorph {

/// Which restriction set / quantifier sign a computation uses.
enum class Sign { Positive, Negative, Both };

/// Finite point set that contains the origin.
class StructuringElement {
 public:
  /// Throws InvalidArgument if the origin is missing.
  explicit StructuringElement(PointSet points);
  StructuringElement(std::initializer_list<Point> points);

  /// {0} in Z^m.
  static StructuringElement origin(std::size_t dimension);

  const PointSet& points() const { return points_; }
  operator const PointSet&() const { return points_; }  // NOLINT(google-explicit-constructor)

  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return points_.dimension(); }
  PointSet::const_iterator begin() const { return points_.begin(); }
  PointSet::const_iterator end() const { return points_.end(); }
  bool contains(const Point& p) const { return points_.contains(p); }

  friend bool operator==(const StructuringElement&, const StructuringElement&) = default;

 private:
  PointSet points_;
};

/// B(x; P, +) = {b ∈ B : x + b ∈ P}. Requires x ∈ P.
PointSet restrict_plus(const PointSet& b, const Point& x, const PixelSet& p);
/// B(x; P, -) = {b ∈ B : x - b ∈ P}. Requires x ∈ P.
PointSet restrict_minus(const PointSet& b, const Point& x, const PixelSet& p);

/// Q_ω = {x ∈ Z^m : ‖x‖₁ ≤ ω}.
StructuringElement l1_ball(int omega, std::size_t dimension);

/// Box Z^m ∩ [lo, hi] as a structuring element (must contain the origin).
StructuringElement box_element(const Point& lo, const Point& hi);

}  // namespace latmorph
