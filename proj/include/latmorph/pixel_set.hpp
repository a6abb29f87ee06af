#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latmorph/point_set.hpp"

namespace latmorph {

/// Image domain P: a non-empty finite subset of Z^m.
///
/// When the set is an axis-aligned box the descriptor (lo, hi) is kept and
/// index lookups become arithmetic; the points are stored row-major in
/// canonical order either way, so index i always names the same point.
class PixelSet {
 public:
  explicit PixelSet(PointSet points);

  /// Z^m ∩ ∏[lo_i, hi_i]. Throws InvalidArgument when lo_i > hi_i.
  static PixelSet rectangle(const Point& lo, const Point& hi);

  const PointSet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return points_.dimension(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  PointSet::const_iterator begin() const { return points_.begin(); }
  PointSet::const_iterator end() const { return points_.end(); }

  bool contains(const Point& p) const { return index_of(p).has_value(); }
  std::optional<std::size_t> index_of(const Point& p) const;

  bool is_rectangle() const { return rect_.has_value(); }
  const std::optional<Box>& rectangle_descriptor() const { return rect_; }
  /// Extent along each axis; only meaningful for rectangles.
  const std::vector<std::size_t>& extents() const { return extents_; }
  /// Linear stride per axis (last axis contiguous); only for rectangles.
  const std::vector<std::size_t>& strides() const { return strides_; }

  friend bool operator==(const PixelSet& a, const PixelSet& b) { return a.points_ == b.points_; }

 private:
  PointSet points_;
  std::optional<Box> rect_;
  std::vector<std::size_t> extents_;
  std::vector<std::size_t> strides_;
};

}  // namespace latmorph
