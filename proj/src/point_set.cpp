#include "latmorph/point_set.hpp"

#include <algorithm>
#include <iterator>

#include "latmorph/error.hpp"

namespace latmorph {

PointSet::PointSet(std::size_t dimension) : dim_(dimension) {
  if (dimension == 0 || dimension > Point::kMaxDimension) {
    throw InvalidArgument("point set dimension out of range");
  }
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("cannot infer the dimension of an empty point list");
  dim_ = points_.front().dimension();
  normalize();
}

PointSet::PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

PointSet::PointSet(std::size_t dimension, std::vector<Point> points) : dim_(dimension), points_(std::move(points)) {
  if (dimension == 0 || dimension > Point::kMaxDimension) {
    throw InvalidArgument("point set dimension out of range");
  }
  normalize();
}

void PointSet::normalize() {
  for (const Point& p : points_) {
    if (p.dimension() != dim_) {
      throw DimensionMismatch("point " + p.to_string() + " does not have dimension " + std::to_string(dim_));
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same_dimension(*this, other);
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

std::optional<Point> PointSet::first_not_in(const PointSet& other) const {
  require_same_dimension(*this, other);
  for (const Point& p : points_) {
    if (!other.contains(p)) return p;
  }
  return std::nullopt;
}

PointSet PointSet::translated(const Point& v) const {
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const Point& p : points_) out.push_back(p + v);
  // Translation preserves lexicographic order.
  PointSet s(dim_);
  s.points_ = std::move(out);
  return s;
}

void require_same_dimension(const PointSet& a, const PointSet& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("point sets have dimensions " + std::to_string(a.dimension()) + " and " +
                            std::to_string(b.dimension()));
  }
}

Box bounding_box(const PointSet& s) {
  if (s.empty()) throw InvalidArgument("bounding box of an empty set");
  Box box{s[0], s[0]};
  for (const Point& p : s) {
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      box.lo[i] = std::min(box.lo[i], p[i]);
      box.hi[i] = std::max(box.hi[i], p[i]);
    }
  }
  return box;
}

bool is_rectangle(const PointSet& s) {
  if (s.empty()) return false;
  const Box box = bounding_box(s);
  std::size_t volume = 1;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    volume *= static_cast<std::size_t>(box.hi[i] - box.lo[i] + 1);
  }
  return volume == s.size();
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  require_same_dimension(a, b);
  std::vector<Point> out;
  out.reserve(a.size() * b.size());
  for (const Point& p : a) {
    for (const Point& q : b) out.push_back(p + q);
  }
  return PointSet(a.dimension(), std::move(out));
}

PointSet minkowski_diff(const PointSet& a, const PointSet& b) {
  require_same_dimension(a, b);
  std::vector<Point> out;
  out.reserve(a.size() * b.size());
  for (const Point& p : a) {
    for (const Point& q : b) out.push_back(p - q);
  }
  return PointSet(a.dimension(), std::move(out));
}

PointSet negate(const PointSet& b) {
  std::vector<Point> out;
  out.reserve(b.size());
  for (const Point& p : b) out.push_back(-p);
  return PointSet(b.dimension(), std::move(out));
}

bool is_symmetric(const PointSet& b) { return negate(b) == b; }

PointSet set_union(const PointSet& a, const PointSet& b) {
  require_same_dimension(a, b);
  std::vector<Point> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.dimension(), std::move(out));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  require_same_dimension(a, b);
  std::vector<Point> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.dimension(), std::move(out));
}

}  // namespace latmorph
