#include "latmorph/pixel_set.hpp"

#include "latmorph/error.hpp"

namespace latmorph {

PixelSet::PixelSet(PointSet points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("pixel set must be non-empty");
  if (!latmorph::is_rectangle(points_)) return;

  rect_ = bounding_box(points_);
  const std::size_t m = dimension();
  extents_.resize(m);
  strides_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    extents_[i] = static_cast<std::size_t>(rect_->hi[i] - rect_->lo[i] + 1);
  }
  std::size_t stride = 1;
  for (std::size_t i = m; i-- > 0;) {
    strides_[i] = stride;
    stride *= extents_[i];
  }
}

PixelSet PixelSet::rectangle(const Point& lo, const Point& hi) {
  require_same_dimension(lo, hi);
  const std::size_t m = lo.dimension();
  std::size_t volume = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (lo[i] > hi[i]) {
      throw InvalidArgument("rectangle requires lo <= hi componentwise, got lo=" + lo.to_string() +
                            " hi=" + hi.to_string());
    }
    volume *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }

  // Odometer over the box; the last axis varies fastest, which is exactly
  // lexicographic order.
  std::vector<Point> pts;
  pts.reserve(volume);
  Point cur = lo;
  for (std::size_t n = 0; n < volume; ++n) {
    pts.push_back(cur);
    for (std::size_t i = m; i-- > 0;) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
    }
  }
  return PixelSet(PointSet(m, std::move(pts)));
}

std::optional<std::size_t> PixelSet::index_of(const Point& p) const {
  if (p.dimension() != dimension()) return std::nullopt;
  if (!rect_) return points_.index_of(p);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] < rect_->lo[i] || p[i] > rect_->hi[i]) return std::nullopt;
    idx += static_cast<std::size_t>(p[i] - rect_->lo[i]) * strides_[i];
  }
  return idx;
}

}  // namespace latmorph
