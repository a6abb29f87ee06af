#include "latmorph/structuring_element.hpp"

#include <cstdlib>

#include "latmorph/error.hpp"

namespace latmorph {

StructuringElement::StructuringElement(PointSet points) : points_(std::move(points)) {
  if (!points_.contains(Point::zero(points_.dimension()))) {
    throw InvalidArgument("structuring element must contain the origin");
  }
}

StructuringElement::StructuringElement(std::initializer_list<Point> points) : StructuringElement(PointSet(points)) {}

StructuringElement StructuringElement::origin(std::size_t dimension) {
  return StructuringElement(PointSet(dimension, {Point::zero(dimension)}));
}

namespace {

template <typename Combine>
PointSet restrict_by(const PointSet& b, const Point& x, const PixelSet& p, Combine combine) {
  if (b.dimension() != p.dimension()) throw DimensionMismatch("structuring element and pixel set dimensions differ");
  if (!p.contains(x)) throw DomainError("restriction point " + x.to_string() + " is not in the pixel set");
  std::vector<Point> out;
  for (const Point& e : b) {
    if (p.contains(combine(x, e))) out.push_back(e);
  }
  return PointSet(b.dimension(), std::move(out));
}

}  // namespace

PointSet restrict_plus(const PointSet& b, const Point& x, const PixelSet& p) {
  return restrict_by(b, x, p, [](const Point& a, const Point& e) { return a + e; });
}

PointSet restrict_minus(const PointSet& b, const Point& x, const PixelSet& p) {
  return restrict_by(b, x, p, [](const Point& a, const Point& e) { return a - e; });
}

StructuringElement l1_ball(int omega, std::size_t dimension) {
  if (omega < 0) throw InvalidArgument("L1 ball radius must be non-negative");
  Point lo = Point::zero(dimension);
  Point hi = Point::zero(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    lo[i] = -omega;
    hi[i] = omega;
  }
  std::vector<Point> pts;
  for (const Point& q : PixelSet::rectangle(lo, hi)) {
    if (q.l1_norm() <= omega) pts.push_back(q);
  }
  return StructuringElement(PointSet(dimension, std::move(pts)));
}

StructuringElement box_element(const Point& lo, const Point& hi) {
  return StructuringElement(PixelSet::rectangle(lo, hi).points());
}

}  // namespace latmorph
