#include "latmorph/point.hpp"

#include <cstdlib>

#include "latmorph/error.hpp"

namespace latmorph {

namespace {

void check_dimension(std::size_t dim) {
  if (dim == 0 || dim > Point::kMaxDimension) {
    throw InvalidArgument("point dimension must be in [1, " + std::to_string(Point::kMaxDimension) +
                          "], got " + std::to_string(dim));
  }
}

}  // namespace

Point::Point(std::initializer_list<Coord> coords) : Point(std::span<const Coord>(coords.begin(), coords.size())) {}

Point::Point(std::span<const Coord> coords) {
  check_dimension(coords.size());
  dim_ = static_cast<std::uint8_t>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
}

Point Point::zero(std::size_t dimension) {
  check_dimension(dimension);
  Point p;
  p.dim_ = static_cast<std::uint8_t>(dimension);
  return p;
}

Point Point::unit(std::size_t dimension, std::size_t axis) {
  Point p = zero(dimension);
  if (axis >= dimension) throw InvalidArgument("unit vector axis out of range");
  p.coords_[axis] = 1;
  return p;
}

bool Point::is_zero() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

std::int64_t Point::l1_norm() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < dim_; ++i) sum += std::llabs(coords_[i]);
  return sum;
}

void require_same_dimension(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("dimension mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

Point Point::operator+(const Point& other) const {
  Point r = *this;
  r += other;
  return r;
}

Point Point::operator-(const Point& other) const {
  Point r = *this;
  r -= other;
  return r;
}

Point Point::operator-() const {
  Point r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = -coords_[i];
  return r;
}

Point& Point::operator+=(const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

std::string Point::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += ", ";
    s += std::to_string(coords_[i]);
  }
  s += ")";
  return s;
}

}  // namespace latmorph
