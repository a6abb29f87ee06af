#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace latmorph {

/// A lattice point of Z^m. Coordinates live inline; the dimension is a
/// runtime value bounded by kMaxDimension.
///
/// Ordering is lexicographic on the coordinates (points of different
/// dimension order by dimension first, but mixing dimensions in one set is
/// rejected elsewhere).
class Point {
 public:
  using Coord = std::int32_t;
  static constexpr std::size_t kMaxDimension = 8;

  Point() = default;
  Point(std::initializer_list<Coord> coords);
  explicit Point(std::span<const Coord> coords);

  static Point zero(std::size_t dimension);
  /// Standard basis vector e_axis (axis is zero-based).
  static Point unit(std::size_t dimension, std::size_t axis);

  std::size_t dimension() const { return dim_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Coord> coords() const { return {coords_.data(), dim_}; }

  bool is_zero() const;
  /// L1 norm, |x_1| + ... + |x_m|.
  std::int64_t l1_norm() const;

  Point operator+(const Point& other) const;
  Point operator-(const Point& other) const;
  Point operator-() const;
  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

  /// "(x, y, ...)" for diagnostics.
  std::string to_string() const;

 private:
  // Unused trailing coordinates stay zero so the defaulted comparisons are
  // lexicographic on the active prefix.
  std::uint8_t dim_ = 0;
  std::array<Coord, kMaxDimension> coords_{};
};

void require_same_dimension(const Point& a, const Point& b);

}  // namespace latmorph
