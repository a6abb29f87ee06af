#pragma once

#include <memory>
#include <span>
#include <vector>

#include "latmorph/pixel_set.hpp"

namespace latmorph {

/// Non-negative real function on a pixel set. Values are stored in the
/// domain's canonical order; the domain is shared between images derived
/// from one another.
class Image {
 public:
  /// Throws InvalidArgument on size mismatch or on negative / non-finite values.
  Image(std::shared_ptr<const PixelSet> domain, std::vector<double> values);
  Image(PixelSet domain, std::vector<double> values);

  static Image constant(std::shared_ptr<const PixelSet> domain, double value);

  const PixelSet& domain() const { return *domain_; }
  const std::shared_ptr<const PixelSet>& domain_ptr() const { return domain_; }
  std::size_t size() const { return values_.size(); }

  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  /// Value at a domain point; throws DomainError otherwise.
  double at(const Point& p) const;

  /// Range ⊆ {0, 1}.
  bool is_binary() const;
  double max_value() const;

  /// Same domain and exactly equal values.
  friend bool operator==(const Image& a, const Image& b);

 private:
  std::shared_ptr<const PixelSet> domain_;
  std::vector<double> values_;
};

}  // namespace latmorph
