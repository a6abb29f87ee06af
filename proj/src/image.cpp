#include "latmorph/image.hpp"

#include <algorithm>
#include <cmath>

#include "latmorph/error.hpp"

namespace latmorph {

Image::Image(std::shared_ptr<const PixelSet> domain, std::vector<double> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (!domain_) throw InvalidArgument("image requires a domain");
  if (values_.size() != domain_->size()) {
    throw InvalidArgument("image has " + std::to_string(values_.size()) + " values for a domain of " +
                          std::to_string(domain_->size()) + " pixels");
  }
  for (double& v : values_) {
    if (!std::isfinite(v) || v < 0.0) throw InvalidArgument("image values must be finite and non-negative");
    if (v == 0.0) v = 0.0;  // fold -0.0
  }
}

Image::Image(PixelSet domain, std::vector<double> values)
    : Image(std::make_shared<const PixelSet>(std::move(domain)), std::move(values)) {}

Image Image::constant(std::shared_ptr<const PixelSet> domain, double value) {
  const std::size_t n = domain->size();
  return Image(std::move(domain), std::vector<double>(n, value));
}

double Image::at(const Point& p) const {
  const auto idx = domain_->index_of(p);
  if (!idx) throw DomainError("point " + p.to_string() + " is outside the image domain");
  return values_[*idx];
}

bool Image::is_binary() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

double Image::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

bool operator==(const Image& a, const Image& b) {
  if (a.domain_ != b.domain_ && *a.domain_ != *b.domain_) return false;
  return a.values_ == b.values_;
}

}  // namespace latmorph
