#pragma once

#include <span>
#include <vector>

#include "latmorph/image.hpp"
#include "latmorph/inclusion.hpp"
#include "latmorph/structuring_element.hpp"

namespace latmorph {

enum class FilterMode { Opening, Closing };

struct GranulometryStep {
  std::size_t index = 0;
  std::size_t zero_pixels = 0;
  Image filtered;
};

struct GranulometryResult {
  FilterMode mode = FilterMode::Opening;
  std::vector<GranulometryStep> steps;
  /// Per consecutive pair: B_i ⊆ B_{i+1} and the weak condition in the
  /// sign bound to `mode`, checked on the image's own domain.
  std::vector<InclusionReport> verification;
  bool verified = false;
  bool forced = false;

  /// Opening zero sets grow along a nested sequence; closing zero sets shrink.
  bool monotone() const;
};

/// Applies each element of `sequence` to g and records |zero_set|. Throws
/// UnverifiedSequence when the sequence is not nested on g's domain, unless
/// `force` is set.
GranulometryResult granulometric_curve(const Image& g, std::span<const StructuringElement> sequence, FilterMode mode,
                                       bool force = false);

}  // namespace latmorph
