#pragma once

#include <cstdint>
#include <vector>

#include "latmorph/image.hpp"
#include "latmorph/kernels/kernels.hpp"
#include "latmorph/structuring_element.hpp"

namespace latmorph {

// Flat morphology on images over arbitrary pixel sets. Near the boundary of
// P only the part of the structuring element that stays inside P is used:
//
//   erosion(g, B)(x)  = min { g(x + b) : b ∈ B(x; P, +) }
//   dilation(g, B)(x) = max { g(x - b) : b ∈ B(x; P, -) }
//   opening = dilation ∘ erosion,  closing = erosion ∘ dilation
//
// Because 0 ∈ B the sets B(x; P, ±) are never empty. All operators only
// select existing values, so results compare exactly.

Image erosion(const Image& g, const StructuringElement& b);
Image dilation(const Image& g, const StructuringElement& b);
Image opening(const Image& g, const StructuringElement& b);
Image closing(const Image& g, const StructuringElement& b);

/// Binary image: 0 where g(x) ≤ t, 1 otherwise.
Image threshold(const Image& g, double t);

/// {x ∈ P : g(x) = 0}.
PointSet zero_set(const Image& g);

/// Pointwise f ≤ g. Throws DomainError when the domains differ.
bool image_leq(const Image& f, const Image& g);

/// Zero extension of g to (P + Bn) ∪ (P - Bn).
Image extend_image(const Image& g, const StructuringElement& bn);

/// Neighbour index lists of a pixel set under B: row x lists the indices of
/// x + b for b ∈ B(x; P, +) (Sign::Positive) or of x - b for b ∈ B(x; P, -)
/// (Sign::Negative), in the canonical order of B.
struct Neighborhood {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> indices;

  kernels::Csr csr() const { return {offsets, indices}; }
};

Neighborhood build_neighborhood(const PixelSet& p, const PointSet& b, Sign sign);

namespace detail {

enum class Backend { Auto, Gather, Raster };

// Erosion (Sign::Positive) or dilation (Sign::Negative) with an explicit
// backend. Raster requires a rectangular domain.
Image erode_or_dilate(const Image& g, const PointSet& b, Sign sign, Backend backend,
                      const kernels::KernelTable& k = kernels::active());

}  // namespace detail

}  // namespace latmorph
