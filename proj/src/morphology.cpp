#include "latmorph/morphology.hpp"

#include <algorithm>

#include "latmorph/error.hpp"

namespace latmorph {

Neighborhood build_neighborhood(const PixelSet& p, const PointSet& b, Sign sign) {
  if (sign == Sign::Both) throw InvalidArgument("neighbourhoods are built for a single sign");
  if (b.dimension() != p.dimension()) throw DimensionMismatch("structuring element and domain dimensions differ");
  Neighborhood n;
  n.offsets.reserve(p.size() + 1);
  n.indices.reserve(p.size() * b.size());
  n.offsets.push_back(0);
  for (const Point& x : p) {
    for (const Point& e : b) {
      const auto idx = p.index_of(sign == Sign::Positive ? x + e : x - e);
      if (idx) n.indices.push_back(static_cast<std::uint32_t>(*idx));
    }
    n.offsets.push_back(static_cast<std::uint32_t>(n.indices.size()));
  }
  return n;
}

namespace detail {

namespace {

Image gather_path(const Image& g, const PointSet& b, Sign sign, const kernels::KernelTable& k) {
  const Neighborhood n = build_neighborhood(g.domain(), b, sign);
  std::vector<double> out(g.size());
  if (sign == Sign::Positive) {
    k.min_gather(g.values().data(), n.csr(), out.data());
  } else {
    k.max_gather(g.values().data(), n.csr(), out.data());
  }
  return Image(g.domain_ptr(), std::move(out));
}

// For each offset v = ±b the valid x form a sub-box of the raster; walk it
// line by line along the contiguous last axis.
Image raster_path(const Image& g, const PointSet& b, Sign sign, const kernels::KernelTable& k) {
  const PixelSet& p = g.domain();
  const Box& box = *p.rectangle_descriptor();
  const auto& strides = p.strides();
  const std::size_t m = p.dimension();
  const double* in = g.values().data();
  std::vector<double> out(g.values().begin(), g.values().end());

  for (const Point& e : b) {
    if (e.is_zero()) continue;
    const Point v = sign == Sign::Positive ? e : -e;
    Point lo = box.lo;
    Point hi = box.hi;
    bool empty = false;
    std::ptrdiff_t shift = 0;
    for (std::size_t i = 0; i < m; ++i) {
      lo[i] = std::max(box.lo[i], box.lo[i] - v[i]);
      hi[i] = std::min(box.hi[i], box.hi[i] - v[i]);
      if (lo[i] > hi[i]) empty = true;
      shift += static_cast<std::ptrdiff_t>(v[i]) * static_cast<std::ptrdiff_t>(strides[i]);
    }
    if (empty) continue;

    const std::size_t run = static_cast<std::size_t>(hi[m - 1] - lo[m - 1] + 1);
    Point cur = lo;
    while (true) {
      std::size_t base = 0;
      for (std::size_t i = 0; i < m; ++i) base += static_cast<std::size_t>(cur[i] - box.lo[i]) * strides[i];
      const double* src = in + static_cast<std::ptrdiff_t>(base) + shift;
      if (sign == Sign::Positive) {
        k.min_accumulate(out.data() + base, src, run);
      } else {
        k.max_accumulate(out.data() + base, src, run);
      }
      // Advance the odometer over the leading m-1 axes.
      std::size_t axis = m - 1;
      bool done = true;
      while (axis-- > 0) {
        if (cur[axis] < hi[axis]) {
          ++cur[axis];
          done = false;
          break;
        }
        cur[axis] = lo[axis];
      }
      if (done) break;
    }
  }
  return Image(g.domain_ptr(), std::move(out));
}

}  // namespace

Image erode_or_dilate(const Image& g, const PointSet& b, Sign sign, Backend backend, const kernels::KernelTable& k) {
  if (b.dimension() != g.domain().dimension()) {
    throw DimensionMismatch("structuring element dimension " + std::to_string(b.dimension()) +
                            " does not match image dimension " + std::to_string(g.domain().dimension()));
  }
  if (!b.contains(Point::zero(b.dimension()))) throw InvalidArgument("structuring element must contain the origin");
  if (sign == Sign::Both) throw InvalidArgument("erosion/dilation take a single sign");
  if (backend == Backend::Auto) backend = g.domain().is_rectangle() ? Backend::Raster : Backend::Gather;
  if (backend == Backend::Raster) {
    if (!g.domain().is_rectangle()) throw InvalidArgument("raster backend requires a rectangular domain");
    return raster_path(g, b, sign, k);
  }
  return gather_path(g, b, sign, k);
}

}  // namespace detail

Image erosion(const Image& g, const StructuringElement& b) {
  return detail::erode_or_dilate(g, b, Sign::Positive, detail::Backend::Auto);
}

Image dilation(const Image& g, const StructuringElement& b) {
  return detail::erode_or_dilate(g, b, Sign::Negative, detail::Backend::Auto);
}

Image opening(const Image& g, const StructuringElement& b) { return dilation(erosion(g, b), b); }

Image closing(const Image& g, const StructuringElement& b) { return erosion(dilation(g, b), b); }

Image threshold(const Image& g, double t) {
  if (!(t >= 0.0)) throw InvalidArgument("threshold must be non-negative");
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] <= t ? 0.0 : 1.0;
  return Image(g.domain_ptr(), std::move(out));
}

PointSet zero_set(const Image& g) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0.0) pts.push_back(g.domain()[i]);
  }
  // Domain order is canonical, so this is already sorted.
  return PointSet(g.domain().dimension(), std::move(pts));
}

bool image_leq(const Image& f, const Image& g) {
  if (f.domain_ptr() != g.domain_ptr() && f.domain() != g.domain()) {
    throw DomainError("image_leq requires images on the same domain");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > g[i]) return false;
  }
  return true;
}

Image extend_image(const Image& g, const StructuringElement& bn) {
  const PointSet& p = g.domain().points();
  auto domain = std::make_shared<const PixelSet>(set_union(minkowski_sum(p, bn), minkowski_diff(p, bn)));
  std::vector<double> values(domain->size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) values[*domain->index_of(p[i])] = g[i];
  return Image(std::move(domain), std::move(values));
}

}  // namespace latmorph
