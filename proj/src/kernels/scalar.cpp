// Reference kernels. Every SIMD variant must agree with these bit for bit.

#include <algorithm>

#include "latmorph/kernels/kernels.hpp"

namespace latmorph::kernels::scalar {

namespace {

void min_accumulate(double* acc, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::min(acc[i], src[i]);
}

void max_accumulate(double* acc, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::max(acc[i], src[i]);
}

void min_gather(const double* in, const Csr& nbrs, double* out) {
  for (std::size_t r = 0; r < nbrs.rows(); ++r) {
    const std::uint32_t b = nbrs.offsets[r];
    const std::uint32_t e = nbrs.offsets[r + 1];
    double m = in[nbrs.indices[b]];
    for (std::uint32_t k = b + 1; k < e; ++k) m = std::min(m, in[nbrs.indices[k]]);
    out[r] = m;
  }
}

void max_gather(const double* in, const Csr& nbrs, double* out) {
  for (std::size_t r = 0; r < nbrs.rows(); ++r) {
    const std::uint32_t b = nbrs.offsets[r];
    const std::uint32_t e = nbrs.offsets[r + 1];
    double m = in[nbrs.indices[b]];
    for (std::uint32_t k = b + 1; k < e; ++k) m = std::max(m, in[nbrs.indices[k]]);
    out[r] = m;
  }
}

void and_gather(const BitBlock* in, const Csr& nbrs, BitBlock* out) {
  for (std::size_t r = 0; r < nbrs.rows(); ++r) {
    BitBlock acc{{~0ULL, ~0ULL, ~0ULL, ~0ULL}};
    for (std::uint32_t k = nbrs.offsets[r]; k < nbrs.offsets[r + 1]; ++k) {
      const BitBlock& v = in[nbrs.indices[k]];
      for (int w = 0; w < 4; ++w) acc.w[w] &= v.w[w];
    }
    out[r] = acc;
  }
}

void or_gather(const BitBlock* in, const Csr& nbrs, BitBlock* out) {
  for (std::size_t r = 0; r < nbrs.rows(); ++r) {
    BitBlock acc{{0, 0, 0, 0}};
    for (std::uint32_t k = nbrs.offsets[r]; k < nbrs.offsets[r + 1]; ++k) {
      const BitBlock& v = in[nbrs.indices[k]];
      for (int w = 0; w < 4; ++w) acc.w[w] |= v.w[w];
    }
    out[r] = acc;
  }
}

BitBlock zero_escape(const BitBlock* zero_side, const BitBlock* one_side, std::size_t n) {
  BitBlock acc{{0, 0, 0, 0}};
  for (std::size_t i = 0; i < n; ++i) {
    for (int w = 0; w < 4; ++w) acc.w[w] |= ~zero_side[i].w[w] & one_side[i].w[w];
  }
  return acc;
}

}  // namespace

const KernelTable kTable{
    Isa::Scalar, "scalar",   &min_accumulate, &max_accumulate, &min_gather,
    &max_gather, &and_gather, &or_gather,     &zero_escape,
};

}  // namespace latmorph::kernels::scalar
