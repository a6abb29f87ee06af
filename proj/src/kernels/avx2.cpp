// AVX2 variants, compiled with -mavx2 and only reached after a runtime CPU check.
//
// min/max use _mm256_min_pd / _mm256_max_pd. For the non-negative finite
// values images carry these select one of their operands exactly like
// std::min / std::max, so results match the scalar kernels bit for bit.

#include <immintrin.h>

#include <algorithm>

#include "latmorph/kernels/kernels.hpp"

namespace latmorph::kernels::avx2 {

namespace {

void min_accumulate(double* acc, const double* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(acc + i);
    const __m256d s = _mm256_loadu_pd(src + i);
    // min_pd returns the second operand on ties; operands are equal then.
    _mm256_storeu_pd(acc + i, _mm256_min_pd(s, a));
  }
  for (; i < n; ++i) acc[i] = std::min(acc[i], src[i]);
}

void max_accumulate(double* acc, const double* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(acc + i);
    const __m256d s = _mm256_loadu_pd(src + i);
    _mm256_storeu_pd(acc + i, _mm256_max_pd(s, a));
  }
  for (; i < n; ++i) acc[i] = std::max(acc[i], src[i]);
}

// Rows are short (|B| entries) and irregular; process four output pixels at
// a time with gathers when all four rows have the same length, which is the
// common case in the interior of a domain.
template <bool IsMin>
void gather_reduce(const double* in, const Csr& nbrs, double* out) {
  const std::size_t rows = nbrs.rows();
  const std::uint32_t* off = nbrs.offsets.data();
  const std::uint32_t* idx = nbrs.indices.data();
  std::size_t r = 0;
  for (; r + 4 <= rows; r += 4) {
    const std::uint32_t len = off[r + 1] - off[r];
    if (off[r + 2] - off[r + 1] != len || off[r + 3] - off[r + 2] != len || off[r + 4] - off[r + 3] != len) {
      for (std::size_t q = r; q < r + 4; ++q) {
        double m = in[idx[off[q]]];
        for (std::uint32_t k = off[q] + 1; k < off[q + 1]; ++k) {
          m = IsMin ? std::min(m, in[idx[k]]) : std::max(m, in[idx[k]]);
        }
        out[q] = m;
      }
      continue;
    }
    __m128i cursor = _mm_setr_epi32(static_cast<int>(off[r]), static_cast<int>(off[r + 1]),
                                    static_cast<int>(off[r + 2]), static_cast<int>(off[r + 3]));
    const __m128i one = _mm_set1_epi32(1);
    const int* base = reinterpret_cast<const int*>(idx);
    __m128i pix = _mm_i32gather_epi32(base, cursor, 4);
    __m256d acc = _mm256_i32gather_pd(in, pix, 8);
    for (std::uint32_t k = 1; k < len; ++k) {
      cursor = _mm_add_epi32(cursor, one);
      pix = _mm_i32gather_epi32(base, cursor, 4);
      const __m256d v = _mm256_i32gather_pd(in, pix, 8);
      acc = IsMin ? _mm256_min_pd(v, acc) : _mm256_max_pd(v, acc);
    }
    _mm256_storeu_pd(out + r, acc);
  }
  for (; r < rows; ++r) {
    double m = in[idx[off[r]]];
    for (std::uint32_t k = off[r] + 1; k < off[r + 1]; ++k) {
      m = IsMin ? std::min(m, in[idx[k]]) : std::max(m, in[idx[k]]);
    }
    out[r] = m;
  }
}

void min_gather(const double* in, const Csr& nbrs, double* out) { gather_reduce<true>(in, nbrs, out); }
void max_gather(const double* in, const Csr& nbrs, double* out) { gather_reduce<false>(in, nbrs, out); }

inline __m256i load(const BitBlock& b) { return _mm256_load_si256(reinterpret_cast<const __m256i*>(b.w)); }
inline void store(BitBlock& b, __m256i v) { _mm256_store_si256(reinterpret_cast<__m256i*>(b.w), v); }

void and_gather(const BitBlock* in, const Csr& nbrs, BitBlock* out) {
  for (std::size_t r = 0; r < nbrs.rows(); ++r) {
    __m256i acc = _mm256_set1_epi64x(-1);
    for (std::uint32_t k = nbrs.offsets[r]; k < nbrs.offsets[r + 1]; ++k) {
      acc = _mm256_and_si256(acc, load(in[nbrs.indices[k]]));
    }
    store(out[r], acc);
  }
}

void or_gather(const BitBlock* in, const Csr& nbrs, BitBlock* out) {
  for (std::size_t r = 0; r < nbrs.rows(); ++r) {
    __m256i acc = _mm256_setzero_si256();
    for (std::uint32_t k = nbrs.offsets[r]; k < nbrs.offsets[r + 1]; ++k) {
      acc = _mm256_or_si256(acc, load(in[nbrs.indices[k]]));
    }
    store(out[r], acc);
  }
}

BitBlock zero_escape(const BitBlock* zero_side, const BitBlock* one_side, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; ++i) {
    // andnot(a, b) = ~a & b
    acc = _mm256_or_si256(acc, _mm256_andnot_si256(load(zero_side[i]), load(one_side[i])));
  }
  BitBlock out;
  store(out, acc);
  return out;
}

}  // namespace

const KernelTable kTable{
    Isa::Avx2,   "avx2",      &min_accumulate, &max_accumulate, &min_gather,
    &max_gather, &and_gather, &or_gather,      &zero_escape,
};

}  // namespace latmorph::kernels::avx2
