#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace latmorph::kernels {

/// 256 binary images bit-sliced into one block: lane l of pixel i holds the
/// value of pixel i in image l.
struct alignas(32) BitBlock {
  std::uint64_t w[4];

  friend bool operator==(const BitBlock&, const BitBlock&) = default;
};

inline constexpr std::size_t kLanesPerBlock = 256;

/// Compressed neighbour lists: row i owns indices[offsets[i] .. offsets[i+1]).
struct Csr {
  std::span<const std::uint32_t> offsets;
  std::span<const std::uint32_t> indices;
  std::size_t rows() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;

  // acc[i] = min(acc[i], src[i]) / max(...) for i < n.
  void (*min_accumulate)(double* acc, const double* src, std::size_t n);
  void (*max_accumulate)(double* acc, const double* src, std::size_t n);

  // Grey-level min/max over neighbour lists: out[i] = min_{j ∈ row i} in[j].
  void (*min_gather)(const double* in, const Csr& nbrs, double* out);
  void (*max_gather)(const double* in, const Csr& nbrs, double* out);

  // Bit-sliced binary erosion / dilation: out[i] = AND / OR of in[j], j ∈ row i.
  void (*and_gather)(const BitBlock* in, const Csr& nbrs, BitBlock* out);
  void (*or_gather)(const BitBlock* in, const Csr& nbrs, BitBlock* out);

  // Lanes where some pixel is 0 in `zero_side` and 1 in `one_side`:
  // OR_i (~zero_side[i] & one_side[i]).
  BitBlock (*zero_escape)(const BitBlock* zero_side, const BitBlock* one_side, std::size_t n);
};

bool isa_supported(Isa isa);
/// Table for a specific ISA; throws InvalidArgument if the CPU or the build lacks it.
const KernelTable& table(Isa isa);
/// Best supported table, unless overridden by select() or LATMORPH_ISA=scalar|avx2.
const KernelTable& active();
/// Process-wide override (tests and the CLI --isa flag).
void select(Isa isa);

std::string_view isa_name(Isa isa);

namespace scalar {
extern const KernelTable kTable;
}
#if defined(LATMORPH_HAVE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}
#endif

}  // namespace latmorph::kernels
