#include <atomic>
#include <cstdlib>
#include <string>

#include "latmorph/error.hpp"
#include "latmorph/kernels/kernels.hpp"

namespace latmorph::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(LATMORPH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* detect() {
  if (const char* env = std::getenv("LATMORPH_ISA")) {
    const std::string want(env);
    if (want == "scalar") return &scalar::kTable;
    if (want == "avx2" && isa_supported(Isa::Avx2)) return &table(Isa::Avx2);
  }
  return isa_supported(Isa::Avx2) ? &table(Isa::Avx2) : &scalar::kTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> t{detect()};
  return t;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!isa_supported(isa)) throw InvalidArgument(std::string("kernel ISA not available: ") + std::string(isa_name(isa)));
#if defined(LATMORPH_HAVE_AVX2)
  if (isa == Isa::Avx2) return avx2::kTable;
#endif
  return scalar::kTable;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) { current().store(&table(isa), std::memory_order_release); }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace latmorph::kernels
