#pragma once

#include <cstdint>
#include <optional>

#include "latmorph/image.hpp"
#include "latmorph/kernels/kernels.hpp"
#include "latmorph/structuring_element.hpp"

namespace latmorph {

inline constexpr std::size_t kDefaultOracleCap = 20;
inline constexpr std::size_t kMaxOracleCap = 40;

/// All 2^|P| binary images on P. Image k sets pixel i (canonical order) to
/// bit i of k.
class BinaryImageEnumerator {
 public:
  explicit BinaryImageEnumerator(const PixelSet& p, std::size_t cap = kDefaultOracleCap);

  std::uint64_t count() const { return std::uint64_t{1} << domain_->size(); }
  Image image(std::uint64_t index) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t k = 0; k < count(); ++k) f(image(k));
  }

 private:
  std::shared_ptr<const PixelSet> domain_;
};

struct OracleCounterexample {
  std::uint64_t index = 0;
  Image image;
  /// First pixel (canonical order) where the zero-set inclusion breaks.
  Point pixel;
};

struct PropertyVerdict {
  bool holds_opening = true;
  bool holds_closing = true;
  /// Least violating image for each property.
  std::optional<OracleCounterexample> opening_counterexample;
  std::optional<OracleCounterexample> closing_counterexample;
  std::uint64_t images_checked = 0;

  bool holds() const { return holds_opening && holds_closing; }
};

struct OracleOptions {
  std::size_t cap = kDefaultOracleCap;
  /// Worker threads; 0 picks hardware concurrency.
  unsigned jobs = 0;
  const kernels::KernelTable* kernels = nullptr;
};

/// Decides, over every binary image g on P,
///   zero_set(O_{B1}(g)) ⊆ zero_set(O_{B2}(g))   (opening)
///   zero_set(C_{B2}(g)) ⊆ zero_set(C_{B1}(g))   (closing).
///
/// Binary images suffice for all non-negative images. Every operator commutes
/// with the threshold τ_0, and τ_0(h)(x) = 0 exactly when h(x) = 0, so
/// zero_set(O_B(g)) = zero_set(τ_0(O_B(g))) = zero_set(O_B(τ_0(g))). The zero
/// sets for g therefore coincide with those for the binary image τ_0(g).
///
/// Images are processed 256 at a time, one bit lane per image; erosion is an
/// AND and dilation an OR over the neighbour lanes.
PropertyVerdict property_holds(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p,
                               const OracleOptions& options = {});

struct EquivalenceResult {
  bool agrees = false;
  PropertyVerdict oracle;
  bool weak_opening = false;
  bool weak_closing = false;
};

/// Compares the oracle against the weak checks in the sign bound to each
/// operator. Requires B1 ⊆ B2.
EquivalenceResult equivalence_audit(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p,
                                    const OracleOptions& options = {});

/// Finite image violating the zero-set inclusion at `pixel`, built from a
/// whole-lattice counterexample b2 (no b1 ∈ B1 has B1 + (b2 - b1) ⊆ B2).
struct WholeSpaceWitness {
  Image image;
  Point pixel;
};

/// g = χ_{B2} on B2 ∪ (b2 - B2 + B2); opening preservation fails at b2.
WholeSpaceWitness opening_witness(const StructuringElement& b2_set, const Point& b2);
/// h = 1 - χ_{-B2} on (-B2) ∪ (-b2 + B2 - B2); closing preservation fails at -b2.
WholeSpaceWitness closing_witness(const StructuringElement& b2_set, const Point& b2);

/// True when zero_set(O_{B1}(g)) has a pixel outside zero_set(O_{B2}(g)) at `pixel`.
bool opening_violated_at(const Image& g, const StructuringElement& b1, const StructuringElement& b2,
                         const Point& pixel);
bool closing_violated_at(const Image& g, const StructuringElement& b1, const StructuringElement& b2,
                         const Point& pixel);

}  // namespace latmorph
