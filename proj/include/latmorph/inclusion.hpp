#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latmorph/pixel_set.hpp"
#include "latmorph/structuring_element.hpp"

namespace latmorph {

/// Shift inclusion (S) or weak shift inclusion (WS).
enum class Relation { Shift, WeakShift };

/// Domain an inclusion is decided against: a finite pixel set P, or the
/// whole lattice Z^m. On Z^m every restriction set B(x; Z^m, ±) is B itself
/// and the conditions are translation invariant, so a single representative
/// x = 0 decides them exactly.
class Scope {
 public:
  Scope(const PixelSet& p);  // NOLINT(google-explicit-constructor)
  explicit Scope(std::shared_ptr<const PixelSet> p);
  static Scope whole_space(std::size_t dimension);

  bool is_whole_space() const { return !pixels_; }
  /// Only valid for restricted scopes.
  const PixelSet& pixels() const { return *pixels_; }
  std::size_t dimension() const { return dim_; }

 private:
  Scope() = default;
  std::shared_ptr<const PixelSet> pixels_;
  std::size_t dim_ = 0;
};

struct InclusionMode {
  Relation relation = Relation::Shift;
  Sign sign = Sign::Both;
  bool whole_space = false;
};

/// One choice made while proving a true verdict: for (x, b2) the first b1
/// (canonical order) that satisfies the condition. `x` is empty on Z^m,
/// where the entries form the map φ : B2 → B1.
struct WitnessEntry {
  Sign sign = Sign::Positive;
  std::optional<Point> x;
  Point b2;
  Point b1;
};

struct Counterexample {
  enum class Kind { NotSubset, Positive, Negative };
  Kind kind = Kind::Positive;
  /// Pixel where every candidate failed (restricted scopes only).
  std::optional<Point> x;
  /// The b2 no candidate b1 covers; for NotSubset the first b1 ∉ B2.
  Point element;
};

struct InclusionReport {
  bool verdict = false;
  InclusionMode mode;
  std::vector<WitnessEntry> witness;
  std::optional<Counterexample> counterexample;
  /// Distinct b2 - φ(b2) (whole-space shift inclusion only); B2 is the union
  /// of the translates B1 + v.
  std::vector<Point> translates;
  /// Component verdicts; unset components were not part of the mode.
  std::optional<bool> subset;
  std::optional<bool> positive;
  std::optional<bool> negative;
  /// Number of (x, b2, b1) candidate triples examined.
  std::uint64_t tuples_evaluated = 0;
};

struct CheckOptions {
  bool record_witness = true;
};

/// General entry point. Sign::Both adds the B1 ⊆ B2 requirement; a single
/// sign checks only that sign's condition.
InclusionReport check(const StructuringElement& b1, const StructuringElement& b2, const Scope& scope,
                      Relation relation, Sign sign, const CheckOptions& options = {});

// Shift inclusion with respect to P.
InclusionReport check_positive(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p);
InclusionReport check_negative(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p);
InclusionReport check_shift_inclusion(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p);

/// Shift inclusion on Z^m: B1 ⊆ B2 and every b2 ∈ B2 has some b1 ∈ B1 with
/// B1 + (b2 - b1) ⊆ B2. On success the report carries φ and the translates.
InclusionReport check_whole_space(const StructuringElement& b1, const StructuringElement& b2);

// Weak shift inclusion with respect to P.
InclusionReport check_weak_positive(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p);
InclusionReport check_weak_negative(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p);
InclusionReport check_weak_shift_inclusion(const StructuringElement& b1, const StructuringElement& b2,
                                           const PixelSet& p);
InclusionReport check_weak_whole_space(const StructuringElement& b1, const StructuringElement& b2);

/// Sign whose weak condition is equivalent to zero-set preservation under
/// opening (Negative) and closing (Positive).
inline constexpr Sign kOpeningSign = Sign::Negative;
inline constexpr Sign kClosingSign = Sign::Positive;

/// Reports for each consecutive pair (B_i, B_{i+1}) under Sign::Both.
/// Non-consecutive pairs follow by transitivity. Sequences shorter than two
/// elements are vacuously nested and yield no reports.
std::vector<InclusionReport> verify_sequence(std::span<const StructuringElement> sequence, const Scope& scope,
                                             Relation relation, const CheckOptions& options = {});
bool all_hold(std::span<const InclusionReport> reports);

// ---------------------------------------------------------------------------
// Implication audit between the four relations S,M / S,P / WS,M / WS,P.

enum class RelationKind { ShiftWhole, ShiftRestricted, WeakWhole, WeakRestricted };
std::string relation_kind_name(RelationKind k);

struct AuditInstance {
  std::string name;
  StructuringElement b1;
  StructuringElement b2;
  PixelSet p;
};

struct InstanceVerdicts {
  std::string name;
  bool shift_whole = false;
  bool shift_restricted = false;
  bool weak_whole = false;
  bool weak_restricted = false;

  bool get(RelationKind k) const;
};

struct ImplicationClaim {
  std::string label;  // "a", "a'", "b", ..., "g"
  RelationKind from;
  RelationKind to;
  bool expected = false;
  /// True iff no corpus instance satisfies `from` but not `to`.
  bool observed = false;
  /// First instance with `from` true and `to` false, if any.
  std::optional<std::string> falsified_by;
};

struct ImplicationMatrix {
  std::vector<ImplicationClaim> claims;
  std::vector<InstanceVerdicts> instances;

  bool consistent() const;
};

ImplicationMatrix audit_implication_matrix(std::span<const AuditInstance> corpus);

}  // namespace latmorph
