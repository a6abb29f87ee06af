#include "latmorph/inclusion.hpp"

#include <algorithm>

#include "latmorph/error.hpp"

namespace latmorph {

Scope::Scope(const PixelSet& p) : pixels_(std::make_shared<const PixelSet>(p)), dim_(p.dimension()) {}

Scope::Scope(std::shared_ptr<const PixelSet> p) : pixels_(std::move(p)), dim_(pixels_->dimension()) {}

Scope Scope::whole_space(std::size_t dimension) {
  Scope s;
  s.dim_ = dimension;
  return s;
}

namespace {

struct Scan {
  bool ok = true;
  std::optional<Counterexample> counterexample;
  std::vector<WitnessEntry> witness;
  std::uint64_t tuples = 0;
};

// Pixel-membership and iteration over the representative points of a scope.
class Domain {
 public:
  explicit Domain(const Scope& s) : scope_(s) {
    if (s.is_whole_space()) {
      reps_.push_back(Point::zero(s.dimension()));
    } else {
      reps_ = s.pixels().points().points();
    }
  }
  bool contains(const Point& p) const { return scope_.is_whole_space() || scope_.pixels().contains(p); }
  const std::vector<Point>& representatives() const { return reps_; }
  bool whole() const { return scope_.is_whole_space(); }

 private:
  const Scope& scope_;
  std::vector<Point> reps_;
};

// fits[i][j]: B1 + (b2_i - b1_j) ⊆ B2. Independent of x, so shift checks
// compute it once.
std::vector<std::vector<char>> translate_fits(const PointSet& b1, const PointSet& b2) {
  std::vector<std::vector<char>> fits(b2.size(), std::vector<char>(b1.size(), 0));
  for (std::size_t i = 0; i < b2.size(); ++i) {
    for (std::size_t j = 0; j < b1.size(); ++j) {
      const Point v = b2[i] - b1[j];
      fits[i][j] = std::all_of(b1.begin(), b1.end(), [&](const Point& e) { return b2.contains(e + v); });
    }
  }
  return fits;
}

Scan scan_shift(const PointSet& b1, const PointSet& b2, const Domain& dom, Sign sign, bool record) {
  const auto fits = translate_fits(b1, b2);
  const Counterexample::Kind kind = sign == Sign::Positive ? Counterexample::Kind::Positive
                                                           : Counterexample::Kind::Negative;
  auto step = [&](const Point& x, const Point& b) { return sign == Sign::Positive ? x + b : x - b; };

  Scan scan;
  for (const Point& x : dom.representatives()) {
    for (std::size_t i = 0; i < b2.size(); ++i) {
      if (!dom.contains(step(x, b2[i]))) continue;
      std::optional<std::size_t> chosen;
      for (std::size_t j = 0; j < b1.size(); ++j) {
        if (!dom.contains(step(x, b1[j]))) continue;
        ++scan.tuples;
        if (fits[i][j]) {
          chosen = j;
          break;
        }
      }
      if (!chosen) {
        scan.ok = false;
        scan.witness.clear();
        scan.counterexample = Counterexample{kind, dom.whole() ? std::nullopt : std::optional<Point>(x), b2[i]};
        return scan;
      }
      if (record) {
        scan.witness.push_back(
            WitnessEntry{sign, dom.whole() ? std::nullopt : std::optional<Point>(x), b2[i], b1[*chosen]});
      }
    }
  }
  return scan;
}

// Weak condition. Positive: for b2 ∈ B2(x;P,+) some b1 ∈ B1(x;P,+) has
// b1' + b2 - b1 ∈ B2 for every b1' ∈ B1(x+b1;P,-). Negative mirrors every
// sign: b2 ∈ B2(x;P,-), b1 ∈ B1(x;P,-), b1' ∈ B1(x-b1;P,+).
Scan scan_weak(const PointSet& b1, const PointSet& b2, const Domain& dom, Sign sign, bool record) {
  const bool pos = sign == Sign::Positive;
  const Counterexample::Kind kind = pos ? Counterexample::Kind::Positive : Counterexample::Kind::Negative;
  auto outer = [&](const Point& x, const Point& b) { return pos ? x + b : x - b; };
  auto inner = [&](const Point& y, const Point& b) { return pos ? y - b : y + b; };

  Scan scan;
  for (const Point& x : dom.representatives()) {
    for (const Point& q2 : b2) {
      if (!dom.contains(outer(x, q2))) continue;
      const Point* chosen = nullptr;
      for (const Point& q1 : b1) {
        const Point y = outer(x, q1);
        if (!dom.contains(y)) continue;
        ++scan.tuples;
        const Point v = q2 - q1;
        const bool good = std::all_of(b1.begin(), b1.end(), [&](const Point& r) {
          return !dom.contains(inner(y, r)) || b2.contains(r + v);
        });
        if (good) {
          chosen = &q1;
          break;
        }
      }
      if (!chosen) {
        scan.ok = false;
        scan.witness.clear();
        scan.counterexample = Counterexample{kind, dom.whole() ? std::nullopt : std::optional<Point>(x), q2};
        return scan;
      }
      if (record) {
        scan.witness.push_back(WitnessEntry{sign, dom.whole() ? std::nullopt : std::optional<Point>(x), q2, *chosen});
      }
    }
  }
  return scan;
}

Scan run_scan(const PointSet& b1, const PointSet& b2, const Domain& dom, Relation rel, Sign sign, bool record) {
  return rel == Relation::Shift ? scan_shift(b1, b2, dom, sign, record) : scan_weak(b1, b2, dom, sign, record);
}

std::vector<Point> distinct_translates(const std::vector<WitnessEntry>& witness) {
  std::vector<Point> v;
  v.reserve(witness.size());
  for (const auto& w : witness) v.push_back(w.b2 - w.b1);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

InclusionReport check(const StructuringElement& b1, const StructuringElement& b2, const Scope& scope,
                      Relation relation, Sign sign, const CheckOptions& options) {
  if (b1.dimension() != b2.dimension() || b1.dimension() != scope.dimension()) {
    throw DimensionMismatch("structuring elements and domain must share one dimension");
  }
  const Domain dom(scope);

  InclusionReport report;
  report.mode = InclusionMode{relation, sign, scope.is_whole_space()};

  if (sign != Sign::Both) {
    Scan s = run_scan(b1, b2, dom, relation, sign, options.record_witness);
    report.verdict = s.ok;
    (sign == Sign::Positive ? report.positive : report.negative) = s.ok;
    report.counterexample = std::move(s.counterexample);
    report.witness = std::move(s.witness);
    report.tuples_evaluated = s.tuples;
    return report;
  }

  // Subset, positive and negative are evaluated independently so that a
  // failing subset requirement does not hide the other components.
  const std::optional<Point> missing = b1.points().first_not_in(b2.points());
  report.subset = !missing.has_value();

  Scan pos = run_scan(b1, b2, dom, relation, Sign::Positive, options.record_witness);
  Scan neg;
  if (scope.is_whole_space()) {
    // Restriction sets are all of B on Z^m; the negative scan is the same scan.
    neg = pos;
    for (auto& w : neg.witness) w.sign = Sign::Negative;
    if (neg.counterexample) neg.counterexample->kind = Counterexample::Kind::Negative;
  } else {
    neg = run_scan(b1, b2, dom, relation, Sign::Negative, options.record_witness);
  }
  report.positive = pos.ok;
  report.negative = neg.ok;
  report.tuples_evaluated = pos.tuples + (scope.is_whole_space() ? 0 : neg.tuples);
  report.verdict = *report.subset && pos.ok && neg.ok;

  if (missing) {
    report.counterexample = Counterexample{Counterexample::Kind::NotSubset, std::nullopt, *missing};
  } else if (!pos.ok) {
    report.counterexample = pos.counterexample;
  } else if (!neg.ok) {
    report.counterexample = neg.counterexample;
  }

  if (report.verdict) {
    if (scope.is_whole_space()) {
      // φ is sign independent on Z^m; keep one copy.
      report.witness = std::move(pos.witness);
      if (relation == Relation::Shift) report.translates = distinct_translates(report.witness);
    } else {
      report.witness = std::move(pos.witness);
      report.witness.insert(report.witness.end(), neg.witness.begin(), neg.witness.end());
    }
  }
  return report;
}

InclusionReport check_positive(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p) {
  return check(b1, b2, Scope(p), Relation::Shift, Sign::Positive);
}

InclusionReport check_negative(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p) {
  return check(b1, b2, Scope(p), Relation::Shift, Sign::Negative);
}

InclusionReport check_shift_inclusion(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p) {
  return check(b1, b2, Scope(p), Relation::Shift, Sign::Both);
}

InclusionReport check_whole_space(const StructuringElement& b1, const StructuringElement& b2) {
  return check(b1, b2, Scope::whole_space(b1.dimension()), Relation::Shift, Sign::Both);
}

InclusionReport check_weak_positive(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p) {
  return check(b1, b2, Scope(p), Relation::WeakShift, Sign::Positive);
}

InclusionReport check_weak_negative(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p) {
  return check(b1, b2, Scope(p), Relation::WeakShift, Sign::Negative);
}

InclusionReport check_weak_shift_inclusion(const StructuringElement& b1, const StructuringElement& b2,
                                           const PixelSet& p) {
  return check(b1, b2, Scope(p), Relation::WeakShift, Sign::Both);
}

InclusionReport check_weak_whole_space(const StructuringElement& b1, const StructuringElement& b2) {
  return check(b1, b2, Scope::whole_space(b1.dimension()), Relation::WeakShift, Sign::Both);
}

std::vector<InclusionReport> verify_sequence(std::span<const StructuringElement> sequence, const Scope& scope,
                                             Relation relation, const CheckOptions& options) {
  std::vector<InclusionReport> reports;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    reports.push_back(check(sequence[i], sequence[i + 1], scope, relation, Sign::Both, options));
  }
  return reports;
}

bool all_hold(std::span<const InclusionReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const InclusionReport& r) { return r.verdict; });
}

std::string relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::ShiftWhole:
      return "S,M";
    case RelationKind::ShiftRestricted:
      return "S,P";
    case RelationKind::WeakWhole:
      return "WS,M";
    case RelationKind::WeakRestricted:
      return "WS,P";
  }
  return "?";
}

bool InstanceVerdicts::get(RelationKind k) const {
  switch (k) {
    case RelationKind::ShiftWhole:
      return shift_whole;
    case RelationKind::ShiftRestricted:
      return shift_restricted;
    case RelationKind::WeakWhole:
      return weak_whole;
    case RelationKind::WeakRestricted:
      return weak_restricted;
  }
  return false;
}

bool ImplicationMatrix::consistent() const {
  return std::all_of(claims.begin(), claims.end(), [](const ImplicationClaim& c) { return c.expected == c.observed; });
}

ImplicationMatrix audit_implication_matrix(std::span<const AuditInstance> corpus) {
  using K = RelationKind;
  ImplicationMatrix m;
  m.claims = {
      {"a", K::ShiftWhole, K::WeakWhole, true, false, std::nullopt},
      {"a'", K::WeakWhole, K::ShiftWhole, true, false, std::nullopt},
      {"b", K::ShiftRestricted, K::ShiftWhole, false, false, std::nullopt},
      {"c", K::ShiftWhole, K::ShiftRestricted, false, false, std::nullopt},
      {"d", K::WeakRestricted, K::ShiftRestricted, false, false, std::nullopt},
      {"e", K::WeakWhole, K::WeakRestricted, false, false, std::nullopt},
      {"f", K::ShiftRestricted, K::WeakRestricted, true, false, std::nullopt},
      {"g", K::WeakRestricted, K::ShiftWhole, false, false, std::nullopt},
  };

  const CheckOptions quiet{.record_witness = false};
  for (const AuditInstance& inst : corpus) {
    InstanceVerdicts v;
    v.name = inst.name;
    const Scope whole = Scope::whole_space(inst.b1.dimension());
    const Scope restricted(inst.p);
    v.shift_whole = check(inst.b1, inst.b2, whole, Relation::Shift, Sign::Both, quiet).verdict;
    v.shift_restricted = check(inst.b1, inst.b2, restricted, Relation::Shift, Sign::Both, quiet).verdict;
    v.weak_whole = check(inst.b1, inst.b2, whole, Relation::WeakShift, Sign::Both, quiet).verdict;
    v.weak_restricted = check(inst.b1, inst.b2, restricted, Relation::WeakShift, Sign::Both, quiet).verdict;
    m.instances.push_back(std::move(v));
  }

  for (ImplicationClaim& c : m.claims) {
    c.observed = true;
    for (const InstanceVerdicts& v : m.instances) {
      if (v.get(c.from) && !v.get(c.to)) {
        c.observed = false;
        c.falsified_by = v.name;
        break;
      }
    }
  }
  return m;
}

}  // namespace latmorph
