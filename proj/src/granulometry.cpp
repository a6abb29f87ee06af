#include "latmorph/granulometry.hpp"

#include "latmorph/error.hpp"
#include "latmorph/morphology.hpp"

namespace latmorph {

bool GranulometryResult::monotone() const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const std::size_t prev = steps[i - 1].zero_pixels;
    const std::size_t cur = steps[i].zero_pixels;
    if (mode == FilterMode::Opening ? cur < prev : cur > prev) return false;
  }
  return true;
}

GranulometryResult granulometric_curve(const Image& g, std::span<const StructuringElement> sequence, FilterMode mode,
                                       bool force) {
  if (sequence.empty()) throw InvalidArgument("granulometry needs at least one structuring element");
  GranulometryResult r;
  r.mode = mode;
  r.forced = force;
  r.verified = true;

  const Scope scope(g.domain_ptr());
  const Sign sign = mode == FilterMode::Opening ? kOpeningSign : kClosingSign;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    InclusionReport rep = check(sequence[i], sequence[i + 1], scope, Relation::WeakShift, sign);
    const auto missing = sequence[i].points().first_not_in(sequence[i + 1].points());
    rep.subset = !missing.has_value();
    if (missing) {
      rep.verdict = false;
      rep.witness.clear();
      rep.counterexample = Counterexample{Counterexample::Kind::NotSubset, std::nullopt, *missing};
    }
    r.verified = r.verified && rep.verdict;
    r.verification.push_back(std::move(rep));
  }
  if (!r.verified && !force) {
    throw UnverifiedSequence("sequence is not weakly shift included on the image domain; use force to run anyway");
  }

  for (std::size_t i = 0; i < sequence.size(); ++i) {
    Image f = mode == FilterMode::Opening ? opening(g, sequence[i]) : closing(g, sequence[i]);
    const std::size_t zeros = zero_set(f).size();
    r.steps.push_back(GranulometryStep{i, zeros, std::move(f)});
  }
  return r;
}

}  // namespace latmorph
