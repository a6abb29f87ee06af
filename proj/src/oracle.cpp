#include "latmorph/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "latmorph/error.hpp"
#include "latmorph/inclusion.hpp"
#include "latmorph/morphology.hpp"

namespace latmorph {

namespace {

void require_cap(const PixelSet& p, std::size_t cap) {
  if (cap < 1 || cap > kMaxOracleCap) {
    throw InvalidArgument("oracle cap must lie in [1, " + std::to_string(kMaxOracleCap) + "]");
  }
  if (p.size() > cap) {
    throw CapExceeded("pixel set has " + std::to_string(p.size()) + " pixels, oracle cap is " + std::to_string(cap));
  }
}

}  // namespace

BinaryImageEnumerator::BinaryImageEnumerator(const PixelSet& p, std::size_t cap)
    : domain_(std::make_shared<const PixelSet>(p)) {
  require_cap(p, cap);
}

Image BinaryImageEnumerator::image(std::uint64_t index) const {
  std::vector<double> v(domain_->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>((index >> i) & 1U);
  return Image(domain_, std::move(v));
}

namespace {

using kernels::BitBlock;

constexpr std::uint64_t kLaneMasks[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Pixel i of the 256 images base .. base+255.
BitBlock pixel_block(std::size_t i, std::uint64_t block) {
  BitBlock b{};
  for (int w = 0; w < 4; ++w) {
    if (i < 6) {
      b.w[w] = kLaneMasks[i];
    } else if (i < 8) {
      b.w[w] = ((static_cast<unsigned>(w) >> (i - 6)) & 1U) ? ~0ULL : 0ULL;
    } else {
      b.w[w] = ((block >> (i - 8)) & 1U) ? ~0ULL : 0ULL;
    }
  }
  return b;
}

std::uint64_t first_lane(const BitBlock& b) {
  for (int w = 0; w < 4; ++w) {
    if (b.w[w]) return static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(std::countr_zero(b.w[w]));
  }
  return kNone;
}

BitBlock valid_lanes(std::size_t n) {
  if (n >= 8) return BitBlock{{~0ULL, ~0ULL, ~0ULL, ~0ULL}};
  const std::uint64_t lanes = std::uint64_t{1} << n;
  BitBlock b{};
  for (std::uint64_t w = 0; w < 4; ++w) {
    const std::uint64_t lo = w * 64;
    if (lanes >= lo + 64) {
      b.w[w] = ~0ULL;
    } else if (lanes > lo) {
      b.w[w] = (std::uint64_t{1} << (lanes - lo)) - 1;
    }
  }
  return b;
}

BitBlock masked(BitBlock b, const BitBlock& m) {
  for (int w = 0; w < 4; ++w) b.w[w] &= m.w[w];
  return b;
}

struct Plan {
  Neighborhood ero1, dil1, ero2, dil2;
  std::size_t n = 0;
  std::uint64_t blocks = 0;
  BitBlock valid{};
};

void atomic_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load(std::memory_order_relaxed);
  while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

void run_worker(const Plan& plan, const kernels::KernelTable& k, std::atomic<std::uint64_t>& next_chunk,
                std::uint64_t chunk, std::atomic<std::uint64_t>& best_open, std::atomic<std::uint64_t>& best_close) {
  const std::size_t n = plan.n;
  std::vector<BitBlock> g(n), e1(n), o1(n), d1(n), c1(n), e2(n), o2(n), d2(n), c2(n);
  // Pixels 0..7 vary inside a block and never change between blocks.
  const std::size_t fixed = std::min<std::size_t>(n, 8);
  for (std::size_t i = 0; i < fixed; ++i) g[i] = pixel_block(i, 0);

  for (;;) {
    const std::uint64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
    const std::uint64_t begin = c * chunk;
    if (begin >= plan.blocks) return;
    const std::uint64_t end = std::min(plan.blocks, begin + chunk);
    for (std::uint64_t blk = begin; blk < end; ++blk) {
      const std::uint64_t base = blk * kernels::kLanesPerBlock;
      const bool need_open = base < best_open.load(std::memory_order_relaxed);
      const bool need_close = base < best_close.load(std::memory_order_relaxed);
      if (!need_open && !need_close) return;
      for (std::size_t i = fixed; i < n; ++i) g[i] = pixel_block(i, blk);

      if (need_open) {
        k.and_gather(g.data(), plan.ero1.csr(), e1.data());
        k.or_gather(e1.data(), plan.dil1.csr(), o1.data());
        k.and_gather(g.data(), plan.ero2.csr(), e2.data());
        k.or_gather(e2.data(), plan.dil2.csr(), o2.data());
        const std::uint64_t lane = first_lane(masked(k.zero_escape(o1.data(), o2.data(), n), plan.valid));
        if (lane != kNone) atomic_min(best_open, base + lane);
      }
      if (need_close) {
        k.or_gather(g.data(), plan.dil1.csr(), d1.data());
        k.and_gather(d1.data(), plan.ero1.csr(), c1.data());
        k.or_gather(g.data(), plan.dil2.csr(), d2.data());
        k.and_gather(d2.data(), plan.ero2.csr(), c2.data());
        const std::uint64_t lane = first_lane(masked(k.zero_escape(c2.data(), c1.data(), n), plan.valid));
        if (lane != kNone) atomic_min(best_close, base + lane);
      }
    }
  }
}

std::optional<Point> first_violation(const PointSet& should_be_zero_first, const PointSet& should_contain) {
  return should_be_zero_first.first_not_in(should_contain);
}

}  // namespace

PropertyVerdict property_holds(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p,
                               const OracleOptions& options) {
  require_cap(p, options.cap);
  if (b1.dimension() != p.dimension() || b2.dimension() != p.dimension()) {
    throw DimensionMismatch("structuring elements and domain must share one dimension");
  }
  const kernels::KernelTable& k = options.kernels ? *options.kernels : kernels::active();

  Plan plan;
  plan.n = p.size();
  plan.ero1 = build_neighborhood(p, b1.points(), Sign::Positive);
  plan.dil1 = build_neighborhood(p, b1.points(), Sign::Negative);
  plan.ero2 = build_neighborhood(p, b2.points(), Sign::Positive);
  plan.dil2 = build_neighborhood(p, b2.points(), Sign::Negative);
  const std::uint64_t total = std::uint64_t{1} << plan.n;
  plan.blocks = (total + kernels::kLanesPerBlock - 1) / kernels::kLanesPerBlock;
  plan.valid = valid_lanes(plan.n);

  unsigned jobs = options.jobs ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, plan.blocks));
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(64, plan.blocks / (jobs * 8ULL) + 1));

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best_open{kNone};
  std::atomic<std::uint64_t> best_close{kNone};
  if (jobs <= 1) {
    run_worker(plan, k, next_chunk, chunk, best_open, best_close);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back(run_worker, std::cref(plan), std::cref(k), std::ref(next_chunk), chunk, std::ref(best_open),
                        std::ref(best_close));
    }
    for (auto& th : pool) th.join();
  }

  PropertyVerdict v;
  const std::uint64_t open_idx = best_open.load();
  const std::uint64_t close_idx = best_close.load();
  v.holds_opening = open_idx == kNone;
  v.holds_closing = close_idx == kNone;
  // Each search stops at its first violation, so only when both fail is the
  // enumeration cut short.
  v.images_checked = (!v.holds_opening && !v.holds_closing) ? std::max(open_idx, close_idx) + 1 : total;

  const BinaryImageEnumerator images(p, options.cap);
  if (!v.holds_opening) {
    Image g = images.image(open_idx);
    const auto px = first_violation(zero_set(opening(g, b1)), zero_set(opening(g, b2)));
    if (!px) throw Error("oracle replay failed to reproduce an opening violation");
    v.opening_counterexample = OracleCounterexample{open_idx, std::move(g), *px};
  }
  if (!v.holds_closing) {
    Image g = images.image(close_idx);
    const auto px = first_violation(zero_set(closing(g, b2)), zero_set(closing(g, b1)));
    if (!px) throw Error("oracle replay failed to reproduce a closing violation");
    v.closing_counterexample = OracleCounterexample{close_idx, std::move(g), *px};
  }
  return v;
}

EquivalenceResult equivalence_audit(const StructuringElement& b1, const StructuringElement& b2, const PixelSet& p,
                                    const OracleOptions& options) {
  if (!b1.points().is_subset_of(b2.points())) throw InvalidArgument("equivalence audit requires B1 ⊆ B2");
  EquivalenceResult r;
  r.oracle = property_holds(b1, b2, p, options);
  const CheckOptions quiet{.record_witness = false};
  r.weak_opening = check(b1, b2, Scope(p), Relation::WeakShift, kOpeningSign, quiet).verdict;
  r.weak_closing = check(b1, b2, Scope(p), Relation::WeakShift, kClosingSign, quiet).verdict;
  r.agrees = r.oracle.holds_opening == r.weak_opening && r.oracle.holds_closing == r.weak_closing;
  return r;
}

WholeSpaceWitness opening_witness(const StructuringElement& b2_set, const Point& b2) {
  const PointSet& s = b2_set.points();
  const PointSet domain_points = set_union(s, minkowski_sum(minkowski_diff(PointSet{b2}, s), s));
  auto domain = std::make_shared<const PixelSet>(domain_points);
  std::vector<double> v(domain->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.contains((*domain)[i]) ? 1.0 : 0.0;
  return WholeSpaceWitness{Image(domain, std::move(v)), b2};
}

WholeSpaceWitness closing_witness(const StructuringElement& b2_set, const Point& b2) {
  const PointSet& s = b2_set.points();
  const PointSet neg = negate(s);
  const PointSet domain_points = set_union(neg, minkowski_diff(minkowski_sum(PointSet{-b2}, s), s));
  auto domain = std::make_shared<const PixelSet>(domain_points);
  std::vector<double> v(domain->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = neg.contains((*domain)[i]) ? 0.0 : 1.0;
  return WholeSpaceWitness{Image(domain, std::move(v)), -b2};
}

bool opening_violated_at(const Image& g, const StructuringElement& b1, const StructuringElement& b2,
                         const Point& pixel) {
  return opening(g, b1).at(pixel) == 0.0 && opening(g, b2).at(pixel) != 0.0;
}

bool closing_violated_at(const Image& g, const StructuringElement& b1, const StructuringElement& b2,
                         const Point& pixel) {
  return closing(g, b2).at(pixel) == 0.0 && closing(g, b1).at(pixel) != 0.0;
}

}  // namespace latmorph
