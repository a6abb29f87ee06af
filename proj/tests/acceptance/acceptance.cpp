// Acceptance gate. Usage: latmorph_acceptance [N ...]; no arguments runs 1..10.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latmorph/constructors.hpp"
#include "latmorph/dot_diagram.hpp"
#include "latmorph/inclusion.hpp"
#include "latmorph/io.hpp"
#include "latmorph/morphology.hpp"
#include "latmorph/oracle.hpp"
#include "latmorph/regression_pack.hpp"
#include "support/reference.hpp"

using namespace latmorph;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& what) {
    pass = false;
    notes.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string str(const PointSet& s) {
  std::string out = "{";
  for (const Point& q : s) out += (out.size() > 1 ? ", " : "") + q.to_string();
  return out + "}";
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

StructuringElement se(const char* dots) { return parse_structuring_element(dots); }

Image grid(const char* text) { return parse_masked_grid(text); }

void compare(Outcome& o, const std::string& label, const Image& got, const Image& want) {
  if (got.domain() != want.domain()) {
    o.fail(label + ": domain differs");
    return;
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i] != want[i]) {
      o.fail(label + ": pixel " + want.domain()[i].to_string() + " expected " + format_value(want[i]) + ", got " +
             format_value(got[i]));
      return;
    }
  }
}

struct GridCase {
  const char* name;
  const char* b1;
  const char* b2;
  const char* image;
  const char* erosion_b1;
  const char* opening_b1;
  const char* erosion_b2;
  const char* opening_b2;
};

void check_grids(Outcome& o, const GridCase& c) {
  const Image g = grid(c.image);
  const auto b1 = se(c.b1);
  const auto b2 = se(c.b2);
  compare(o, std::string(c.name) + " erosion B1", erosion(g, b1), grid(c.erosion_b1));
  compare(o, std::string(c.name) + " opening B1", opening(g, b1), grid(c.opening_b1));
  compare(o, std::string(c.name) + " erosion B2", erosion(g, b2), grid(c.erosion_b2));
  compare(o, std::string(c.name) + " opening B2", opening(g, b2), grid(c.opening_b2));
}

const GridCase kCrossInSquare{"cross-in-square",
                              ".#.\n#o#\n.#.",
                              "###\n#o#\n###",
                              "0 0 0 0 0 0\n0 0 1 1 1 0\n0 0 1 1 1 0\n0 1 1 1 1 0\n0 0 1 0 0 0\n0 0 0 0 0 0\n",
                              "0 0 0 0 0 0\n0 0 0 0 0 0\n0 0 0 1 0 0\n0 0 1 0 0 0\n0 0 0 0 0 0\n0 0 0 0 0 0\n",
                              "0 0 0 0 0 0\n0 0 0 1 0 0\n0 0 1 1 1 0\n0 1 1 1 0 0\n0 0 1 0 0 0\n0 0 0 0 0 0\n",
                              "0 0 0 0 0 0\n0 0 0 0 0 0\n0 0 0 1 0 0\n0 0 0 0 0 0\n0 0 0 0 0 0\n0 0 0 0 0 0\n",
                              "0 0 0 0 0 0\n0 0 1 1 1 0\n0 0 1 1 1 0\n0 0 1 1 1 0\n0 0 0 0 0 0\n0 0 0 0 0 0\n"};

const GridCase kBentRow{"bent-row",
                        "o#",
                        "##\no#",
                        "_ 1 0 0 0 0\n1 _ _ _ _ _\n",
                        "_ 0 0 0 0 0\n1 _ _ _ _ _\n",
                        "_ 0 0 0 0 0\n1 _ _ _ _ _\n",
                        "_ 0 0 0 0 0\n1 _ _ _ _ _\n",
                        "_ 1 0 0 0 0\n1 _ _ _ _ _\n"};

const GridCase kDiagonalPair{"diagonal-pair",
                             "..#\n...\no..",
                             "..#\n...\no.#\n...\n#..",
                             "0 0 1 0 0\n0 0 0 0 0\n1 0 1 0 1\n",
                             "0 0 1 0 0\n0 0 0 0 0\n1 0 0 0 1\n",
                             "0 0 1 0 0\n0 0 0 0 0\n1 0 0 0 1\n",
                             "0 0 0 0 0\n0 0 0 0 0\n1 0 0 0 1\n",
                             "0 0 1 0 0\n0 0 0 0 0\n1 0 1 0 1\n"};

// 1. Cross in square grids, exact, under one second.
Outcome criterion_1() {
  Outcome o;
  const auto t0 = Clock::now();
  check_grids(o, kCrossInSquare);
  const double s = seconds_since(t0);
  if (s >= 1.0) o.fail("took " + std::to_string(s) + " s");
  // the zero sets are not nested
  const Image g = grid(kCrossInSquare.image);
  const PointSet z1 = zero_set(opening(g, se(kCrossInSquare.b1)));
  const PointSet z2 = zero_set(opening(g, se(kCrossInSquare.b2)));
  if (z1.is_subset_of(z2)) o.fail("zero set of the cross opening is inside the square's");
  if (auto p = z1.first_not_in(z2)) o.note("first escaping zero " + p->to_string());
  return o;
}

// 2. Bent row and diagonal pair grids, exact.
Outcome criterion_2() {
  Outcome o;
  check_grids(o, kBentRow);
  check_grids(o, kDiagonalPair);
  if (grid(kBentRow.image).size() != 6) o.fail("bent row domain should have 6 pixels");
  return o;
}

PixelSet pixels(std::initializer_list<Point> l) { return PixelSet(PointSet(l)); }

// 3. Verdicts on the seven worked examples, as published.
Outcome criterion_3() {
  Outcome o;
  auto expect = [&](const std::string& what, bool got, bool want) {
    if (got != want) o.fail(what + ": expected " + (want ? "true" : "false") + ", got " + (got ? "true" : "false"));
  };
  const PixelSet six = PixelSet::rectangle(Point{0, 0}, Point{5, 5});
  expect("cross-in-square S,P", check_shift_inclusion(se(kCrossInSquare.b1), se(kCrossInSquare.b2), six).verdict, false);

  {
    const auto b1 = se("#\no");
    const auto b2 = se(".#\no#");
    const PixelSet p = pixels({{0, 0}, {1, 0}});
    const auto pos = check_positive(b1, b2, p);
    const auto neg = check_negative(b1, b2, p);
    expect("not-a-subset subset", b1.points().is_subset_of(b2.points()), false);
    expect("not-a-subset (a) and (b)", pos.verdict && neg.verdict, true);
    if (!pos.verdict && pos.counterexample && pos.counterexample->x) {
      o.note("not-a-subset (a) fails at x=" + pos.counterexample->x->to_string() +
             " b2=" + pos.counterexample->element.to_string());
    }
  }

  {
    const auto b1 = se("o\n#");
    const auto b2 = se("#\n#\n.\no\n#");
    const PixelSet p = pixels({{0, 0}, {0, 1}, {0, 3}});
    expect("positive-only positive", check_positive(b1, b2, p).verdict, true);
    const auto neg = check_negative(b1, b2, p);
    expect("positive-only negative", neg.verdict, false);
    if (!neg.counterexample || neg.counterexample->x != Point{0, 3} || neg.counterexample->element != Point{0, 2}) {
      o.fail("positive-only counterexample should be x=(0, 3), b2=(0, 2)");
    }
  }

  {
    const auto b1 = se(kBentRow.b1);
    const auto b2 = se(kBentRow.b2);
    expect("bent-row whole-space", check_whole_space(b1, b2).verdict, true);
    expect("bent-row S,P", check_shift_inclusion(b1, b2, grid(kBentRow.image).domain()).verdict, false);
  }

  {
    const auto b1 = se("#\no");
    const auto b2 = se("##\no.");
    const PixelSet p = PixelSet::rectangle(Point{0, 0}, Point{5, 0});
    expect("restricted-only S,P", check_shift_inclusion(b1, b2, p).verdict, true);
    expect("restricted-only whole-space", check_whole_space(b1, b2).verdict, false);
  }

  {
    const auto b1 = se(kDiagonalPair.b1);
    const auto b2 = se(kDiagonalPair.b2);
    expect("diagonal-pair whole-space", check_whole_space(b1, b2).verdict, true);
    expect("diagonal-pair S,P", check_shift_inclusion(b1, b2, grid(kDiagonalPair.image).domain()).verdict, false);
  }

  {
    const auto b1 = se("o\n#");
    const auto b2 = se("o#\n#.");
    const PixelSet p = pixels({{0, 0}, {1, 0}, {0, -1}});
    expect("weak-only S,P", check_shift_inclusion(b1, b2, p).verdict, false);
    expect("weak-only WS,P", check_weak_shift_inclusion(b1, b2, p).verdict, true);
  }
  return o;
}

// Every subset of the 3x3 window that contains the origin and has at most
// `max_size` points.
std::vector<StructuringElement> window_elements(std::size_t max_size) {
  std::vector<Point> others;
  for (int x = -1; x <= 1; ++x) {
    for (int y = -1; y <= 1; ++y) {
      if (x != 0 || y != 0) others.push_back(Point{x, y});
    }
  }
  std::vector<StructuringElement> out;
  for (unsigned mask = 0; mask < (1U << others.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) + 1 > max_size) continue;
    std::vector<Point> pts{Point{0, 0}};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask & (1U << i)) pts.push_back(others[i]);
    }
    out.emplace_back(PointSet(std::move(pts)));
  }
  return out;
}

// 4. Weak checks agree with exhaustive enumeration on a 2x3 domain.
Outcome criterion_4() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto elems = window_elements(4);
  std::size_t instances = 0, mismatches = 0;
  for (const PixelSet& p : {PixelSet::rectangle(Point{0, 0}, Point{1, 2}), PixelSet::rectangle(Point{0, 0}, Point{2, 1})}) {
    const auto ref_p = ref::set(p.points());
    for (const auto& b2 : elems) {
      for (const auto& b1 : elems) {
        if (!b1.points().is_subset_of(b2.points())) continue;
        ++instances;
        OracleOptions opts;
        opts.jobs = 1;
        const auto e = equivalence_audit(b1, b2, p, opts);
        // second, independent enumeration
        const auto r = ref::oracle(ref::set(b1), ref::set(b2), ref_p);
        const bool ok = e.agrees && e.oracle.holds_opening == !r.opening && e.oracle.holds_closing == !r.closing;
        if (!ok) {
          ++mismatches;
          if (mismatches <= 5) {
            o.fail("mismatch: B1=" + str(b1.points()) + " B2=" + str(b2.points()) + " P " +
                   std::to_string(p.size()) + " pixels");
          }
        }
      }
    }
  }
  const double s = seconds_since(t0);
  o.note(std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches, " +
         std::to_string(s) + " s");
  if (mismatches > 0) o.pass = false;
  if (s >= 300) o.fail("sweep exceeded five minutes");
  return o;
}

// 5. Shift inclusion implies nested zero sets and ordered filters.
Outcome criterion_5() {
  Outcome o;
  gen::Rng rng(5005);
  std::size_t accepted = 0, attempts = 0, violations = 0;
  while (accepted < 200 && attempts < 200000) {
    ++attempts;
    const auto b1 = rng.se(1, 2);
    StructuringElement b2 = rng.coin(0.5) ? decompose_build(b1, {rng.point(2), rng.point(1)})
                                          : StructuringElement(set_union(b1.points(), rng.se(1, 2).points()));
    const PixelSet p = rng.coin(0.5) ? rng.rectangle(4, 4) : rng.scattered(4, 4, 0.75);
    if (!check_shift_inclusion(b1, b2, p).verdict) continue;
    ++accepted;
    OracleOptions opts;
    opts.jobs = 1;
    if (!property_holds(b1, b2, p, opts).holds()) {
      ++violations;
      o.fail("binary violation for B1=" + str(b1.points()) + " B2=" + str(b2.points()));
    }
    for (int k = 0; k < 1000; ++k) {
      const Image g = rng.coin(0.5) ? rng.real_image(p) : rng.image(p, 4);
      if (!image_leq(opening(g, b2), opening(g, b1)) || !image_leq(closing(g, b1), closing(g, b2))) {
        ++violations;
        if (violations <= 5) o.fail("grayscale order violated for B1=" + str(b1.points()));
      }
    }
  }
  if (accepted < 200) o.fail("only " + std::to_string(accepted) + " shift-included instances found");
  o.note(std::to_string(accepted) + " instances from " + std::to_string(attempts) + " draws, " +
         std::to_string(violations) + " violations");
  return o;
}

// 6. Unions of translates are recognised and rebuilt; the rest are refuted.
Outcome criterion_6() {
  Outcome o;
  gen::Rng rng(6006);
  std::size_t built = 0;
  for (int t = 0; t < 500; ++t) {
    const auto b1 = rng.se(2, 3);
    std::vector<Point> vs;
    for (int k = rng.uniform(0, 3); k > 0; --k) vs.push_back(rng.point(3));
    const auto b2 = decompose_build(b1, vs);
    const auto r = check_whole_space(b1, b2);
    if (!r.verdict) {
      o.fail("union of translates rejected: B1=" + str(b1.points()));
      continue;
    }
    PointSet rebuilt(2);
    for (const Point& v : r.translates) rebuilt = set_union(rebuilt, b1.points().translated(v));
    if (rebuilt != b2.points()) o.fail("translates do not rebuild B2 for B1=" + str(b1.points()));
    ++built;
  }
  std::size_t rejected = 0, draws = 0;
  while (rejected < 500 && draws < 100000) {
    ++draws;
    const auto b1 = rng.se(2, 3);
    const auto b2 = StructuringElement(set_union(b1.points(), rng.se(2, 4).points()));
    const auto s1 = ref::set(b1), s2 = ref::set(b2);
    // brute force: B2 is a union of translates iff every b2 lies in a fitting translate
    PointSet cover(2);
    for (const Point& a : b2) {
      for (const Point& b : b1) {
        if (ref::fits(s1, s2, ref::pt(a - b))) cover = set_union(cover, b1.points().translated(a - b));
      }
    }
    if (cover == b2.points()) continue;
    ++rejected;
    const auto r = check_whole_space(b1, b2);
    if (r.verdict || !r.counterexample) {
      o.fail("non-decomposable pair accepted: B1=" + str(b1.points()) + " B2=" + str(b2.points()));
      continue;
    }
    const Point c = r.counterexample->element;
    bool covered = false;
    for (const Point& b : b1) covered = covered || ref::fits(s1, s2, ref::pt(c - b));
    if (covered || !b2.contains(c)) o.fail("counterexample " + c.to_string() + " is covered");
  }
  if (rejected < 500) o.fail("only " + std::to_string(rejected) + " non-decomposable pairs drawn");
  o.note(std::to_string(built) + " builds, " + std::to_string(rejected) + " rejections");
  return o;
}

// 7. Rectangles and l1 balls.
Outcome criterion_7() {
  Outcome o;
  std::vector<StructuringElement> rects;
  for (int lx = -2; lx <= 0; ++lx) {
    for (int ly = -2; ly <= 0; ++ly) {
      for (int hx = 0; hx <= 2; ++hx) {
        for (int hy = 0; hy <= 2; ++hy) rects.push_back(box_element(Point{lx, ly}, Point{hx, hy}));
      }
    }
  }
  const PixelSet p = PixelSet::rectangle(Point{0, 0}, Point{4, 4});
  std::size_t pairs = 0, failures = 0;
  for (const auto& r1 : rects) {
    for (const auto& r2 : rects) {
      if (!r1.points().is_subset_of(r2.points())) continue;
      ++pairs;
      if (!check_shift_inclusion(r1, r2, p).verdict) {
        ++failures;
        if (failures <= 5) o.fail("rectangle pair failed: " + str(r1.points()) + " in " + str(r2.points()));
      }
    }
  }
  gen::Rng rng(7007);
  std::size_t ball_checks = 0;
  const auto balls = l1_chain(4, 2);
  for (int t = 0; t < 20; ++t) {
    const PixelSet q = rng.rectangle(8, 8);
    for (int w = 0; w <= 3; ++w) {
      ++ball_checks;
      if (!check_shift_inclusion(balls[w], balls[w + 1], q).verdict) {
        o.fail("Q" + std::to_string(w) + " in Q" + std::to_string(w + 1) + " failed on a rectangle");
      }
    }
  }
  o.note(std::to_string(pairs) + " rectangle pairs, " + std::to_string(ball_checks) + " ball checks");
  return o;
}

// 8. Whole-lattice chains on the extended domain. Violations are findings.
Outcome criterion_8() {
  Outcome o;
  gen::Rng rng(8008);
  std::size_t chains = 0, draws = 0, check_findings = 0, oracle_findings = 0;
  while (chains < 100 && draws < 100000) {
    ++draws;
    const auto b1 = rng.se(1, 1);
    const auto b2 = decompose_build(b1, {rng.point(1)});
    const auto b3 = decompose_build(b2, {rng.point(1)});
    const std::vector<StructuringElement> chain{b1, b2, b3};
    if (!all_hold(verify_sequence(chain, Scope::whole_space(2), Relation::Shift))) {
      o.fail("constructed chain is not shift included on the lattice");
      continue;
    }
    const PixelSet p = rng.scattered(rng.uniform(1, 3), rng.uniform(1, 3), 0.6);
    const PointSet ext = set_union(minkowski_sum(p.points(), b3.points()), minkowski_sum(p.points(), negate(b3.points())));
    if (ext.size() > 20) continue;
    ++chains;
    const PixelSet pe(ext);
    if (!all_hold(verify_sequence(chain, pe, Relation::Shift))) {
      ++check_findings;
      if (check_findings <= 5) {
        o.note("finding: chain " + str(b1.points()) + " < " + str(b2.points()) + " < " +
               str(b3.points()) + " is not shift included on the extended domain of " + str(p.points()));
      }
    }
    // property (1) for the zero-extended images g~ of every binary g on P
    const BinaryImageEnumerator images(p);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      bool violated = false;
      for (std::uint64_t k = 0; k < images.count() && !violated; ++k) {
        const Image ge = extend_image(images.image(k), b3);
        violated = !zero_set(opening(ge, chain[i])).is_subset_of(zero_set(opening(ge, chain[i + 1]))) ||
                   !zero_set(closing(ge, chain[i + 1])).is_subset_of(zero_set(closing(ge, chain[i])));
      }
      if (violated) {
        ++oracle_findings;
        if (oracle_findings <= 5) o.note("finding: zero-extended image violates nesting for pair " + std::to_string(i));
      }
    }
  }
  if (chains < 100) o.fail("only " + std::to_string(chains) + " chains with small extended domains");
  o.note(std::to_string(chains) + " chains, " + std::to_string(check_findings) + " check findings, " +
         std::to_string(oracle_findings) + " oracle findings");
  return o;
}

bool same(const Image& a, const Image& b) {
  if (a.domain() != b.domain()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

// 9. Threshold commutation and the threshold form of the pointwise order.
Outcome criterion_9() {
  Outcome o;
  gen::Rng rng(9009);
  std::size_t failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const PixelSet p = rng.coin(0.5) ? rng.rectangle(6, 6) : rng.scattered(6, 6, 0.6);
    const Image g = rng.coin(0.5) ? rng.image(p, 5) : rng.real_image(p);
    const auto b = rng.se(2, 3);
    const double v = g[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(g.size()) - 1))];
    const double th = rng.coin() || v < 0.5 ? v : v - 0.5;
    const std::vector<std::pair<const char*, std::function<Image(const Image&)>>> ops{
        {"erosion", [&](const Image& f) { return erosion(f, b); }},
        {"dilation", [&](const Image& f) { return dilation(f, b); }},
        {"opening", [&](const Image& f) { return opening(f, b); }},
        {"closing", [&](const Image& f) { return closing(f, b); }}};
    for (const auto& [name, op] : ops) {
      if (!same(op(threshold(g, th)), threshold(op(g), th))) {
        if (++failures <= 5) o.fail(std::string(name) + " does not commute with threshold " + format_value(th));
      }
    }
    const Image f = rng.coin(0.5) ? opening(g, b) : (rng.coin(0.5) ? rng.image(p, 5) : closing(g, b));
    std::set<double> levels(g.values().begin(), g.values().end());
    levels.insert(f.values().begin(), f.values().end());
    bool all_levels = true;
    for (double v : levels) all_levels = all_levels && image_leq(threshold(f, v), threshold(g, v));
    if (image_leq(f, g) != all_levels) {
      if (++failures <= 5) o.fail("pointwise order disagrees with thresholded order");
    }
  }
  o.note(std::to_string(failures) + " failures");
  return o;
}

// 10. Every worked example runs at full size.
Outcome criterion_10() {
  Outcome o;
  const auto t0 = Clock::now();
  const Json pack = embedded_pack();
  for (const auto& c : pack_cases(pack)) {
    const Box box = bounding_box(c.pixels.points());
    for (std::size_t a = 0; a < 2; ++a) {
      if (box.hi[a] - box.lo[a] + 1 > 6) o.fail(c.name + " exceeds 6x6");
    }
  }
  const PackReport rep = run_pack(pack);
  if (!rep.passed()) o.fail("regression pack:\n" + rep.summary());
  o.note(std::to_string(rep.entries.size()) + " entries in " + std::to_string(seconds_since(t0)) + " s");
  return o;
}

const std::map<int, std::pair<const char*, Outcome (*)()>> kCriteria{
    {1, {"cross-in-square grids", criterion_1}},
    {2, {"bent-row and diagonal-pair grids", criterion_2}},
    {3, {"published verdicts on seven examples", criterion_3}},
    {4, {"weak check equals exhaustive oracle", criterion_4}},
    {5, {"shift inclusion orders filters", criterion_5}},
    {6, {"translate-union roundtrip", criterion_6}},
    {7, {"rectangles and l1 balls", criterion_7}},
    {8, {"lattice chains on extended domains", criterion_8}},
    {9, {"threshold commutation", criterion_9}},
    {10, {"examples at full size", criterion_10}},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty()) {
    for (const auto& [n, c] : kCriteria) which.push_back(n);
  }
  int failed = 0;
  for (int n : which) {
    const auto it = kCriteria.find(n);
    if (it == kCriteria.end()) {
      std::fprintf(stderr, "unknown criterion %d\n", n);
      return 2;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    for (const auto& line : o.notes) std::printf("  %s\n", line.c_str());
    std::printf("criterion %d: %s %s\n", n, o.pass ? "PASS" : "FAIL", it->second.first);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
