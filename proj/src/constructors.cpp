#include "latmorph/constructors.hpp"

#include "latmorph/error.hpp"

namespace latmorph {

StructuringElement decompose_build(const StructuringElement& b1, const std::vector<Point>& vs) {
  PointSet acc = b1.points();
  for (const Point& v : vs) acc = set_union(acc, b1.points().translated(v));
  return StructuringElement(std::move(acc));
}

std::vector<StructuringElement> rectangle_chain(const StructuringElement& r1, const StructuringElement& r2) {
  if (r1.dimension() != r2.dimension()) throw DimensionMismatch("rectangle_chain: dimensions differ");
  if (!is_rectangle(r1.points()) || !is_rectangle(r2.points())) {
    throw InvalidArgument("rectangle_chain: both elements must be rectangles");
  }
  if (!r1.points().is_subset_of(r2.points())) throw InvalidArgument("rectangle_chain: R1 is not contained in R2");

  Box cur = bounding_box(r1.points());
  const Box target = bounding_box(r2.points());
  std::vector<StructuringElement> chain{r1};
  for (std::size_t axis = 0; axis < cur.lo.dimension(); ++axis) {
    while (cur.hi[axis] < target.hi[axis]) {
      cur.hi = cur.hi + Point::unit(cur.hi.dimension(), axis);
      chain.push_back(box_element(cur.lo, cur.hi));
    }
    while (cur.lo[axis] > target.lo[axis]) {
      cur.lo = cur.lo - Point::unit(cur.lo.dimension(), axis);
      chain.push_back(box_element(cur.lo, cur.hi));
    }
  }
  return chain;
}

std::vector<StructuringElement> square_iteration(int n) {
  if (n < 0) throw InvalidArgument("square_iteration: n must be non-negative");
  const Point e1{1, 0};
  const Point e2{0, 1};
  std::vector<StructuringElement> seq{StructuringElement::origin(2)};
  for (int k = 1; k <= n; ++k) {
    const int s = (k % 2 == 1) ? 1 : -1;
    const Point a = s == 1 ? e1 : -e1;
    const Point b = s == 1 ? e2 : -e2;
    seq.push_back(decompose_build(seq.back(), {a, b, a + b}));
  }
  return seq;
}

std::vector<StructuringElement> l1_chain(int omega_max, std::size_t dimension) {
  if (omega_max < 0) throw InvalidArgument("l1_chain: omega_max must be non-negative");
  std::vector<StructuringElement> seq;
  for (int w = 0; w <= omega_max; ++w) seq.push_back(l1_ball(w, dimension));
  return seq;
}

std::string recipe_kind_name(RecipeKind k) {
  switch (k) {
    case RecipeKind::TranslateUnion:
      return "translate-union";
    case RecipeKind::RectangleChain:
      return "rectangle-chain";
    case RecipeKind::SquareIteration:
      return "square-iteration";
    case RecipeKind::L1Chain:
      return "l1-chain";
  }
  return "?";
}

RecipeKind parse_recipe_kind(const std::string& s) {
  if (s == "translate-union") return RecipeKind::TranslateUnion;
  if (s == "rectangle-chain") return RecipeKind::RectangleChain;
  if (s == "square-iteration") return RecipeKind::SquareIteration;
  if (s == "l1-chain") return RecipeKind::L1Chain;
  throw ParseError("unknown recipe kind '" + s + "'");
}

std::string guarantee_name(Guarantee g) { return g == Guarantee::WholeSpace ? "whole-space" : "rectangle"; }

Guarantee SequenceRecipe::guarantee() const {
  return kind == RecipeKind::TranslateUnion ? Guarantee::WholeSpace : Guarantee::RectangleDomain;
}

std::string SequenceRecipe::guarantee_note() const {
  switch (kind) {
    case RecipeKind::TranslateUnion:
      return "each step is a union of translates of its predecessor, so it is shift included on the whole lattice";
    case RecipeKind::RectangleChain:
      return "nested rectangles containing the origin are shift included on any rectangular domain";
    case RecipeKind::SquareIteration:
      return "parity-alternating square growth; each square is a rectangle containing its predecessor";
    case RecipeKind::L1Chain:
      return "consecutive L1 balls are shift included on any rectangular domain";
  }
  return "";
}

std::vector<StructuringElement> build_sequence(const SequenceRecipe& recipe) {
  switch (recipe.kind) {
    case RecipeKind::TranslateUnion: {
      if (!recipe.base) throw InvalidArgument("translate-union recipe needs a base element");
      std::vector<StructuringElement> seq{*recipe.base};
      for (const auto& vs : recipe.steps) seq.push_back(decompose_build(seq.back(), vs));
      return seq;
    }
    case RecipeKind::RectangleChain: {
      if (recipe.rectangles.empty()) throw InvalidArgument("rectangle-chain recipe needs at least one rectangle");
      std::vector<StructuringElement> seq{box_element(recipe.rectangles[0].lo, recipe.rectangles[0].hi)};
      for (std::size_t i = 1; i < recipe.rectangles.size(); ++i) {
        const auto next = box_element(recipe.rectangles[i].lo, recipe.rectangles[i].hi);
        const auto part = rectangle_chain(seq.back(), next);
        seq.insert(seq.end(), part.begin() + 1, part.end());
      }
      return seq;
    }
    case RecipeKind::SquareIteration:
      return square_iteration(recipe.n);
    case RecipeKind::L1Chain:
      return l1_chain(recipe.omega_max, recipe.dimension);
  }
  throw InvalidArgument("unknown recipe kind");
}

}  // namespace latmorph
