#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latmorph/structuring_element.hpp"

namespace latmorph {

/// B1 ∪ (B1 + v_1) ∪ ... ∪ (B1 + v_k). Always shift included in B1's
/// direction on the whole lattice.
StructuringElement decompose_build(const StructuringElement& b1, const std::vector<Point>& vs);

/// Chain of rectangles from R1 to R2, growing one unit face per step: axis 0
/// first (positive side, then negative side), then axis 1, and so on. The
/// first element is R1 and the last is R2.
std::vector<StructuringElement> rectangle_chain(const StructuringElement& r1, const StructuringElement& r2);

/// Squares C_0 .. C_n. C_0 = {0}; odd steps add +e1, +e2, +e1+e2 translates
/// and even steps the negated ones, so C_k is a (k+1)×(k+1) square.
std::vector<StructuringElement> square_iteration(int n);

/// [Q_0, ..., Q_omega_max] in the given dimension.
std::vector<StructuringElement> l1_chain(int omega_max, std::size_t dimension);

enum class RecipeKind { TranslateUnion, RectangleChain, SquareIteration, L1Chain };

/// Scope on which a recipe's output is nested by construction.
enum class Guarantee { WholeSpace, RectangleDomain };

std::string recipe_kind_name(RecipeKind k);
RecipeKind parse_recipe_kind(const std::string& s);
std::string guarantee_name(Guarantee g);

struct SequenceRecipe {
  RecipeKind kind = RecipeKind::SquareIteration;

  // translate-union: element k+1 is decompose_build(element k, steps[k]).
  std::optional<StructuringElement> base;
  std::vector<std::vector<Point>> steps;

  // rectangle-chain: successive rectangles, each joined by rectangle_chain.
  std::vector<Box> rectangles;

  // square-iteration
  int n = 0;

  // l1-chain
  int omega_max = 0;
  std::size_t dimension = 2;

  Guarantee guarantee() const;
  /// Short description of why the emitted sequence is nested.
  std::string guarantee_note() const;
};

std::vector<StructuringElement> build_sequence(const SequenceRecipe& recipe);

}  // namespace latmorph
