#pragma once

#include <string>
#include <string_view>

#include "latmorph/point_set.hpp"
#include "latmorph/structuring_element.hpp"

namespace latmorph {

/// Text form of a subset of Z^2.
///
///   '#'  member
///   'o'  member located at the origin
///   '.'  absent
///
/// Rows run top to bottom with decreasing second coordinate; columns run
/// left to right with increasing first coordinate. All rows must have the
/// same length. When no 'o' is present the bottom-left cell is (0, 0).
struct DotDiagram {
  PointSet points{2};
  bool has_origin = false;
};

DotDiagram parse_dot_diagram(std::string_view text);

/// Like parse_dot_diagram but requires exactly one 'o'.
StructuringElement parse_structuring_element(std::string_view text);

/// Renders the bounding box of `points`; the origin cell is drawn as 'o'
/// when it is a member. Output rows end in '\n'.
std::string render_dot_diagram(const PointSet& points);

}  // namespace latmorph
