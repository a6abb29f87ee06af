#include "latmorph/dot_diagram.hpp"

#include <vector>

#include "latmorph/error.hpp"

namespace latmorph {

namespace {

std::vector<std::string_view> split_rows(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    rows.push_back(row);
    start = end + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return rows;
}

}  // namespace

DotDiagram parse_dot_diagram(std::string_view text) {
  const auto rows = split_rows(text);
  if (rows.empty()) throw ParseError("dot diagram is empty");

  const std::size_t width = rows.front().size();
  std::size_t origin_row = rows.size() - 1;
  std::size_t origin_col = 0;
  int origins = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw ParseError("ragged dot diagram: row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " cells, expected " + std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      const char cell = rows[r][c];
      if (cell == 'o') {
        ++origins;
        origin_row = r;
        origin_col = c;
      } else if (cell != '#' && cell != '.') {
        throw ParseError(std::string("unexpected dot diagram cell '") + cell + "' in row " + std::to_string(r + 1));
      }
    }
  }
  if (origins > 1) throw ParseError("dot diagram has " + std::to_string(origins) + " origin markers");

  std::vector<Point> pts;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (rows[r][c] == '.') continue;
      pts.push_back(Point{static_cast<Point::Coord>(c) - static_cast<Point::Coord>(origin_col),
                          static_cast<Point::Coord>(origin_row) - static_cast<Point::Coord>(r)});
    }
  }
  if (pts.empty()) throw ParseError("dot diagram has no member cells");
  return DotDiagram{PointSet(2, std::move(pts)), origins == 1};
}

StructuringElement parse_structuring_element(std::string_view text) {
  DotDiagram d = parse_dot_diagram(text);
  if (!d.has_origin) throw ParseError("structuring element diagram has no origin marker 'o'");
  return StructuringElement(std::move(d.points));
}

std::string render_dot_diagram(const PointSet& points) {
  if (points.dimension() != 2) throw InvalidArgument("dot diagrams are two-dimensional");
  if (points.empty()) throw InvalidArgument("cannot render an empty set");
  const Box box = bounding_box(points);
  std::string out;
  for (Point::Coord y = box.hi[1]; y >= box.lo[1]; --y) {
    for (Point::Coord x = box.lo[0]; x <= box.hi[0]; ++x) {
      const Point p{x, y};
      if (!points.contains(p)) {
        out += '.';
      } else {
        out += p.is_zero() ? 'o' : '#';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace latmorph
