#include "latmorph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "latmorph/error.hpp"

namespace latmorph {

namespace {

// Splits PGM text into tokens, dropping '#' comments.
std::vector<std::string> pgm_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  bool comment = false;
  for (char c : text) {
    if (comment) {
      comment = c != '\n';
    } else if (c == '#') {
      flush();
      comment = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

long parse_int(const std::string& s, const char* what) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("invalid pixel value '" + s + "'");
  if (!std::isfinite(v) || v < 0) throw ParseError("pixel values must be finite and non-negative: '" + s + "'");
  return v;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

PgmImage parse_pgm(std::string_view text) {
  const auto tok = pgm_tokens(text);
  if (tok.empty() || tok[0] != "P2") throw ParseError("not an ASCII PGM (missing P2 magic)");
  if (tok.size() < 4) throw ParseError("truncated PGM header");
  const long w = parse_int(tok[1], "width");
  const long h = parse_int(tok[2], "height");
  const long maxval = parse_int(tok[3], "maxval");
  if (w < 1 || h < 1) throw ParseError("PGM dimensions must be positive");
  if (maxval < 1 || maxval > 65535) throw ParseError("PGM maxval must lie in [1, 65535]");
  if (tok.size() != 4 + static_cast<std::size_t>(w * h)) {
    throw ParseError("PGM has " + std::to_string(tok.size() - 4) + " samples, expected " + std::to_string(w * h));
  }
  const int wi = static_cast<int>(w);
  const int hi = static_cast<int>(h);
  auto domain = std::make_shared<const PixelSet>(PixelSet::rectangle(Point{0, 0}, Point{wi - 1, hi - 1}));
  std::vector<double> values(domain->size());
  for (int r = 0; r < hi; ++r) {
    for (int c = 0; c < wi; ++c) {
      const long v = parse_int(tok[4 + static_cast<std::size_t>(r * wi + c)], "sample");
      if (v < 0 || v > maxval) throw ParseError("PGM sample out of range: " + std::to_string(v));
      values[*domain->index_of(Point{c, hi - 1 - r})] = static_cast<double>(v);
    }
  }
  return PgmImage{Image(domain, std::move(values)), static_cast<int>(maxval)};
}

std::string format_pgm(const Image& g, int maxval) {
  const PixelSet& p = g.domain();
  if (p.dimension() != 2 || !p.is_rectangle()) throw InvalidArgument("PGM output needs a 2D rectangular domain");
  const Box& box = *p.rectangle_descriptor();
  const int w = box.hi[0] - box.lo[0] + 1;
  const int h = box.hi[1] - box.lo[1] + 1;
  std::ostringstream out;
  out << "P2\n" << w << ' ' << h << '\n' << maxval << '\n';
  for (int y = box.hi[1]; y >= box.lo[1]; --y) {
    for (int x = box.lo[0]; x <= box.hi[0]; ++x) {
      const double v = g.at(Point{x, y});
      if (v != std::floor(v) || v > maxval) {
        throw InvalidArgument("value " + format_value(v) + " cannot be stored in a PGM with maxval " +
                              std::to_string(maxval));
      }
      if (x != box.lo[0]) out << ' ';
      out << static_cast<long>(v);
    }
    out << '\n';
  }
  return out.str();
}

Image parse_masked_grid(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  int ox = 0;
  int oy = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto t = split_ws(line);
    if (t.empty() || t[0][0] == '#') continue;
    if (t[0] == "origin") {
      if (!rows.empty() || t.size() != 3) throw ParseError("'origin X Y' must precede the grid rows");
      ox = static_cast<int>(parse_int(t[1], "origin x"));
      oy = static_cast<int>(parse_int(t[2], "origin y"));
      continue;
    }
    rows.push_back(t);
  }
  if (rows.empty()) throw ParseError("masked grid has no rows");
  const std::size_t width = rows[0].size();
  std::vector<Point> pts;
  std::vector<std::pair<Point, double>> cells;
  const int h = static_cast<int>(rows.size());
  for (int r = 0; r < h; ++r) {
    if (rows[r].size() != width) throw ParseError("masked grid rows have different lengths");
    for (std::size_t c = 0; c < width; ++c) {
      if (rows[r][c] == "_") continue;
      const Point q{ox + static_cast<int>(c), oy + h - 1 - r};
      cells.emplace_back(q, parse_double(rows[r][c]));
      pts.push_back(q);
    }
  }
  if (pts.empty()) throw ParseError("masked grid has no pixels");
  auto domain = std::make_shared<const PixelSet>(PointSet(2, std::move(pts)));
  std::vector<double> values(domain->size());
  for (const auto& [q, v] : cells) values[*domain->index_of(q)] = v;
  return Image(domain, std::move(values));
}

std::string format_value(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_masked_grid(const Image& g) {
  const PixelSet& p = g.domain();
  if (p.dimension() != 2) throw InvalidArgument("masked grids are two-dimensional");
  const Box box = bounding_box(p.points());
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (int y = box.hi[1]; y >= box.lo[1]; --y) {
    for (int x = box.lo[0]; x <= box.hi[0]; ++x) {
      const auto idx = p.index_of(Point{x, y});
      cells.push_back(idx ? format_value(g[*idx]) : "_");
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream out;
  out << "origin " << box.lo[0] << ' ' << box.lo[1] << '\n';
  const int cols = box.hi[0] - box.lo[0] + 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool first = i % static_cast<std::size_t>(cols) == 0;
    if (!first) out << ' ';
    out << std::string(width - cells[i].size(), ' ') << cells[i];
    if (i % static_cast<std::size_t>(cols) == static_cast<std::size_t>(cols) - 1) out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

Image load_image(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".pgm") return parse_pgm(text).image;
  return parse_masked_grid(text);
}

std::string format_curve_csv(const GranulometryResult& r) {
  std::string out = "step,zero_pixels\n";
  for (const auto& s : r.steps) out += std::to_string(s.index) + "," + std::to_string(s.zero_pixels) + "\n";
  return out;
}

}  // namespace latmorph
