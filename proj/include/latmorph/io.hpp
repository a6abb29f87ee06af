#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "latmorph/granulometry.hpp"
#include "latmorph/image.hpp"

namespace latmorph {

/// ASCII graymap. Column c is x = c and row r is y = height - 1 - r, so the
/// bottom-left pixel is (0, 0).
struct PgmImage {
  Image image;
  int maxval = 255;
};

PgmImage parse_pgm(std::string_view text);
/// Values must be integers in [0, maxval].
std::string format_pgm(const Image& g, int maxval);

/// Masked grid: an optional `origin X Y` line naming the bottom-left cell's
/// coordinates (default 0 0), then rows top to bottom of whitespace
/// separated values with '_' for cells outside the domain. Lines starting
/// with '#' are comments.
Image parse_masked_grid(std::string_view text);
std::string format_masked_grid(const Image& g);

/// Shortest decimal text that reads back to the same double.
std::string format_value(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Dispatches on the extension: ".pgm" is PGM, anything else a masked grid.
Image load_image(const std::filesystem::path& path);

/// Header "step,zero_pixels" then one line per step.
std::string format_curve_csv(const GranulometryResult& r);

}  // namespace latmorph
