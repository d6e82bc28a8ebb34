#pragma once

#include <string>
#include <vector>

#include "dfl/rat.hpp"

namespace dfl {

/// One pixel of a digital line: abscissa n and ordinate floor(alpha*n + gamma).
struct Pixel {
    Int n;
    Int y;

    bool operator==(const Pixel&) const = default;
};

/// The pixel sequence of the digital straight line for y = alpha*x + gamma
/// over a contiguous abscissa range. Abscissas are consecutive integers.
struct DigitalLine {
    Rat alpha;
    Rat gamma;
    std::vector<Pixel> pixels;
};

/// Sample the line recipe n -> (n, floor(alpha*n + gamma)) for every integer
/// n_min <= n <= n_max. Throws std::invalid_argument if n_min > n_max.
DigitalLine rasterize(const Rat& alpha, const Rat& gamma, const Int& n_min,
                      const Int& n_max);

enum class ImageFormat { Ascii, Pgm, Svg };

/// Render the pixel grid. Rows are printed from the largest ordinate at the
/// top down to the smallest.
///
///  - Ascii: '#' at pixels, '.' elsewhere, one row per line.
///  - Pgm: binary P5, "P5 <width> <height> 255\n" then one byte per cell,
///    0 at pixels and 255 elsewhere; width is the pixel count and height the
///    ordinate extent.
///  - Svg: one unit square per pixel inside a viewBox matching the grid.
///
/// Throws std::invalid_argument on an empty pixel list.
std::string render(const DigitalLine& line, ImageFormat format);

}  // namespace dfl
