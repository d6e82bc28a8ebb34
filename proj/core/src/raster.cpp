#include "dfl/raster.hpp"

#include <stdexcept>

#include "dfl/dilated.hpp"

namespace dfl {

namespace {

constexpr std::size_t kMaxRenderCells = std::size_t{1} << 26;

std::size_t to_extent(const Int& v) {
    if (v < 0 || v > kMaxRenderCells) {
        throw std::length_error("render: grid too large");
    }
    return v.convert_to<std::size_t>();
}

}  // namespace

DigitalLine rasterize(const Rat& alpha, const Rat& gamma, const Int& n_min,
                      const Int& n_max) {
    if (n_min > n_max) {
        throw std::invalid_argument("rasterize: n_min > n_max");
    }
    DigitalLine line{alpha, gamma, {}};
    for (Int n = n_min; n <= n_max; ++n) {
        line.pixels.push_back({n, eval_affine(alpha, gamma, Rat(n))});
    }
    return line;
}

std::string render(const DigitalLine& line, ImageFormat format) {
    if (line.pixels.empty()) {
        throw std::invalid_argument("render: empty pixel list");
    }
    Int y_min = line.pixels.front().y;
    Int y_max = y_min;
    for (const Pixel& p : line.pixels) {
        if (p.y < y_min) {
            y_min = p.y;
        }
        if (p.y > y_max) {
            y_max = p.y;
        }
    }
    const std::size_t width = line.pixels.size();
    const std::size_t height = to_extent(y_max - y_min + 1);
    if (width * height > kMaxRenderCells) {
        throw std::length_error("render: grid too large");
    }

    // Cell index of a pixel: column = position in the list, row counted from
    // the top, where the top row is the largest ordinate.
    auto row_of = [&](const Pixel& p) { return to_extent(y_max - p.y); };

    switch (format) {
        case ImageFormat::Ascii: {
            std::string out((width + 1) * height, '.');
            for (std::size_t r = 0; r < height; ++r) {
                out[(width + 1) * r + width] = '\n';
            }
            for (std::size_t c = 0; c < width; ++c) {
                out[(width + 1) * row_of(line.pixels[c]) + c] = '#';
            }
            return out;
        }
        case ImageFormat::Pgm: {
            std::string out = "P5 " + std::to_string(width) + " " +
                              std::to_string(height) + " 255\n";
            std::string raster(width * height, static_cast<char>(255));
            for (std::size_t c = 0; c < width; ++c) {
                raster[width * row_of(line.pixels[c]) + c] = '\0';
            }
            out += raster;
            return out;
        }
        case ImageFormat::Svg: {
            std::string out =
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                std::to_string(width) + " " + std::to_string(height) +
                "\" shape-rendering=\"crispEdges\">\n"
                "<!-- top row is the largest ordinate -->\n";
            for (std::size_t c = 0; c < width; ++c) {
                out += "<rect x=\"" + std::to_string(c) + "\" y=\"" +
                       std::to_string(row_of(line.pixels[c])) +
                       "\" width=\"1\" height=\"1\"/>\n";
            }
            out += "</svg>\n";
            return out;
        }
    }
    return {};  // unreachable
}

}  // namespace dfl
