#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>
#include <vector>

#include "dfl/dilated.hpp"
#include "dfl/raster.hpp"
#include "test_util.hpp"

using dfl::DigitalLine;
using dfl::Int;
using dfl::Pixel;
using dfl::Rat;

namespace {

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(DFL_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Test-side ascii parser: recovers pixels from the grid given its origin.
std::vector<Pixel> parse_ascii(const std::string& grid, const Int& n_min,
                               const Int& y_max) {
    std::vector<Pixel> out;
    Int row = y_max;
    Int col = 0;
    for (const char c : grid) {
        if (c == '\n') {
            --row;
            col = 0;
        } else {
            if (c == '#') {
                out.push_back({n_min + col, row});
            }
            ++col;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Pixel& a, const Pixel& b) { return a.n < b.n; });
    return out;
}

}  // namespace

TEST_CASE("rasterize samples floor(alpha*n + gamma) over the range") {
    const DigitalLine half = dfl::rasterize(Rat(1, 2), Rat(0), 0, 3);
    REQUIRE(half.pixels.size() == 4);
    CHECK(half.pixels[0] == Pixel{0, 0});
    CHECK(half.pixels[1] == Pixel{1, 0});
    CHECK(half.pixels[2] == Pixel{2, 1});
    CHECK(half.pixels[3] == Pixel{3, 1});

    for (const Pixel& p : dfl::rasterize(Rat(0), Rat(0), -4, 4).pixels) {
        CHECK(p.y == 0);
    }

    const DigitalLine line = dfl::rasterize(Rat(2, 3), Rat(1, 2), 0, 5);
    for (const Pixel& p : line.pixels) {
        CHECK(p.y == dfl::eval_affine(Rat(2, 3), Rat(1, 2), Rat(p.n)));
    }

    CHECK_THROWS_AS(dfl::rasterize(Rat(1), Rat(0), 3, 0), std::invalid_argument);
}

TEST_CASE("ascii rendering, largest ordinate on top") {
    const DigitalLine dot = dfl::rasterize(Rat(0), Rat(0), 0, 0);
    CHECK(dfl::render(dot, dfl::ImageFormat::Ascii) == "#\n");

    const DigitalLine half = dfl::rasterize(Rat(1, 2), Rat(0), 0, 3);
    CHECK(dfl::render(half, dfl::ImageFormat::Ascii) == "..##\n##..\n");

    CHECK_THROWS_AS(dfl::render(DigitalLine{Rat(1), Rat(0), {}},
                                dfl::ImageFormat::Ascii),
                    std::invalid_argument);
}

TEST_CASE("pgm rendering is binary P5 with 0 at pixels") {
    const DigitalLine half = dfl::rasterize(Rat(1, 2), Rat(0), 0, 3);
    const std::string pgm = dfl::render(half, dfl::ImageFormat::Pgm);
    const std::string expected =
        std::string("P5 4 2 255\n") +
        std::string("\xff\xff\x00\x00\x00\x00\xff\xff", 8);
    REQUIRE(pgm.size() == 11 + 8);
    CHECK(pgm.substr(0, 11) == "P5 4 2 255\n");
    CHECK(pgm == expected);
}

TEST_CASE("renders match the stored golden files byte for byte") {
    const DigitalLine half = dfl::rasterize(Rat(1, 2), Rat(0), 0, 3);
    CHECK(dfl::render(half, dfl::ImageFormat::Ascii) ==
          read_file("raster_halfslope.txt"));
    CHECK(dfl::render(half, dfl::ImageFormat::Pgm) ==
          read_file("raster_halfslope.pgm"));
    CHECK(dfl::render(half, dfl::ImageFormat::Svg) ==
          read_file("raster_halfslope.svg"));
}

TEST_CASE("ascii grid parses back to the exact pixel set") {
    std::mt19937_64 rng(0xdf501);
    for (int i = 0; i < 60; ++i) {
        const Rat alpha = dfl_test::random_rat(rng, 9, 5);
        const Rat gamma = dfl_test::random_rat(rng, 9, 5);
        const long n0 = dfl_test::draw(rng, -10, 10);
        const long n1 = n0 + dfl_test::draw(rng, 0, 14);
        const DigitalLine line = dfl::rasterize(alpha, gamma, n0, n1);
        Int y_max = line.pixels.front().y;
        for (const Pixel& p : line.pixels) {
            y_max = p.y > y_max ? p.y : y_max;
        }
        const auto recovered =
            parse_ascii(dfl::render(line, dfl::ImageFormat::Ascii), n0, y_max);
        CHECK(recovered == line.pixels);
    }
}

TEST_CASE("pixels deviate from the true line by less than one") {
    std::mt19937_64 rng(0xdf502);
    for (int i = 0; i < 100; ++i) {
        const Rat alpha = dfl_test::random_rat(rng, 20, 9);
        const Rat gamma = dfl_test::random_rat(rng, 20, 9);
        for (const Pixel& p : dfl::rasterize(alpha, gamma, -8, 8).pixels) {
            const Rat deviation = Rat(p.y) - (alpha * Rat(p.n) + gamma);
            CHECK(dfl::abs(deviation) < Rat(1));
        }
    }
}

TEST_CASE("integer slope and offset digitize exactly") {
    for (int a = -3; a <= 3; ++a) {
        for (int g = -2; g <= 2; ++g) {
            for (const Pixel& p : dfl::rasterize(Rat(a), Rat(g), -5, 5).pixels) {
                CHECK(Rat(p.y) == Rat(a) * Rat(p.n) + Rat(g));
            }
        }
    }
}

TEST_CASE("svg contains one unit square per pixel") {
    const DigitalLine line = dfl::rasterize(Rat(1, 3), Rat(0), 0, 5);
    const std::string svg = dfl::render(line, dfl::ImageFormat::Svg);
    std::size_t rects = 0;
    for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1)) {
        ++rects;
    }
    CHECK(rects == line.pixels.size());
    CHECK(svg.find("viewBox=\"0 0 6 2\"") != std::string::npos);
}
