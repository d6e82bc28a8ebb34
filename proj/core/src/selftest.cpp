#include "dfl/selftest.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "dfl/commute.hpp"
#include "dfl/dilated.hpp"
#include "dfl/levelset.hpp"
#include "dfl/raster.hpp"
#include "dfl/rat.hpp"
#include "dfl/sweep.hpp"

namespace dfl::selftest {

namespace {

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    Rat rat(int max_num = 24, int max_den = 12, bool nonzero = false) {
        std::uniform_int_distribution<int> num(-max_num, max_num);
        std::uniform_int_distribution<int> den(1, max_den);
        for (;;) {
            Rat r(num(rng), den(rng));
            if (!nonzero || !r.is_zero()) {
                return r;
            }
        }
    }
};

bool rational_arithmetic() {
    Gen gen(0x5eed0001);
    for (int i = 0; i < 500; ++i) {
        const Rat a = gen.rat();
        const Rat b = gen.rat();
        if ((a + b) - b != a) {
            return false;
        }
        if (!b.is_zero() && (a * b) / b != a) {
            return false;
        }
        // Canonical form: scaled construction collapses to the same words.
        const Rat scaled(a.num() * 42, a.den() * 42);
        if (scaled.num() != a.num() || scaled.den() != a.den()) {
            return false;
        }
        if (Rat::parse(a.str()) != a) {
            return false;
        }
        const Int f = floor(a);
        if (!(Rat(f) <= a && a < Rat(f + 1))) {
            return false;
        }
        const Rat fp = frac(a);
        if (!(Rat(0) <= fp && fp < Rat(1))) {
            return false;
        }
        if ((frac_up(a).is_zero()) != a.is_integer()) {
            return false;
        }
    }
    return true;
}

bool floor_ceil_duality() {
    Gen gen(0x5eed0002);
    for (int i = 0; i < 500; ++i) {
        const Rat x = gen.rat();
        if (ceil(x) != -floor(-x)) {
            return false;
        }
        const Rat a = gen.rat();
        const Rat b = gen.rat();
        const Rat chain[] = {a, b};
        const Int via_floor = eval_chain(chain, x);
        const Int via_ceil = -eval_ceiling_dual(a, Rat(eval_ceiling_dual(b, -x)));
        if (via_floor != via_ceil) {
            return false;
        }
    }
    return true;
}

bool h_identity_and_bound() {
    Gen gen(0x5eed0003);
    for (int i = 0; i < 500; ++i) {
        const Rat a = gen.rat();
        const Rat b = gen.rat();
        const Rat x = gen.rat();
        const Rat h = h_diff(a, b, x);
        if (h != h_closed_form(a, b, x)) {
            return false;
        }
        if (a.sign() > 0 && b.sign() > 0) {
            if (!(-(a + Rat(1)) < h && h <= Rat(0))) {
                return false;
            }
        }
    }
    return true;
}

bool tm_semigroup() {
    for (int m = 1; m <= 8; ++m) {
        for (int n = 1; n <= 8; ++n) {
            for (int k = -60; k <= 60; ++k) {
                const Rat x(k, 12);
                const Int mn = tm_eval(m, Rat(tm_eval(n, x)));
                const Int nm = tm_eval(n, Rat(tm_eval(m, x)));
                const Int direct = tm_eval(Int(m) * n, x);
                if (mn != direct || nm != direct) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool level_set_formulas() {
    const std::vector<Rat> values = sweep_grid(3, 3);
    for (const Rat& s : values) {
        for (const Rat& t : values) {
            if (s.is_zero() || t.is_zero()) {
                continue;
            }
            for (int n = -5; n <= 5; ++n) {
                const HalfLine set = upper_level_set(s, t, n);
                const Rat& e = set.endpoint();
                const Rat delta(1, 4 * e.den());
                for (const Rat& x : {e - delta, e, e + delta}) {
                    const Rat chain[] = {s, t};
                    if (set.contains(x) != (eval_chain(chain, x) >= n)) {
                        return false;
                    }
                }
                // Level sets shrink as the level rises.
                const HalfLine next = upper_level_set(s, t, Int(n) + 1);
                for (const Rat& x : {e - delta, e, e + delta}) {
                    if (next.contains(x) && !set.contains(x)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool separating_points() {
    Gen gen(0x5eed0004);
    std::vector<HalfLine> sets = {HalfLine::everything(), HalfLine::empty()};
    for (int i = 0; i < 60; ++i) {
        const Rat s = gen.rat(6, 6, true);
        const Rat t = gen.rat(6, 6, true);
        std::uniform_int_distribution<int> level(-6, 6);
        sets.push_back(upper_level_set(s, t, level(gen.rng)));
    }
    for (const HalfLine& a : sets) {
        for (const HalfLine& b : sets) {
            const auto x = separating_point(a, b);
            if (halfline_equal(a, b)) {
                if (x) {
                    return false;
                }
                continue;
            }
            if (!x || a.contains(*x) == b.contains(*x)) {
                return false;
            }
        }
    }
    return true;
}

bool classify_consistency() {
    const std::vector<Rat> values = sweep_grid(3, 3);
    for (const Rat& s : values) {
        for (const Rat& t : values) {
            const Verdict verdict = classify(s, t);
            if (verdict.commutes != classify(t, s).commutes) {
                return false;
            }
            if (s.sign() > 0 && t.sign() > 0 &&
                criterion_positive(s, t).first != verdict.commutes) {
                return false;
            }
            if (s.sign() < 0 && t.sign() < 0 &&
                criterion_negative(s, t).first != verdict.commutes) {
                return false;
            }
            if (s.sign() * t.sign() < 0 && verdict.commutes) {
                return false;
            }
            if (!verdict.commutes) {
                const Witness w = find_witness(s, t);
                const Rat st[] = {s, t};
                const Rat ts[] = {t, s};
                if (w.lhs == w.rhs || eval_chain(st, w.x) != w.lhs ||
                    eval_chain(ts, w.x) != w.rhs) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool raster_roundtrip() {
    Gen gen(0x5eed0005);
    for (int i = 0; i < 40; ++i) {
        const Rat alpha = gen.rat(8, 6);
        const Rat gamma = gen.rat(8, 6);
        const DigitalLine line = rasterize(alpha, gamma, -5, 6);
        for (const Pixel& p : line.pixels) {
            const Rat deviation = Rat(p.y) - (alpha * Rat(p.n) + gamma);
            if (!(abs(deviation) < Rat(1))) {
                return false;
            }
            if (alpha.is_integer() && gamma.is_integer() &&
                Rat(p.y) != alpha * Rat(p.n) + gamma) {
                return false;
            }
        }
        // Recover the pixel set from the ascii grid.
        const std::string ascii = render(line, ImageFormat::Ascii);
        Int y_max = line.pixels.front().y;
        for (const Pixel& p : line.pixels) {
            if (p.y > y_max) {
                y_max = p.y;
            }
        }
        std::vector<Pixel> recovered;
        Int row = y_max;
        std::size_t col = 0;
        for (const char c : ascii) {
            if (c == '\n') {
                --row;
                col = 0;
                continue;
            }
            if (c == '#') {
                recovered.push_back({line.pixels.front().n + Int(col), row});
            }
            ++col;
        }
        std::sort(recovered.begin(), recovered.end(),
                  [](const Pixel& a, const Pixel& b) { return a.n < b.n; });
        if (recovered != line.pixels) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool run_all(std::ostream& log) {
    const std::vector<std::pair<std::string, std::function<bool()>>> suites = {
        {"rational-arithmetic", rational_arithmetic},
        {"floor-ceil-duality", floor_ceil_duality},
        {"h-identity-and-bound", h_identity_and_bound},
        {"tm-semigroup", tm_semigroup},
        {"level-set-formulas", level_set_formulas},
        {"separating-points", separating_points},
        {"classify-consistency", classify_consistency},
        {"raster-roundtrip", raster_roundtrip},
    };
    bool all_ok = true;
    for (const auto& [name, suite] : suites) {
        const bool ok = suite();
        all_ok = all_ok && ok;
        log << (ok ? "ok   " : "FAIL ") << name << '\n';
    }
    return all_ok;
}

}  // namespace dfl::selftest
