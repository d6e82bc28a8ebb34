#include "dfl/levelset.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace dfl {

HalfLine HalfLine::upward(Rat endpoint, bool closed) {
    return HalfLine(Kind::UpwardRay, std::move(endpoint), closed);
}

HalfLine HalfLine::downward(Rat endpoint, bool closed) {
    return HalfLine(Kind::DownwardRay, std::move(endpoint), closed);
}

HalfLine HalfLine::everything() {
    return HalfLine(Kind::Everything, Rat(), false);
}

HalfLine HalfLine::empty() {
    return HalfLine(Kind::Empty, Rat(), false);
}

const Rat& HalfLine::endpoint() const {
    if (!is_ray()) {
        throw std::logic_error("HalfLine: no endpoint on Everything/Empty");
    }
    return endpoint_;
}

bool HalfLine::closed() const {
    if (!is_ray()) {
        throw std::logic_error("HalfLine: no endpoint on Everything/Empty");
    }
    return closed_;
}

bool HalfLine::contains(const Rat& x) const {
    switch (kind_) {
        case Kind::Everything:
            return true;
        case Kind::Empty:
            return false;
        case Kind::UpwardRay:
            return closed_ ? x >= endpoint_ : x > endpoint_;
        case Kind::DownwardRay:
            return closed_ ? x <= endpoint_ : x < endpoint_;
    }
    return false;  // unreachable
}

bool HalfLine::operator==(const HalfLine& o) const {
    if (kind_ != o.kind_) {
        return false;
    }
    if (!is_ray()) {
        return true;
    }
    return endpoint_ == o.endpoint_ && closed_ == o.closed_;
}

std::string HalfLine::str() const {
    switch (kind_) {
        case Kind::Everything:
            return "R";
        case Kind::Empty:
            return "{}";
        case Kind::UpwardRay:
            return (closed_ ? "[" : "(") + endpoint_.str() + ", inf)";
        case Kind::DownwardRay:
            return "(-inf, " + endpoint_.str() + (closed_ ? "]" : ")");
    }
    return {};  // unreachable
}

// The four ray cases below are the level-set identities for the composed
// step function F(x) = floor(s*floor(t*x)), written in terms of the inverse
// parameters a = 1/s, b = 1/t. For s, t > 0:
//
//   F(x) >= n  <=>  (1/a)*floor(x/b) >= n      (definition, a = 1/s)
//              <=>  floor(x/b) >= n*a          (a > 0)
//              <=>  floor(x/b) >= ceil(n*a)    (left side integral)
//              <=>  x/b >= ceil(n*a)           (right side integral)
//              <=>  x >= b*ceil(n*a)           (b > 0),
//
// a closed upward ray. Flipping the sign of s turns the second step into
// floor(x/b) <= n*a, hence <= floor(n*a), hence x/b < floor(n*a) + 1, giving
// the open endpoint b*(floor(n*a) + 1); flipping the sign of t reverses the
// final inequality, turning the ray downward. In dilation-factor form
// b*ceil(n*a) = (1/t)*ceil(n/s) and b*(floor(n*a)+1) = (1/t)*(floor(n/s)+1).
HalfLine upper_level_set(const Rat& s, const Rat& t, const Int& n) {
    if (s.is_zero() || t.is_zero()) {
        return n <= 0 ? HalfLine::everything() : HalfLine::empty();
    }
    const Rat level{n};
    const Rat inv_t = t.reciprocal();
    if (s.sign() > 0) {
        Rat endpoint = inv_t * Rat(ceil(level / s));
        return t.sign() > 0 ? HalfLine::upward(std::move(endpoint), true)
                            : HalfLine::downward(std::move(endpoint), true);
    }
    Rat endpoint = inv_t * Rat(floor(level / s) + 1);
    return t.sign() > 0 ? HalfLine::downward(std::move(endpoint), false)
                        : HalfLine::upward(std::move(endpoint), false);
}

bool halfline_equal(const HalfLine& a, const HalfLine& b) {
    return a == b;
}

namespace {

// A point strictly inside one set and outside the other when one side is
// degenerate.
Rat degenerate_separator(const HalfLine& ray) {
    switch (ray.kind()) {
        case HalfLine::Kind::UpwardRay:
            // endpoint - 1 is outside the ray, inside Everything; it is also
            // inside the ray's complement when compared against Empty, where
            // we need a point *inside* the ray instead.
            return ray.endpoint() - Rat(1);
        case HalfLine::Kind::DownwardRay:
            return ray.endpoint() + Rat(1);
        default:
            return Rat(0);
    }
}

}  // namespace

std::optional<Rat> separating_point(const HalfLine& a, const HalfLine& b) {
    if (a == b) {
        return std::nullopt;
    }
    using Kind = HalfLine::Kind;

    // One side degenerate: Everything vs Empty, or degenerate vs ray.
    if (!a.is_ray() || !b.is_ray()) {
        if (!a.is_ray() && !b.is_ray()) {
            return Rat(0);  // Everything vs Empty: any point separates
        }
        const HalfLine& ray = a.is_ray() ? a : b;
        const HalfLine& degenerate = a.is_ray() ? b : a;
        // Against Everything: a point just outside the ray. Against Empty:
        // a point inside it. Either way, one step past the endpoint on the
        // appropriate side.
        const bool want_inside = degenerate.kind() == Kind::Empty;
        Rat candidate = degenerate_separator(ray);
        if (want_inside) {
            candidate = ray.kind() == Kind::UpwardRay ? ray.endpoint() + Rat(1)
                                                      : ray.endpoint() - Rat(1);
        }
        return candidate;
    }

    if (a.kind() == b.kind()) {
        if (a.endpoint() == b.endpoint()) {
            // Only endpoint membership differs.
            return a.endpoint();
        }
        // The symmetric difference contains the whole open interval between
        // the endpoints; the midpoint is always strictly inside it.
        return (a.endpoint() + b.endpoint()) / Rat(2);
    }

    // Opposite ray directions: any point above both endpoints lies in the
    // upward ray and outside the downward one.
    const Rat& hi = a.endpoint() > b.endpoint() ? a.endpoint() : b.endpoint();
    return hi + Rat(1);
}

std::ostream& operator<<(std::ostream& os, const HalfLine& h) {
    return os << h.str();
}

}  // namespace dfl
