#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace dfl {

using Int = boost::multiprecision::cpp_int;

/// floor(a / b) for integers, b > 0. Rounds toward negative infinity, unlike
/// the truncating built-in division.
Int floor_div(const Int& a, const Int& b);

/// Exact rational scalar.
///
/// Always held in canonical form: gcd(|num|, den) = 1, den > 0, and zero is
/// 0/1. Because of this, structural equality of (num, den) coincides with
/// value equality, and rationals can be compared, hashed into maps, and
/// serialized without further normalization.
///
/// There is no floating-point anywhere in this class; all arithmetic is
/// exact at arbitrary precision.
class Rat {
  public:
    Rat() = default;
    Rat(int n) : num_(n) {}  // NOLINT: integers convert implicitly
    Rat(Int n) : num_(std::move(n)) {}

    /// Construct n/d and normalize. Throws std::domain_error if d == 0;
    /// a zero denominator is never representable, not even transiently.
    Rat(Int n, Int d);

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    Rat operator-() const;
    /// Throws std::domain_error on zero.
    Rat reciprocal() const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    /// Throws std::domain_error when b == 0.
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    // Canonical form makes structural equality value equality.
    bool operator==(const Rat&) const = default;
    std::strong_ordering operator<=>(const Rat& o) const;

    /// Parse the rational literal grammar used everywhere (CLI, JSON):
    /// optional sign, integer, optionally followed by "/" and a positive
    /// integer. Examples: "-3/7", "2", "0". Returns nothing on any other
    /// input, including a zero denominator.
    static std::optional<Rat> parse(std::string_view text);

    /// Reduced form with positive denominator, "/1" suppressed: "-3/7", "2".
    std::string str() const;

  private:
    Int num_{0};
    Int den_{1};
};

/// Largest integer <= x.
Int floor(const Rat& x);
/// Smallest integer >= x.
Int ceil(const Rat& x);
/// Fractional part x - floor(x), always in [0, 1).
Rat frac(const Rat& x);
/// Upper gap ceil(x) - x, always in [0, 1); zero exactly when x is integral.
Rat frac_up(const Rat& x);

Rat abs(const Rat& x);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace dfl
