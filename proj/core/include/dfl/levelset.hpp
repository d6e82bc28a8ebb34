#pragma once

#include <optional>
#include <string>

#include "dfl/rat.hpp"

namespace dfl {

/// A half-line with exact rational endpoint, or one of the two degenerate
/// sets. This is the complete range of shapes an upper level set
/// {x : floor(s*floor(t*x)) >= n} can take.
///
/// Structural equality equals set equality: endpoints are canonical
/// rationals and the degenerate variants carry no endpoint state.
class HalfLine {
  public:
    enum class Kind { UpwardRay, DownwardRay, Everything, Empty };

    /// [e, inf) when closed, (e, inf) when open.
    static HalfLine upward(Rat endpoint, bool closed);
    /// (-inf, e] when closed, (-inf, e) when open.
    static HalfLine downward(Rat endpoint, bool closed);
    static HalfLine everything();
    static HalfLine empty();

    Kind kind() const noexcept { return kind_; }
    bool is_ray() const noexcept {
        return kind_ == Kind::UpwardRay || kind_ == Kind::DownwardRay;
    }
    /// Throws std::logic_error for Everything/Empty.
    const Rat& endpoint() const;
    /// Whether the endpoint belongs to the set. Throws for Everything/Empty.
    bool closed() const;

    bool contains(const Rat& x) const;

    bool operator==(const HalfLine& o) const;

    /// Interval notation: "[2, inf)", "(-inf, 1)", "R", "{}".
    std::string str() const;

  private:
    HalfLine(Kind kind, Rat endpoint, bool closed)
        : kind_(kind), endpoint_(std::move(endpoint)), closed_(closed) {}

    Kind kind_;
    Rat endpoint_;  // meaningful for ray kinds only; 0 otherwise
    bool closed_;   // likewise
};

/// The upper level set {x : floor(s*floor(t*x)) >= n}, where s is the outer
/// and t the inner dilation factor. Exact closed forms for every sign
/// combination; s = 0 or t = 0 gives Everything (n <= 0) or Empty (n > 0)
/// since the composition is identically zero.
HalfLine upper_level_set(const Rat& s, const Rat& t, const Int& n);

/// True iff a and b denote the same point set.
bool halfline_equal(const HalfLine& a, const HalfLine& b);

/// A rational point lying in exactly one of the two sets, or nothing when
/// they are equal. For same-direction rays with distinct endpoints the
/// midpoint of the endpoints is returned; when only endpoint membership
/// differs, the endpoint itself. The choice is deterministic.
std::optional<Rat> separating_point(const HalfLine& a, const HalfLine& b);

std::ostream& operator<<(std::ostream& os, const HalfLine& h);

}  // namespace dfl
