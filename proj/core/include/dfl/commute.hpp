#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "dfl/levelset.hpp"
#include "dfl/rat.hpp"

namespace dfl {

/// Which family of commuting pairs, if any, a dilation pair (s, t) falls
/// into. The complete commuting set consists of the pairs with s = t, the
/// pairs where either factor is zero, and the unit-fraction pairs
/// (1/m, 1/n) for positive integers m, n; everything else fails to commute.
enum class FamilyCase { Equal, ZeroLeft, ZeroRight, UnitFractions, NonCommuting };

std::string_view family_case_name(FamilyCase c);

/// Classification outcome for a pair of dilation factors. Overlapping
/// families resolve deterministically: Equal wins over the zero cases, which
/// win over UnitFractions.
struct Verdict {
    bool commutes = false;
    FamilyCase family = FamilyCase::NonCommuting;
    /// Set for UnitFractions: the pair is exactly (1/m, 1/n).
    std::optional<Int> m;
    std::optional<Int> n;
    /// Set for NonCommuting: the first level at which the two upper level
    /// sets differ.
    std::optional<Int> first_failing_level;
};

/// A concrete refutation of commutativity: a rational input where the two
/// composition orders produce different values.
struct Witness {
    Rat x;
    Int lhs;  // floor(s*floor(t*x))
    Int rhs;  // floor(t*floor(s*x))

    bool operator==(const Witness&) const = default;
};

/// Evaluates both composition orders of (s, t) at x and packages the result
/// as a Witness. Throws std::logic_error if the values agree, so a Witness
/// can only ever exist verified.
Witness checked_witness(const Rat& s, const Rat& t, const Rat& x);

/// Decide whether floor(s*floor(t*x)) == floor(t*floor(s*x)) for all real x
/// and name the family. For non-commuting pairs the verdict carries the
/// first failing level found by the sign-appropriate criterion.
///
/// Inputs are exact rationals; an irrational dilation factor has no exact
/// machine representation. The classification itself still covers that
/// case symbolically: since unit fractions are rational, an irrational
/// pair commutes iff the factors are equal or one of them is zero.
Verdict classify(const Rat& s, const Rat& t);

/// Commutation criterion for s, t > 0, in terms of a = 1/s, b = 1/t: the
/// pair commutes iff b*ceil(n*a) == a*ceil(n*b) for every integer n, which
/// one full period 0 <= n < lcm(den(a), den(b)) already decides (see the
/// periodicity note in the implementation). Returns (true, nothing) or
/// (false, first failing n). Throws std::invalid_argument unless both
/// factors are positive.
std::pair<bool, std::optional<Int>> criterion_positive(const Rat& s, const Rat& t);

/// Commutation criterion for s, t < 0: with a = 1/s, b = 1/t, the pair
/// commutes iff b*floor(n*a) + b == a*floor(n*b) + a for every integer n.
/// Already n = 0 forces a == b, so the full-period sweep doubles as a
/// cross-check. Throws std::invalid_argument unless both are negative.
std::pair<bool, std::optional<Int>> criterion_negative(const Rat& s, const Rat& t);

/// For s*t < 0 the pair never commutes: at any level one upper level set is
/// a closed downward ray and the other an open one. Returns a level at
/// which they differ (always 0), after asserting the inequality.
/// Throws std::invalid_argument if s*t >= 0.
Int mixed_sign_disproof(const Rat& s, const Rat& t);

/// Produce a verified counterexample for a non-commuting pair: locate a
/// level where the upper level sets differ, take a separating point, and
/// re-evaluate both composition orders there. Throws std::invalid_argument
/// if the pair commutes, std::logic_error if verification fails (which
/// would indicate a formula bug, not bad input).
Witness find_witness(const Rat& s, const Rat& t);

/// Outcome of an exhaustive sweep: either no counterexample exists on the
/// sampled grid, or the first one found, verified.
struct OracleResult {
    bool no_counterexample = true;
    std::optional<Witness> witness;
};

/// Evaluate both composition orders at every x = k/denominator_bound with
/// lo <= x <= hi, in ascending order, and report the first disagreement.
/// A sound refuter but not a complete prover: the functions may differ only
/// outside the window. Throws std::invalid_argument if
/// denominator_bound < 1.
OracleResult brute_force_commute(const Rat& s, const Rat& t, const Rat& lo,
                                 const Rat& hi, const Int& denominator_bound);

/// The same sweep for affine maps x -> floor(a*x + g): compares
/// f_{a1,g1} o f_{a2,g2} against the reverse order. Purely exploratory;
/// no classification is known for nonzero offsets.
OracleResult affine_commute_oracle(const Rat& a1, const Rat& g1, const Rat& a2,
                                   const Rat& g2, const Rat& lo, const Rat& hi,
                                   const Int& denominator_bound);

}  // namespace dfl
