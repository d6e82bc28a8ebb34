#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dfl/commute.hpp"
#include "dfl/rat.hpp"

namespace dfl {

/// Cross-check window used by the pair sweep, fixed for reproducibility:
/// the brute-force oracle samples x = k/D over [kSweepLo, kSweepHi] with
/// D = kSweepDenFactor * den(s) * den(t).
inline constexpr int kSweepLo = -10;
inline constexpr int kSweepHi = 10;
inline constexpr int kSweepDenFactor = 12;

/// All reduced rationals with |numerator| <= max_num and denominator
/// <= max_den, zero included (as 0/1), ordered by numerator then
/// denominator. Throws std::invalid_argument unless both bounds are >= 1.
std::vector<Rat> sweep_grid(const Int& max_num, const Int& max_den);

/// Everything the sweep learned about one ordered pair.
struct PairOutcome {
    Rat s;
    Rat t;
    Verdict verdict;
    /// Windowed brute-force oracle outcome at the fixed parameters above.
    bool oracle_clear = true;
    std::optional<Witness> oracle_witness;
    /// For non-commuting pairs: the level-set witness, re-verified by direct
    /// evaluation. Present even when the windowed oracle saw nothing, in
    /// which case the counterexample lies outside the window.
    std::optional<Witness> verified_witness;

    /// Strict boolean agreement between the classifier and the windowed
    /// oracle. False either flags a classifier bug (oracle refuted a
    /// "commuting" pair) or a counterexample beyond the oracle window.
    bool agrees() const { return verdict.commutes == oracle_clear; }
};

struct SweepReport {
    std::vector<Rat> values;
    /// Ordered pairs, s-major then t-minor, in grid order.
    std::vector<PairOutcome> pairs;

    std::size_t commuting_count = 0;
    std::size_t mismatch_count = 0;
    /// Whether the commuting set is exactly
    /// {s == t} U {s == 0} U {t == 0} U {unit-fraction pairs}.
    bool families_exact = true;
};

/// Classify every ordered pair from sweep_grid(max_num, max_den), cross-check
/// each against the windowed brute-force oracle, and attach verified
/// witnesses to all non-commuting pairs. Pair classification fans out across
/// `threads` workers (0 = hardware concurrency); outcomes land in
/// deterministic grid order regardless of scheduling.
SweepReport run_sweep(const Int& max_num, const Int& max_den, unsigned threads = 0);

}  // namespace dfl
