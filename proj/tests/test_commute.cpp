#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dfl/commute.hpp"
#include "dfl/dilated.hpp"
#include "dfl/sweep.hpp"
#include "test_util.hpp"

using dfl::FamilyCase;
using dfl::Int;
using dfl::Rat;
using dfl::Verdict;
using dfl::Witness;
using dfl_test::random_rat;

namespace {

// Independent re-evaluation of a witness through the public chain evaluator.
void check_witness(const Rat& s, const Rat& t, const Witness& w) {
    const Rat st[] = {s, t};
    const Rat ts[] = {t, s};
    CHECK(w.lhs != w.rhs);
    CHECK(dfl::eval_chain(st, w.x) == w.lhs);
    CHECK(dfl::eval_chain(ts, w.x) == w.rhs);
}

}  // namespace

TEST_CASE("classify names the family") {
    const Verdict uf = dfl::classify(Rat(1, 2), Rat(1, 3));
    CHECK(uf.commutes);
    CHECK(uf.family == FamilyCase::UnitFractions);
    CHECK(*uf.m == 2);
    CHECK(*uf.n == 3);

    const Verdict eq = dfl::classify(Rat(-7, 3), Rat(-7, 3));
    CHECK(eq.commutes);
    CHECK(eq.family == FamilyCase::Equal);

    const Verdict nc = dfl::classify(Rat(2), Rat(3));
    CHECK_FALSE(nc.commutes);
    CHECK(nc.family == FamilyCase::NonCommuting);
    CHECK(*nc.first_failing_level == 1);

    const Verdict zl = dfl::classify(Rat(0), Rat(5));
    CHECK(zl.commutes);
    CHECK(zl.family == FamilyCase::ZeroLeft);

    const Verdict neg = dfl::classify(Rat(-1, 2), Rat(-1, 3));
    CHECK_FALSE(neg.commutes);
    CHECK(*neg.first_failing_level == 0);
}

TEST_CASE("family precedence: Equal, then zeros, then unit fractions") {
    CHECK(dfl::classify(Rat(0), Rat(0)).family == FamilyCase::Equal);
    CHECK(dfl::classify(Rat(1, 2), Rat(1, 2)).family == FamilyCase::Equal);
    CHECK(dfl::classify(Rat(1), Rat(1)).family == FamilyCase::Equal);
    CHECK(dfl::classify(Rat(0), Rat(7, 5)).family == FamilyCase::ZeroLeft);
    CHECK(dfl::classify(Rat(7, 5), Rat(0)).family == FamilyCase::ZeroRight);
    // 1 = 1/1 participates in the discrete family
    CHECK(dfl::classify(Rat(1), Rat(1, 2)).family == FamilyCase::UnitFractions);
}

TEST_CASE("criterion_positive") {
    CHECK(dfl::criterion_positive(Rat(1, 2), Rat(1, 3)) ==
          std::pair<bool, std::optional<Int>>{true, std::nullopt});
    const auto [ok, n] = dfl::criterion_positive(Rat(2), Rat(3));
    CHECK_FALSE(ok);
    CHECK(*n == 1);
    CHECK(dfl::criterion_positive(Rat(5, 7), Rat(5, 7)).first);
    CHECK_THROWS_AS(dfl::criterion_positive(Rat(-1), Rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(dfl::criterion_positive(Rat(0), Rat(2)), std::invalid_argument);
}

TEST_CASE("criterion_negative") {
    CHECK(dfl::criterion_negative(Rat(-3, 4), Rat(-3, 4)).first);
    const auto [ok, n] = dfl::criterion_negative(Rat(-1, 2), Rat(-1, 3));
    CHECK_FALSE(ok);
    CHECK(*n == 0);
    CHECK(dfl::criterion_negative(Rat(-2), Rat(-2)).first);
    CHECK_THROWS_AS(dfl::criterion_negative(Rat(1), Rat(-2)), std::invalid_argument);
}

// The finite check is justified by periodicity of the defect
// D(n) = b*frac_up(n*a) - a*frac_up(n*b) with period L = lcm(den(a), den(b)).
TEST_CASE("criterion defect repeats with period lcm of denominators") {
    std::mt19937_64 rng(0xdf401);
    for (int i = 0; i < 200; ++i) {
        const Rat s = dfl::abs(random_rat(rng, 12, 12, true));
        const Rat t = dfl::abs(random_rat(rng, 12, 12, true));
        const Rat a = s.reciprocal();
        const Rat b = t.reciprocal();
        const Int period = boost::multiprecision::lcm(a.den(), b.den());
        for (int j = 0; j < 8; ++j) {
            const Rat n{Int(dfl_test::draw(rng, -50, 50))};
            const Rat shifted = n + Rat(period);
            const Rat defect =
                b * dfl::frac_up(n * a) - a * dfl::frac_up(n * b);
            const Rat defect_shifted =
                b * dfl::frac_up(shifted * a) - a * dfl::frac_up(shifted * b);
            CHECK(defect == defect_shifted);
        }
    }
}

TEST_CASE("mixed_sign_disproof") {
    CHECK(dfl::mixed_sign_disproof(Rat(1), Rat(-1)) == 0);
    CHECK(dfl::mixed_sign_disproof(Rat(2), Rat(-3)) == 0);
    CHECK(dfl::mixed_sign_disproof(Rat(-1, 2), Rat(5)) == 0);
    CHECK_THROWS_AS(dfl::mixed_sign_disproof(Rat(1), Rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(dfl::mixed_sign_disproof(Rat(0), Rat(-2)), std::invalid_argument);

    const dfl::HalfLine a = dfl::upper_level_set(Rat(2), Rat(-3), 0);
    const dfl::HalfLine b = dfl::upper_level_set(Rat(-3), Rat(2), 0);
    CHECK_FALSE(dfl::halfline_equal(a, b));
}

TEST_CASE("find_witness produces the deterministic midpoint witness") {
    const Witness w23 = dfl::find_witness(Rat(2), Rat(3));
    CHECK(w23.x == Rat(5, 12));
    CHECK(w23.lhs == 2);
    CHECK(w23.rhs == 0);
    check_witness(Rat(2), Rat(3), w23);

    const Witness wm = dfl::find_witness(Rat(1), Rat(-1));
    CHECK(wm.x == Rat(1, 2));
    CHECK(wm.lhs == -1);
    CHECK(wm.rhs == 0);
    check_witness(Rat(1), Rat(-1), wm);

    const Witness wn = dfl::find_witness(Rat(-1, 2), Rat(-1, 3));
    CHECK(wn.x == Rat(-5, 2));
    CHECK(wn.lhs == 0);
    CHECK(wn.rhs == -1);
    check_witness(Rat(-1, 2), Rat(-1, 3), wn);

    CHECK_THROWS_AS(dfl::find_witness(Rat(1, 2), Rat(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(dfl::find_witness(Rat(0), Rat(0)), std::invalid_argument);
}

TEST_CASE("checked_witness refuses agreeing points") {
    CHECK_THROWS_AS(dfl::checked_witness(Rat(2), Rat(3), Rat(0)), std::logic_error);
    const Witness w = dfl::checked_witness(Rat(2), Rat(3), Rat(1, 2));
    CHECK(w.lhs == 2);
    CHECK(w.rhs == 3);
}

TEST_CASE("brute_force_commute") {
    const auto clear =
        dfl::brute_force_commute(Rat(1, 2), Rat(1, 3), Rat(-10), Rat(10), 60);
    CHECK(clear.no_counterexample);
    CHECK(!clear.witness.has_value());

    const auto refuted = dfl::brute_force_commute(Rat(2), Rat(3), Rat(-2), Rat(2), 6);
    CHECK_FALSE(refuted.no_counterexample);
    REQUIRE(refuted.witness.has_value());
    // first grid point in ascending sweep order where the orders disagree
    CHECK(refuted.witness->x == Rat(-5, 3));
    CHECK(refuted.witness->lhs == -10);
    CHECK(refuted.witness->rhs == -12);
    check_witness(Rat(2), Rat(3), *refuted.witness);

    const auto diag =
        dfl::brute_force_commute(Rat(-7, 3), Rat(-7, 3), Rat(-5), Rat(5), 21);
    CHECK(diag.no_counterexample);

    CHECK_THROWS_AS(dfl::brute_force_commute(Rat(1), Rat(2), Rat(0), Rat(1), 0),
                    std::invalid_argument);
}

TEST_CASE("empty sweep window finds nothing") {
    const auto r = dfl::brute_force_commute(Rat(2), Rat(3), Rat(1), Rat(0), 6);
    CHECK(r.no_counterexample);
}

TEST_CASE("affine oracle reduces to the pure case at zero offsets") {
    const auto pure = dfl::brute_force_commute(Rat(2), Rat(3), Rat(-2), Rat(2), 6);
    const auto affine = dfl::affine_commute_oracle(Rat(2), Rat(0), Rat(3), Rat(0),
                                                   Rat(-2), Rat(2), 6);
    CHECK(pure.no_counterexample == affine.no_counterexample);
    CHECK(pure.witness == affine.witness);
}

TEST_CASE("affine oracle finds offset counterexamples") {
    // unit slopes with distinct offsets already fail to commute
    const auto r = dfl::affine_commute_oracle(Rat(1), Rat(1, 2), Rat(1), Rat(1, 3),
                                              Rat(-2), Rat(2), 12);
    CHECK_FALSE(r.no_counterexample);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->x == Rat(-3, 2));
    CHECK(r.witness->lhs == -2);
    CHECK(r.witness->rhs == -1);

    const auto r2 = dfl::affine_commute_oracle(Rat(2), Rat(1, 2), Rat(3), Rat(0),
                                               Rat(-2), Rat(2), 12);
    CHECK_FALSE(r2.no_counterexample);
    CHECK(r2.witness->x == Rat(-7, 4));
}

TEST_CASE("commuting booleans are exchange symmetric") {
    const auto grid = dfl::sweep_grid(4, 4);
    for (const Rat& s : grid) {
        for (const Rat& t : grid) {
            CHECK(dfl::classify(s, t).commutes == dfl::classify(t, s).commutes);
        }
    }
}

TEST_CASE("negation preserves the continuous family and breaks the discrete one") {
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            if (m == n) {
                continue;
            }
            CHECK(dfl::classify(Rat(1, m), Rat(1, n)).commutes);
            CHECK_FALSE(dfl::classify(Rat(-1, m), Rat(-1, n)).commutes);
        }
    }
    // s = t stays commuting under negation
    CHECK(dfl::classify(Rat(-5, 4), Rat(-5, 4)).commutes);
}

TEST_CASE("reciprocals break the discrete family") {
    CHECK(dfl::classify(Rat(1, 2), Rat(1, 3)).commutes);
    CHECK_FALSE(dfl::classify(Rat(2), Rat(3)).commutes);
}

TEST_CASE("mixed signs never commute") {
    const auto grid = dfl::sweep_grid(4, 4);
    for (const Rat& s : grid) {
        for (const Rat& t : grid) {
            if (s.sign() * t.sign() < 0) {
                CHECK_FALSE(dfl::classify(s, t).commutes);
            }
        }
    }
}

TEST_CASE("classifier, criteria, and oracle agree on a window-safe grid") {
    // On the 4x4 grid every non-commuting pair has a counterexample inside
    // the standard window, so strict boolean agreement is checkable.
    const auto grid = dfl::sweep_grid(4, 4);
    for (const Rat& s : grid) {
        for (const Rat& t : grid) {
            const Verdict v = dfl::classify(s, t);
            if (s.sign() > 0 && t.sign() > 0) {
                CHECK(dfl::criterion_positive(s, t).first == v.commutes);
            }
            if (s.sign() < 0 && t.sign() < 0) {
                CHECK(dfl::criterion_negative(s, t).first == v.commutes);
            }
            const auto oracle = dfl::brute_force_commute(
                s, t, Rat(dfl::kSweepLo), Rat(dfl::kSweepHi),
                Int(dfl::kSweepDenFactor) * s.den() * t.den());
            CHECK(oracle.no_counterexample == v.commutes);
            if (!v.commutes) {
                check_witness(s, t, dfl::find_witness(s, t));
            }
        }
    }
}
