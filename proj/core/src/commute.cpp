#include "dfl/commute.hpp"

#include <stdexcept>

#include "dfl/dilated.hpp"

namespace dfl {

std::string_view family_case_name(FamilyCase c) {
    switch (c) {
        case FamilyCase::Equal:
            return "Equal";
        case FamilyCase::ZeroLeft:
            return "ZeroLeft";
        case FamilyCase::ZeroRight:
            return "ZeroRight";
        case FamilyCase::UnitFractions:
            return "UnitFractions";
        case FamilyCase::NonCommuting:
            return "NonCommuting";
    }
    return {};  // unreachable
}

Witness checked_witness(const Rat& s, const Rat& t, const Rat& x) {
    const Rat st[] = {s, t};
    const Rat ts[] = {t, s};
    Witness w{x, eval_chain(st, x), eval_chain(ts, x)};
    if (w.lhs == w.rhs) {
        throw std::logic_error("checked_witness: compositions agree at x = " + x.str());
    }
    return w;
}

namespace {

// Period of the commutation criteria in n.
//
// Positive case: the criterion b*ceil(n*a) == a*ceil(n*b) rearranges, using
// ceil(y) = y + u(y) with u(y) = ceil(y) - y in [0, 1), to
//
//   D(n) := b*ceil(n*a) - a*ceil(n*b) = b*u(n*a) - a*u(n*b),
//
// since the bilinear term n*a*b cancels. u(n*a) depends only on n*a mod 1,
// and for rational a, (n + den(a))*a = n*a + num(a) shifts by an integer, so
// n -> u(n*a) has period den(a). Hence D has period L = lcm(den(a), den(b))
// and D(n) == 0 for all integers n iff it holds for one full period
// 0 <= n < L. The negative case is identical with u replaced by the lower
// fractional part, which has the same periodicity.
Int criterion_period(const Rat& a, const Rat& b) {
    return boost::multiprecision::lcm(a.den(), b.den());
}

}  // namespace

std::pair<bool, std::optional<Int>> criterion_positive(const Rat& s, const Rat& t) {
    if (s.sign() <= 0 || t.sign() <= 0) {
        throw std::invalid_argument("criterion_positive: requires s > 0 and t > 0");
    }
    const Rat a = s.reciprocal();
    const Rat b = t.reciprocal();
    const Int period = criterion_period(a, b);
    for (Int n = 0; n < period; ++n) {
        const Rat level{n};
        if (b * Rat(ceil(level * a)) != a * Rat(ceil(level * b))) {
            return {false, n};
        }
    }
    return {true, std::nullopt};
}

std::pair<bool, std::optional<Int>> criterion_negative(const Rat& s, const Rat& t) {
    if (s.sign() >= 0 || t.sign() >= 0) {
        throw std::invalid_argument("criterion_negative: requires s < 0 and t < 0");
    }
    const Rat a = s.reciprocal();
    const Rat b = t.reciprocal();
    const Int period = criterion_period(a, b);
    for (Int n = 0; n < period; ++n) {
        const Rat level{n};
        if (b * Rat(floor(level * a)) + b != a * Rat(floor(level * b)) + a) {
            return {false, n};
        }
    }
    return {true, std::nullopt};
}

Int mixed_sign_disproof(const Rat& s, const Rat& t) {
    if (s.sign() * t.sign() >= 0) {
        throw std::invalid_argument("mixed_sign_disproof: requires s*t < 0");
    }
    const Int level = 0;
    if (halfline_equal(upper_level_set(s, t, level), upper_level_set(t, s, level))) {
        // One set is a closed downward ray, the other open; equality is
        // impossible unless the level-set formulas are wrong.
        throw std::logic_error("mixed_sign_disproof: level sets compare equal");
    }
    return level;
}

Verdict classify(const Rat& s, const Rat& t) {
    if (s == t) {
        return {true, FamilyCase::Equal, {}, {}, {}};
    }
    if (s.is_zero()) {
        return {true, FamilyCase::ZeroLeft, {}, {}, {}};
    }
    if (t.is_zero()) {
        return {true, FamilyCase::ZeroRight, {}, {}, {}};
    }
    if (s.num() == 1 && t.num() == 1) {
        return {true, FamilyCase::UnitFractions, s.den(), t.den(), {}};
    }

    Int level;
    if (s.sign() * t.sign() < 0) {
        level = mixed_sign_disproof(s, t);
    } else {
        auto [holds, failing] =
            s.sign() > 0 ? criterion_positive(s, t) : criterion_negative(s, t);
        if (holds) {
            // Outside every commuting family, yet the criterion holds over a
            // full period: a contradiction that can only mean a formula bug.
            throw std::logic_error("classify: criterion holds for out-of-family pair");
        }
        level = *failing;
    }
    return {false, FamilyCase::NonCommuting, {}, {}, level};
}

Witness find_witness(const Rat& s, const Rat& t) {
    const Verdict verdict = classify(s, t);
    if (verdict.commutes) {
        throw std::invalid_argument("find_witness: pair commutes");
    }
    const Int& level = *verdict.first_failing_level;
    const HalfLine lhs_set = upper_level_set(s, t, level);
    const HalfLine rhs_set = upper_level_set(t, s, level);
    const std::optional<Rat> x = separating_point(lhs_set, rhs_set);
    if (!x) {
        throw std::logic_error("find_witness: failing level sets compare equal");
    }
    // checked_witness re-evaluates both compositions directly; the formulas
    // above never get the final word.
    return checked_witness(s, t, *x);
}

OracleResult brute_force_commute(const Rat& s, const Rat& t, const Rat& lo,
                                 const Rat& hi, const Int& denominator_bound) {
    if (denominator_bound < 1) {
        throw std::invalid_argument("brute_force_commute: denominator bound must be >= 1");
    }
    const Rat d{denominator_bound};
    const Int k_lo = ceil(lo * d);
    const Int k_hi = floor(hi * d);

    // Integer form of the two compositions at x = k/D:
    //   floor(s*floor(t*k/D)) = floor_div(ps*floor_div(pt*k, qt*D), qs).
    const Int& ps = s.num();
    const Int& qs = s.den();
    const Int& pt = t.num();
    const Int& qt = t.den();
    const Int qs_d = qs * denominator_bound;
    const Int qt_d = qt * denominator_bound;
    for (Int k = k_lo; k <= k_hi; ++k) {
        const Int lhs = floor_div(ps * floor_div(pt * k, qt_d), qs);
        const Int rhs = floor_div(pt * floor_div(ps * k, qs_d), qt);
        if (lhs != rhs) {
            // Re-derive through the rational path as verification.
            return {false, checked_witness(s, t, Rat(k, denominator_bound))};
        }
    }
    return {true, std::nullopt};
}

OracleResult affine_commute_oracle(const Rat& a1, const Rat& g1, const Rat& a2,
                                   const Rat& g2, const Rat& lo, const Rat& hi,
                                   const Int& denominator_bound) {
    if (denominator_bound < 1) {
        throw std::invalid_argument("affine_commute_oracle: denominator bound must be >= 1");
    }
    const Rat d{denominator_bound};
    const Int k_lo = ceil(lo * d);
    const Int k_hi = floor(hi * d);
    for (Int k = k_lo; k <= k_hi; ++k) {
        const Rat x(k, denominator_bound);
        const Int lhs = eval_affine(a1, g1, Rat(eval_affine(a2, g2, x)));
        const Int rhs = eval_affine(a2, g2, Rat(eval_affine(a1, g1, x)));
        if (lhs != rhs) {
            return {false, Witness{x, lhs, rhs}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace dfl
