#pragma once

#include <span>
#include <vector>

#include "dfl/rat.hpp"

namespace dfl {

/// A dilated floor function x -> floor(alpha*x + gamma). The pure dilation
/// is the gamma = 0 case; alpha = 0 (constant floor(gamma)) is allowed.
struct DilatedFloor {
    Rat alpha;
    Rat gamma{};

    Int operator()(const Rat& x) const;

    bool operator==(const DilatedFloor&) const = default;
};

/// An ordered list of dilation factors, outermost first. Must be non-empty
/// wherever it is evaluated.
using CompositionChain = std::vector<Rat>;

/// floor(alpha * x).
Int eval_dilated(const Rat& alpha, const Rat& x);

/// floor(alpha * x + gamma).
Int eval_affine(const Rat& alpha, const Rat& gamma, const Rat& x);

/// Applies the dilated floor functions right to left: the last factor acts
/// on x first, the first factor produces the result. Throws
/// std::invalid_argument on an empty chain.
Int eval_chain(std::span<const Rat> chain, const Rat& x);

/// ceil(alpha * x), the ceiling counterpart of eval_dilated.
Int eval_ceiling_dual(const Rat& alpha, const Rat& x);

/// T_m(x) = floor(x / m) for integer m >= 1. These satisfy
/// T_m(T_n(x)) = T_n(T_m(x)) = T_mn(x), mirroring composition of the linear
/// maps x -> x/m. Throws std::invalid_argument if m < 1.
Int tm_eval(const Int& m, const Rat& x);

/// Deviation of the composed step function from the line it approximates:
/// floor(alpha*floor(beta*x)) - alpha*beta*x, exact.
Rat h_diff(const Rat& alpha, const Rat& beta, const Rat& x);

/// The same deviation written purely in fractional parts:
/// -alpha*{beta*x} - {alpha*(beta*x - {beta*x})}.
/// Deliberately computed on a separate route from h_diff so the two can
/// cross-validate each other.
Rat h_closed_form(const Rat& alpha, const Rat& beta, const Rat& x);

}  // namespace dfl
