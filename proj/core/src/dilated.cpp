#include "dfl/dilated.hpp"

#include <stdexcept>

namespace dfl {

Int DilatedFloor::operator()(const Rat& x) const {
    return eval_affine(alpha, gamma, x);
}

Int eval_dilated(const Rat& alpha, const Rat& x) {
    return floor(alpha * x);
}

Int eval_affine(const Rat& alpha, const Rat& gamma, const Rat& x) {
    return floor(alpha * x + gamma);
}

Int eval_chain(std::span<const Rat> chain, const Rat& x) {
    if (chain.empty()) {
        throw std::invalid_argument("eval_chain: empty chain");
    }
    Rat value = x;
    Int result;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        result = eval_dilated(*it, value);
        value = Rat(result);
    }
    return result;
}

Int eval_ceiling_dual(const Rat& alpha, const Rat& x) {
    return ceil(alpha * x);
}

Int tm_eval(const Int& m, const Rat& x) {
    if (m < 1) {
        throw std::invalid_argument("tm_eval: m must be a positive integer");
    }
    return floor(x / Rat(m));
}

Rat h_diff(const Rat& alpha, const Rat& beta, const Rat& x) {
    const Rat chain[] = {alpha, beta};
    return Rat(eval_chain(chain, x)) - alpha * beta * x;
}

Rat h_closed_form(const Rat& alpha, const Rat& beta, const Rat& x) {
    const Rat inner = frac(beta * x);
    return -(alpha * inner) - frac(alpha * (beta * x - inner));
}

}  // namespace dfl
