#include "dfl/rat.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace dfl {

Int floor_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r < 0) {
        --q;  // divide_qr truncates toward zero
    }
    return q;
}

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) {
        throw std::domain_error("Rat: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat Rat::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("Rat: reciprocal of zero");
    }
    return Rat(den_, num_);
}

Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) {
        throw std::domain_error("Rat: division by zero");
    }
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    // Denominators are positive, so cross-multiplication preserves order.
    const Int lhs = num_ * o.den_;
    const Int rhs = o.num_ * den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::optional<Rat> Rat::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](Int& out) -> bool {
        if (i >= text.size() || text[i] < '0' || text[i] > '9') {
            return false;
        }
        out = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            out *= 10;
            out += text[i] - '0';
            ++i;
        }
        return true;
    };
    Int n;
    if (!read_digits(n)) {
        return std::nullopt;
    }
    Int d = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!read_digits(d) || d.is_zero()) {
            return std::nullopt;
        }
    }
    if (i != text.size()) {
        return std::nullopt;
    }
    if (negative) {
        n = -n;
    }
    return Rat(std::move(n), std::move(d));
}

std::string Rat::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

Int floor(const Rat& x) {
    return floor_div(x.num(), x.den());
}

Int ceil(const Rat& x) {
    // Independent of floor() so the ceil(x) == -floor(-x) identity stays a
    // genuine cross-check between two code paths.
    Int q, r;
    boost::multiprecision::divide_qr(x.num(), x.den(), q, r);
    if (r > 0) {
        ++q;
    }
    return q;
}

Rat frac(const Rat& x) {
    return x - Rat(floor(x));
}

Rat frac_up(const Rat& x) {
    return Rat(ceil(x)) - x;
}

Rat abs(const Rat& x) {
    return x.sign() < 0 ? -x : x;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) {
    return os << x.str();
}

}  // namespace dfl
