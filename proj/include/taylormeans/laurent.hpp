#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace taylormeans {

// Finite sum of c_e b^e with integer exponents of either sign, stored as a
// lowest exponent plus an ordinary polynomial mantissa.  Exact coefficients
// only: this type exists so the sign ledgers stay beyond numerical doubt.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long low, Polynomial<Rational> mantissa)
        : low_(low), mantissa_(std::move(mantissa)) {
        normalize();
    }

    static LaurentPoly term(const Rational& c, long exponent) {
        if (sign(c) == 0) return {};
        return LaurentPoly(exponent, Polynomial<Rational>({c}));
    }

    bool is_zero() const { return mantissa_.is_zero(); }
    long low() const {
        if (is_zero()) throw ZeroPolynomialError("zero Laurent polynomial has no exponents");
        return low_;
    }
    long high() const { return low() + mantissa_.degree(); }
    const Polynomial<Rational>& mantissa() const { return mantissa_; }

    Rational coeff(long exponent) const {
        if (is_zero() || exponent < low_) return Rational(0);
        return mantissa_.coeff(static_cast<int>(exponent - low_));
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        const long lo = std::min(low_, o.low_);
        const long hi = std::max(high(), o.high());
        std::vector<Rational> c(static_cast<size_t>(hi - lo + 1), Rational(0));
        for (long e = low_; e <= high(); ++e) c[e - lo] += coeff(e);
        for (long e = o.low_; e <= o.high(); ++e) c[e - lo] += o.coeff(e);
        *this = LaurentPoly(lo, Polynomial<Rational>(std::move(c)));
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
    LaurentPoly operator-() const {
        if (is_zero()) return {};
        return LaurentPoly(low_, mantissa_ * Rational(-1));
    }
    friend LaurentPoly operator-(const LaurentPoly& l, const LaurentPoly& r) { return l + (-r); }
    friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        return LaurentPoly(l.low_ + r.low_, l.mantissa_ * r.mantissa_);
    }
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
        if (sign(s) == 0 || p.is_zero()) return {};
        return LaurentPoly(p.low_, p.mantissa_ * s);
    }
    friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) {
        if (l.is_zero() || r.is_zero()) return l.is_zero() && r.is_zero();
        return l.low_ == r.low_ && l.mantissa_ == r.mantissa_;
    }
    friend bool operator!=(const LaurentPoly& l, const LaurentPoly& r) { return !(l == r); }

    Rational operator()(const Rational& x) const {
        if (is_zero()) return Rational(0);
        if (sign(x) == 0 && low_ < 0)
            throw DomainError("negative exponents cannot be evaluated at zero");
        return mantissa_(x) * rational_pow(x, low_);
    }

    // b^e * f(1/b): the reflection that carries the p-branch ledger onto the
    // negative-exponent branch.  Reversing the mantissa flips 1/b back into b.
    LaurentPoly reflected(long e) const {
        if (is_zero()) return {};
        std::vector<Rational> rev(mantissa_.coefficients().rbegin(),
                                  mantissa_.coefficients().rend());
        return LaurentPoly(e - high(), Polynomial<Rational>(std::move(rev)));
    }

    LaurentPoly derivative() const {
        if (is_zero()) return {};
        LaurentPoly out;
        for (long e = low_; e <= high(); ++e)
            if (e != 0) out += term(Rational(e) * coeff(e), e - 1);
        return out;
    }

    // Only valid when no negative exponents remain.
    Polynomial<Rational> as_polynomial() const {
        if (is_zero()) return Polynomial<Rational>{};
        if (low_ < 0) throw DomainError("Laurent polynomial still has negative exponents");
        std::vector<Rational> c(static_cast<size_t>(high() + 1), Rational(0));
        for (long e = low_; e <= high(); ++e) c[e] = coeff(e);
        return Polynomial<Rational>(std::move(c));
    }

private:
    void normalize() {
        if (mantissa_.is_zero()) {
            low_ = 0;
            return;
        }
        size_t shift = 0;
        const auto& c = mantissa_.coefficients();
        while (shift < c.size() && sign(c[shift]) == 0) ++shift;
        if (shift > 0) {
            std::vector<Rational> trimmed(c.begin() + shift, c.end());
            mantissa_ = Polynomial<Rational>(std::move(trimmed));
            low_ += static_cast<long>(shift);
        }
    }

    long low_ = 0;
    Polynomial<Rational> mantissa_;
};

}  // namespace taylormeans
