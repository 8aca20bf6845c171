#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace taylormeans {

using Complex = std::complex<double>;

template <class X, class S>
X scalar_cast(const S& v) {
    return static_cast<X>(v);
}
template <>
inline double scalar_cast<double, Rational>(const Rational& v) {
    return v.get_d();
}
template <>
inline Complex scalar_cast<Complex, Rational>(const Rational& v) {
    return Complex(v.get_d(), 0.0);
}

// Dense univariate polynomial, coefficients stored lowest power first.
// The zero polynomial is the empty coefficient vector; degree() refuses it
// outright so no silent "degree -1" arithmetic can happen downstream.
template <class S>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const S& v) { return Polynomial({v}); }

    // v * x^k
    static Polynomial monomial(const S& v, std::size_t k) {
        std::vector<S> c(k + 1, S(0));
        c[k] = v;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    std::size_t degree() const {
        if (is_zero()) throw ZeroPolynomialError("degree of the zero polynomial");
        return c_.size() - 1;
    }

    const std::vector<S>& coefficients() const { return c_; }

    // Coefficient of x^k; zero beyond the degree.
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }

    S leading() const {
        if (is_zero()) throw ZeroPolynomialError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    // Horner evaluation in any scalar the coefficients convert into
    // (rational at rational stays exact; rational at complex goes float).
    template <class X>
    X operator()(const X& x) const {
        X acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + scalar_cast<X>(c_[i]);
        return acc;
    }

    Polynomial derivative(unsigned order = 1) const {
        std::vector<S> c = c_;
        for (unsigned pass = 0; pass < order; ++pass) {
            if (c.size() <= 1) return Polynomial();
            std::vector<S> d(c.size() - 1);
            for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * S(static_cast<long>(i));
            c = std::move(d);
        }
        return Polynomial(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<S> c = c_;
        for (auto& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const S& s, const Polynomial& p) {
        std::vector<S> c = p.c_;
        for (auto& v : c) v = s * v;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& p, const S& s) { return s * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    template <class X>
    Polynomial<X> cast() const {
        std::vector<X> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = scalar_cast<X>(c_[i]);
        return Polynomial<X>(std::move(c));
    }

private:
    std::vector<S> c_;

    void trim() {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }
};

// p / (x - root)^multiplicity with exact coefficients; every stage must
// divide cleanly or NotDivisibleError is thrown.
inline Polynomial<Rational> divide_out_root_power(const Polynomial<Rational>& p,
                                                  const Rational& root,
                                                  unsigned multiplicity) {
    if (p.is_zero()) throw ZeroPolynomialError("deflating the zero polynomial");
    std::vector<Rational> c = p.coefficients();
    for (unsigned pass = 0; pass < multiplicity; ++pass) {
        if (c.size() < 2)
            throw NotDivisibleError("degree too small for requested root multiplicity");
        std::vector<Rational> q(c.size() - 1);
        Rational acc(0);
        for (std::size_t i = c.size(); i-- > 1;) {
            acc = c[i] + acc * root;
            q[i - 1] = acc;
        }
        const Rational remainder = c[0] + acc * root;
        if (remainder != 0)
            throw NotDivisibleError("nonzero remainder at deflation pass " +
                                    std::to_string(pass + 1));
        c = std::move(q);
    }
    return Polynomial<Rational>(std::move(c));
}

// x^k * p, exact shift.
template <class S>
Polynomial<S> shift_up(const Polynomial<S>& p, std::size_t k) {
    if (p.is_zero()) return p;
    std::vector<S> c(p.coefficients().size() + k, S(0));
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) c[i + k] = p.coefficients()[i];
    return Polynomial<S>(std::move(c));
}

// (x + shift)^k expanded, small k, exact.
inline Polynomial<Rational> binomial_power(const Rational& shift, unsigned k) {
    Polynomial<Rational> base({shift, Rational(1)});
    Polynomial<Rational> acc = Polynomial<Rational>::constant(Rational(1));
    for (unsigned i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

}  // namespace taylormeans
