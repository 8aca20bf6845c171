#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace taylormeans {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "7", "-3/4" and plain decimals like "1.5" (exact: 15/10 -> 3/2).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    const auto dot = text.find('.');
    try {
        if (dot == std::string::npos) {
            Rational q(text, 10);  // explicit base: GMP's default treats 0-prefixes as octal
            q.canonicalize();
            return q;
        }
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument(text);
        Rational q(Integer(digits, 10), Integer(1));
        for (std::size_t i = dot + 1; i < text.size(); ++i) q /= 10;
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw DomainError("bad rational literal: " + text);
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(double x) { return (x > 0.0) - (x < 0.0); }

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// x^e with integer e of either sign; x must be nonzero when e < 0.
inline Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0 && e < 0) throw DomainError("0 raised to a negative power");
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), mag);
    Rational r = (e > 0) ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

// p (p-1) ... (p-k+1); falling_factorial(p, 0) == 1.
inline Rational falling_factorial(const Rational& p, unsigned k) {
    Rational acc(1);
    for (unsigned i = 0; i < k; ++i) acc *= (p - static_cast<long>(i));
    return acc;
}

inline double falling_factorial(double p, unsigned k) {
    double acc = 1.0;
    for (unsigned i = 0; i < k; ++i) acc *= (p - static_cast<double>(i));
    return acc;
}

}  // namespace taylormeans
