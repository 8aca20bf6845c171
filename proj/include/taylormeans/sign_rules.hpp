#pragma once

#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace taylormeans {

// Signs of a value sequence with strict sign alternations counted; zero
// entries are recorded but never contribute to the count.
struct SignSequence {
    std::vector<int> signs;  // entries in {-1, 0, +1}

    int changes() const {
        int count = 0;
        int last = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }
};

inline SignSequence sign_sequence(const std::vector<Rational>& values) {
    SignSequence seq;
    seq.signs.reserve(values.size());
    for (const auto& v : values) seq.signs.push_back(sign(v));
    return seq;
}

// Sign variations of the coefficient sequence: an upper bound on positive
// real roots, sharp mod 2.
inline int descartes_sign_changes(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw ZeroPolynomialError("sign changes of the zero polynomial");
    return sign_sequence(p.coefficients()).changes();
}

// Sign variations of (p, p', ..., p^(deg)) at one point.
inline int derivative_sequence_variations(const Polynomial<Rational>& p, const Rational& at) {
    std::vector<Rational> values;
    Polynomial<Rational> d = p;
    while (!d.is_zero()) {
        values.push_back(d(at));
        d = d.derivative();
    }
    return sign_sequence(values).changes();
}

// Upper bound for the number of real roots in (a, b], sharp mod 2 (and exact
// for polynomials whose roots are all real).  Endpoints must not be roots.
inline int fourier_budan_bound(const Polynomial<Rational>& p, const Rational& a,
                               const Rational& b) {
    if (p.is_zero()) throw ZeroPolynomialError("root bound for the zero polynomial");
    if (!(a < b)) throw DomainError("fourier_budan_bound needs a < b");
    if (p(a) == 0) throw EndpointRootError("left endpoint is a root");
    if (p(b) == 0) throw EndpointRootError("right endpoint is a root");
    return derivative_sequence_variations(p, a) - derivative_sequence_variations(p, b);
}

// Discriminant of the monic cubic x^3 + a1 x^2 + a2 x + a3: positive for
// three distinct real roots, negative for one real root and a conjugate pair.
template <class S>
S cubic_discriminant(const S& a1, const S& a2, const S& a3) {
    return S(18) * a1 * a2 * a3 + a1 * a1 * a2 * a2 - S(27) * a3 * a3 - S(4) * a2 * a2 * a2 -
           S(4) * a1 * a1 * a1 * a3;
}

}  // namespace taylormeans
