#pragma once

#include <array>
#include <string>
#include <utility>

#include "config.hpp"
#include "errors.hpp"
#include "function_spec.hpp"
#include "laurent.hpp"
#include "means.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "sign_rules.hpp"

// Exact-arithmetic laboratory for the r = 3 power-function pair cubic: the
// one-variable families V and W, their (b-1)^5 factor ledgers, the reflection
// between the positive and negative exponent branches, and the bracketing
// theorem their signs certify.

namespace taylormeans {

namespace detail {

inline void require_lab_exponent(long p) {
    if (0 <= p && p <= 3)
        throw ExcludedExponentError("integer exponents 0..3 have a vanishing fourth derivative");
}

}  // namespace detail

// The four moments of (z^p)'''' on (1, b), symbolic in b.
inline std::array<LaurentPoly, 4> power_abcd(long p) {
    detail::require_lab_exponent(p);
    const Rational P(p);
    const auto ramp = [&](const Rational& c, long e) {
        // c (b^e - 1)
        return LaurentPoly::term(c, e) - LaurentPoly::term(c, 0);
    };
    return {ramp(P * (P - 1) * (P - 2), p - 3),
            ramp(P * (P - 1) * (P - 3), p - 2),
            ramp(P * (P - 2) * (P - 3), p - 1),
            ramp((P - 1) * (P - 2) * (P - 3), p)};
}

inline std::array<Rational, 4> power_abcd_at(long p, const Rational& b) {
    const auto sym = power_abcd(p);
    return {sym[0](b), sym[1](b), sym[2](b), sym[3](b)};
}

struct VWPair {
    LaurentPoly V;  // g(1) / (p(p-1)) as a function of b
    LaurentPoly W;  // g(b) / (p(p-1))
};

namespace detail {

// The nine-term closed forms, written exactly as derived.
inline LaurentPoly v_display(long p) {
    const Rational P(p);
    LaurentPoly v;
    v += LaurentPoly::term(12 * (P + 1), 0);
    v += LaurentPoly::term(-2 * (P - 2) * (P - 3) * (4 * P * P - 12 * P - 1), 2 * p - 3);
    v += LaurentPoly::term(6 * P * (P - 3) * (4 * P * P - 16 * P + 13), 2 * p - 4);
    v += LaurentPoly::term(-24 * P * (P - 1) * (P - 2) * (P - 3), 2 * p - 5);
    v += LaurentPoly::term(8 * P * (P - 1) * (P - 2) * (P - 2), 2 * p - 6);
    v += LaurentPoly::term(-(P - 1) * (P - 2) * (P - 2) * (P - 3), p);
    v += LaurentPoly::term(3 * P * (P - 2) * (P - 3) * (P - 5), p - 1);
    v += LaurentPoly::term(-3 * P * (P - 3) * (P * P - 9 * P + 2), p - 2);
    v += LaurentPoly::term((P - 2) * (P + 1) * (P * P - 13 * P + 6), p - 3);
    return v;
}

inline LaurentPoly w_display(long p) {
    const Rational P(p);
    LaurentPoly w;
    w += LaurentPoly::term(12 * (P + 1), 2 * p - 3);
    w += LaurentPoly::term((P - 2) * (P + 1) * (P * P - 13 * P + 6), p);
    w += LaurentPoly::term(-3 * P * (P - 3) * (P * P - 9 * P + 2), p - 1);
    w += LaurentPoly::term(3 * P * (P - 2) * (P - 3) * (P - 5), p - 2);
    w += LaurentPoly::term(-(P - 1) * (P - 2) * (P - 2) * (P - 3), p - 3);
    w += LaurentPoly::term(8 * P * (P - 1) * (P - 2) * (P - 2), 3);
    w += LaurentPoly::term(-24 * P * (P - 1) * (P - 2) * (P - 3), 2);
    w += LaurentPoly::term(6 * P * (P - 3) * (4 * P * P - 16 * P + 13), 1);
    w += LaurentPoly::term(-2 * (P - 2) * (P - 3) * (4 * P * P - 12 * P - 1), 0);
    return w;
}

// The independent route: expand the pair cubic's endpoint values from the
// moments themselves and divide by p(p-1).
inline VWPair vw_from_moments(long p) {
    const auto m = power_abcd(p);
    const LaurentPoly &A = m[0], &B = m[1], &C = m[2], &D = m[3];
    const LaurentPoly g3 = Rational(8) * (A * A);
    const LaurentPoly g2 = Rational(-24) * (A * B);
    const LaurentPoly g1 = Rational(6) * (A * C) + Rational(18) * (B * B);
    const LaurentPoly g0 = A * D - Rational(9) * (B * C);
    const LaurentPoly bterm = LaurentPoly::term(Rational(1), 1);
    const Rational denom = Rational(p) * Rational(p - 1);
    VWPair out;
    out.V = (Rational(1) / denom) * (g3 + g2 + g1 + g0);
    out.W = (Rational(1) / denom) *
            (g3 * (bterm * bterm * bterm) + g2 * (bterm * bterm) + g1 * bterm + g0);
    return out;
}

}  // namespace detail

// Build V and W two ways and insist they agree term for term.
inline VWPair vw_build(long p) {
    detail::require_lab_exponent(p);
    VWPair from_moments = detail::vw_from_moments(p);
    const LaurentPoly v_disp = detail::v_display(p);
    const LaurentPoly w_disp = detail::w_display(p);
    if (from_moments.V != v_disp)
        throw MismatchError("V closed form disagrees with the moment route at p = " +
                            std::to_string(p));
    if (from_moments.W != w_disp)
        throw MismatchError("W closed form disagrees with the moment route at p = " +
                            std::to_string(p));
    return from_moments;
}

// W(b) = b^(2p-3) V(1/b), exactly.
inline bool reflection_check(long p) {
    const VWPair vw = vw_build(p);
    if (vw.W != vw.V.reflected(2 * p - 3))
        throw MismatchError("reflection identity fails at p = " + std::to_string(p));
    return true;
}

// V / (b-1)^5 for integer p = n >= 4; every coefficient must be strictly
// negative, which is what pins g(1) < 0 on (1, oo).
inline Polynomial<Rational> q_factor(long n) {
    if (n < 4) throw DomainError("q_factor needs n >= 4");
    const Polynomial<Rational> v = vw_build(n).V.as_polynomial();
    Polynomial<Rational> q = divide_out_root_power(v, Rational(1), 5);
    const auto& c = q.coefficients();
    for (size_t i = 0; i < c.size(); ++i)
        if (sign(c[i]) >= 0)
            throw SignViolationError("q_factor coefficient " + std::to_string(i) +
                                     " is not negative at n = " + std::to_string(n));
    return q;
}

// K(b) = V(1/b) at p = -n, built from its own closed form and from the
// reflection of V, then factored by (b-1)^5; nonzero coefficients must all be
// positive, pinning g(1) < 0 on the reciprocal branch.
inline Polynomial<Rational> s_factor(long n) {
    if (n < 1) throw DomainError("s_factor needs n >= 1");
    const Rational N(n);
    LaurentPoly k_disp;
    k_disp += LaurentPoly::term(-12 * (N - 1), 0);
    k_disp += LaurentPoly::term(8 * N * (N + 1) * (N + 2) * (N + 2), 2 * n + 6);
    k_disp += LaurentPoly::term(-24 * N * (N + 1) * (N + 2) * (N + 3), 2 * n + 5);
    k_disp += LaurentPoly::term(6 * N * (N + 3) * (4 * N * N + 16 * N + 13), 2 * n + 4);
    k_disp += LaurentPoly::term(-2 * (N + 2) * (N + 3) * (4 * N * N + 12 * N - 1), 2 * n + 3);
    k_disp += LaurentPoly::term((N + 2) * (N - 1) * (N * N + 13 * N + 6), n + 3);
    k_disp += LaurentPoly::term(-3 * (N + 3) * N * (N * N + 9 * N + 2), n + 2);
    k_disp += LaurentPoly::term(3 * N * (N + 2) * (N + 3) * (N + 5), n + 1);
    k_disp += LaurentPoly::term(-(N + 1) * (N + 2) * (N + 2) * (N + 3), n);

    const LaurentPoly k_reflect = vw_build(-n).V.reflected(0);
    if (k_disp != k_reflect)
        throw MismatchError("reciprocal-branch closed form disagrees with the reflection at n = " +
                            std::to_string(n));

    Polynomial<Rational> s = divide_out_root_power(k_disp.as_polynomial(), Rational(1), 5);
    const auto& c = s.coefficients();
    for (size_t i = 0; i < c.size(); ++i)
        if (sign(c[i]) < 0)
            throw SignViolationError("s_factor coefficient " + std::to_string(i) +
                                     " is negative at n = " + std::to_string(n));
    return s;
}

// i! * coeff_i checks of V against its tabulated derivatives at 0 (n >= 9).
inline bool derivative_table_v(long n) {
    if (n < 9) throw DomainError("the V derivative table needs n >= 9");
    const Rational N(n);
    const Polynomial<Rational> v = vw_build(n).V.as_polynomial();
    // explicit return type: GMP expression templates must not outlive their
    // operands
    const auto deriv_at_zero = [&](long i) -> Rational {
        return Rational(factorial(static_cast<unsigned long>(i))) *
               v.coeff(static_cast<int>(i));
    };
    const auto expect = [&](long i, const Rational& want) {
        if (deriv_at_zero(i) != want)
            throw MismatchError("V derivative table fails at order " + std::to_string(i) +
                                ", n = " + std::to_string(n));
    };
    expect(0, 12 * N + 12);
    for (long i = 1; i <= n - 4; ++i) expect(i, Rational(0));
    const Rational f2 = Rational(factorial(static_cast<unsigned long>(n - 2)));
    const Rational fn = Rational(factorial(static_cast<unsigned long>(n)));
    expect(n - 3, f2 * (N + 1) * (N * N - 13 * N + 6));
    expect(n - 2, -3 * f2 * (N - 3) * N * (N * N - 9 * N + 2));
    expect(n - 1, 3 * fn * (N - 2) * (N - 3) * (N - 5));
    expect(n, -fn * (N - 1) * (N - 2) * (N - 2) * (N - 3));
    for (long i = n + 1; i <= 2 * n - 7; ++i) expect(i, Rational(0));
    return true;
}

// Same ledger for the reciprocal branch K = V(1/b) at p = -n (n >= 2).
inline bool derivative_table_k(long n) {
    if (n < 2) throw DomainError("the K derivative table needs n >= 2");
    const Rational N(n);
    const Polynomial<Rational> k = vw_build(-n).V.reflected(0).as_polynomial();
    const auto deriv_at_zero = [&](long i) -> Rational {
        return Rational(factorial(static_cast<unsigned long>(i))) *
               k.coeff(static_cast<int>(i));
    };
    const auto expect = [&](long i, const Rational& want) {
        if (deriv_at_zero(i) != want)
            throw MismatchError("K derivative table fails at order " + std::to_string(i) +
                                ", n = " + std::to_string(n));
    };
    const Rational f3 = Rational(factorial(static_cast<unsigned long>(n + 3)));
    expect(0, -12 * (N - 1));
    for (long i = 1; i <= n - 1; ++i) expect(i, Rational(0));
    expect(n, -f3 * (N + 2));
    expect(n + 1, 3 * f3 * N * (N + 5));
    expect(n + 2, -3 * f3 * N * (N * N + 9 * N + 2));
    expect(n + 3, f3 * (N + 2) * (N - 1) * (N * N + 13 * N + 6));
    for (long i = n + 4; i <= 2 * n + 2; ++i) expect(i, Rational(0));
    return true;
}

namespace detail {

// Weight attached to (b-1)^(k+4) throughout the factor ledger.
inline Rational cubic_weight(long k) {
    const Rational K(k);
    return 8 * K * K * K + 60 * K * K + 130 * K + 75;
}

}  // namespace detail

// Alternating binomial collapse used to evaluate the ledger at b = 0:
// sum_{k=j}^{n-4} (8k^3+60k^2+130k+75) C(n,k+4) (-1)^(k-j) C(k,j)
//   = -(n+j+1)(n^2 - (10j+13)n + j^2 + 5j + 6) / 2.
inline std::pair<Rational, Rational> lemma5_sum(long n, long j) {
    if (n < 4 || j < 0 || j > n - 4) throw DomainError("lemma5_sum needs 0 <= j <= n - 4");
    Rational lhs(0);
    for (long k = j; k <= n - 4; ++k) {
        Rational term = detail::cubic_weight(k) *
                        Rational(binomial(static_cast<unsigned long>(n),
                                          static_cast<unsigned long>(k + 4))) *
                        Rational(binomial(static_cast<unsigned long>(k),
                                          static_cast<unsigned long>(j)));
        if ((k - j) % 2 != 0) term = -term;
        lhs += term;
    }
    const Rational N(n), J(j);
    const Rational rhs =
        Rational(-1, 2) * (N + J + 1) * (N * N - (10 * J + 13) * N + J * J + 5 * J + 6);
    return {lhs, rhs};
}

struct Lemma6Result {
    Rational value_at_minus1;  // N(-1), computed termwise
    Rational closed_form;      // -(n+1)(n^2-13n+6)/2
    int root_bound = 0;        // Fourier-Budan bound on roots in (-1, 0)
};

// N(x) = sum_k (8k^3+60k^2+130k+75) C(n,k+4) x^k; its sign pattern on (-1,0)
// controls where the factored derivative can vanish.
inline Lemma6Result lemma6_root_count(long n) {
    if (n < 4) throw DomainError("lemma6_root_count needs n >= 4");
    std::vector<Rational> c;
    for (long k = 0; k <= n - 4; ++k)
        c.push_back(detail::cubic_weight(k) *
                    Rational(binomial(static_cast<unsigned long>(n),
                                      static_cast<unsigned long>(k + 4))));
    const Polynomial<Rational> big(std::move(c));
    Lemma6Result out;
    out.value_at_minus1 = big(Rational(-1));
    const Rational N(n);
    out.closed_form = Rational(-1, 2) * (N + 1) * (N * N - 13 * N + 6);
    if (out.value_at_minus1 != out.closed_form)
        throw MismatchError("lemma6 endpoint value disagrees with its closed form at n = " +
                            std::to_string(n));
    out.root_bound = fourier_budan_bound(big, Rational(-1), Rational(0));
    return out;
}

// L(b) = -2 sum_k (8k^3+60k^2+130k+75) C(n,k+4) (b-1)^(k+4): the factored
// core of V'.
inline Polynomial<Rational> l_poly(long n) {
    if (n < 4) throw DomainError("l_poly needs n >= 4");
    Polynomial<Rational> acc;
    for (long k = 0; k <= n - 4; ++k) {
        const Rational coeff = Rational(-2) * detail::cubic_weight(k) *
                               Rational(binomial(static_cast<unsigned long>(n),
                                                 static_cast<unsigned long>(k + 4)));
        acc = acc + binomial_power(Rational(-1), static_cast<int>(k + 4)) * coeff;
    }
    return acc;
}

// V'(b) = (n-2)(n-3) b^(n-4) L(b), plus spot checks of L's derivatives at 1:
// zero through order three, then -2(8m^3-36m^2+34m+3) n!/(n-m)!.
inline bool l_poly_check(long n) {
    const Polynomial<Rational> l = l_poly(n);
    const Polynomial<Rational> v = vw_build(n).V.as_polynomial();
    const Polynomial<Rational> lhs = v.derivative();
    const Rational N(n);
    const Polynomial<Rational> rhs =
        shift_up(l, static_cast<int>(n - 4)) * ((N - 2) * (N - 3));
    if (lhs != rhs)
        throw MismatchError("V' does not factor through L at n = " + std::to_string(n));

    Polynomial<Rational> d = l;
    Rational falling(1);
    for (long m = 0; m <= std::min<long>(n, 8); ++m) {
        const Rational got = d(Rational(1));
        Rational want(0);
        if (m >= 4) {
            const Rational M(m);
            want = Rational(-2) * (8 * M * M * M - 36 * M * M + 34 * M + 3) * falling;
        }
        if (got != want)
            throw MismatchError("L derivative at 1 fails at order " + std::to_string(m) +
                                ", n = " + std::to_string(n));
        d = d.derivative();
        falling *= (N - m);
    }
    return true;
}

// Termwise antiderivative of the factored V': a double sum over (b-1) powers
// that must reproduce V exactly, with top degree 2n - 3.
inline bool v1_double_sum_check(long n) {
    if (n < 4) throw DomainError("v1_double_sum_check needs n >= 4");
    const Rational N(n);
    Polynomial<Rational> acc;
    for (long k = 0; k <= n - 4; ++k) {
        const Rational ck = detail::cubic_weight(k) *
                            Rational(binomial(static_cast<unsigned long>(n),
                                              static_cast<unsigned long>(k + 4)));
        for (long j = 0; j <= n - 4; ++j) {
            const Rational cj = Rational(binomial(static_cast<unsigned long>(n - 4),
                                                  static_cast<unsigned long>(j)));
            const Rational coeff =
                Rational(-2) * (N - 2) * (N - 3) * ck * cj / Rational(j + k + 5);
            acc = acc + binomial_power(Rational(-1), static_cast<int>(j + k + 5)) * coeff;
        }
    }
    const Polynomial<Rational> v = vw_build(n).V.as_polynomial();
    if (acc != v)
        throw MismatchError("double-sum antiderivative disagrees with V at n = " +
                            std::to_string(n));
    if (acc.degree() != static_cast<size_t>(2 * n - 3))
        throw MismatchError("double-sum degree is not 2n - 3 at n = " + std::to_string(n));
    return true;
}

struct Theorem1Result {
    Rational g_at_1;   // exact, must be negative
    Rational g_at_b;   // exact, must be positive
    double x1 = 0.0;   // bracketed root of the pair cubic
    double pair_real = 0.0;  // real part recovered from the full root solve
    bool inside = false;     // 1 < x1 < b
};

// Endpoint signs of the pair cubic in exact arithmetic, the bracketed root,
// and the cross-check against the direct intersection solve.
inline Theorem1Result theorem1_verify(long p, const Rational& b, const Tolerances& tol = {}) {
    detail::require_lab_exponent(p);
    if (!(b > 1)) throw DomainError("theorem1_verify needs b > 1");
    const auto m = power_abcd_at(p, b);
    const Rational &A = m[0], &B = m[1], &C = m[2], &D = m[3];
    const Polynomial<Rational> g({A * D - 9 * B * C, 6 * (A * C + 3 * B * B), -24 * A * B,
                                  8 * A * A});
    Theorem1Result out;
    out.g_at_1 = g(Rational(1));
    out.g_at_b = g(b);
    if (!(sign(out.g_at_1) < 0))
        throw SignViolationError("pair cubic is not negative at 1 for p = " + std::to_string(p));
    if (!(sign(out.g_at_b) > 0))
        throw SignViolationError("pair cubic is not positive at b for p = " + std::to_string(p));

    // The cubic is strictly increasing, so sign bisection on the exact
    // polynomial pins the root as tightly as doubles allow.
    double lo = 1.0, hi = to_double(b);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (sign(g(Rational(mid))) < 0 ? lo : hi) = mid;
    }
    out.x1 = 0.5 * (lo + hi);
    out.inside = 1.0 < out.x1 && out.x1 < to_double(b);

    const MeanResult pair = solve_r3_pair(FunctionSpec::power(static_cast<double>(p)), 1.0,
                                          to_double(b), tol);
    out.pair_real = pair.pairs[0].real();
    if (std::abs(out.pair_real - out.x1) > tol.pairing * std::max(1.0, std::abs(out.x1)))
        throw MismatchError("cubic root and direct solve disagree for p = " + std::to_string(p));
    return out;
}

// p = -1 admits a rational root: x1 = b(1+b)/(1+b^2) (the a = 1 slice of
// ab(a+b)/(a^2+b^2)).  Verified by exact substitution.
inline Rational reciprocal_pair_root(const Rational& b) {
    if (!(b > 1)) throw DomainError("reciprocal_pair_root needs b > 1");
    const auto m = power_abcd_at(-1, b);
    const Rational &A = m[0], &B = m[1], &C = m[2], &D = m[3];
    const Polynomial<Rational> g({A * D - 9 * B * C, 6 * (A * C + 3 * B * B), -24 * A * B,
                                  8 * A * A});
    const Rational x = b * (1 + b) / (1 + b * b);
    if (sign(g(x)) != 0)
        throw MismatchError("closed-form root of the reciprocal pair cubic fails");
    return x;
}

}  // namespace taylormeans
