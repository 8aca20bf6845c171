#include <catch2/catch_amalgamated.hpp>

#include <taylormeans/theorem_lab.hpp>

using namespace taylormeans;
using Catch::Approx;

namespace {

const std::vector<long> lab_exponents() {
    std::vector<long> ps;
    for (long p = -12; p <= 20; ++p)
        if (p < 0 || p > 3) ps.push_back(p);
    return ps;
}

}  // namespace

TEST_CASE("symbolic moments of the power family") {
    const auto m5 = power_abcd_at(5, Rational(2));
    REQUIRE(m5[0] == 180);
    REQUIRE(m5[1] == 280);
    REQUIRE(m5[2] == 450);
    REQUIRE(m5[3] == 744);

    const auto m4 = power_abcd_at(4, Rational(2));
    REQUIRE(m4[0] == 24);
    REQUIRE(m4[1] == 36);
    REQUIRE(m4[2] == 56);
    REQUIRE(m4[3] == 90);

    // negative exponents walk through the Laurent side
    const auto mm = power_abcd_at(-1, Rational(2));
    REQUIRE(mm[0] == make_rational(45, 8));
    REQUIRE(mm[1] == 7);
    REQUIRE(mm[2] == 9);
    REQUIRE(mm[3] == 12);

    REQUIRE_THROWS_AS(power_abcd(2), ExcludedExponentError);
}

TEST_CASE("endpoint families agree with their closed forms and reflect") {
    for (long p : lab_exponents()) {
        REQUIRE_NOTHROW(vw_build(p));  // internal dual-route comparison
        REQUIRE(reflection_check(p));
    }
}

TEST_CASE("endpoint family signs on a rational grid") {
    for (long p : lab_exponents()) {
        const VWPair vw = vw_build(p);
        for (const Rational& b :
             {make_rational(3, 2), Rational(2), Rational(3), Rational(10)}) {
            REQUIRE(sign(vw.V(b)) < 0);
            REQUIRE(sign(vw.W(b)) > 0);
        }
    }
}

TEST_CASE("quotient by the quintic root factor: low orders in closed form") {
    // n = 4: V = -60 (b-1)^5
    REQUIRE(q_factor(4) == Polynomial<Rational>::constant(Rational(-60)));
    // n = 5: -36 (13 b^2 + 10 b + 2)
    REQUIRE(q_factor(5) ==
            Polynomial<Rational>({Rational(-72), Rational(-360), Rational(-468)}));
    // n = 6: -12 (142 b^4 + 161 b^3 + 105 b^2 + 35 b + 7)
    REQUIRE(q_factor(6) == Polynomial<Rational>({Rational(-84), Rational(-420),
                                                 Rational(-1260), Rational(-1932),
                                                 Rational(-1704)}));
    // n = 7: -24 (185 b^6 + 246 b^5 + 220 b^4 + 140 b^3 + 60 b^2 + 20 b + 4)
    REQUIRE(q_factor(7) ==
            Polynomial<Rational>({Rational(-96), Rational(-480), Rational(-1440),
                                  Rational(-3360), Rational(-5280), Rational(-5904),
                                  Rational(-4440)}));
    // n = 8: -36 (265 b^8 + 385 b^7 + 395 b^6 + 327 b^5 + 210 b^4 + 105 b^3 + 45 b^2
    //              + 15 b + 3)
    REQUIRE(q_factor(8) ==
            Polynomial<Rational>({Rational(-108), Rational(-540), Rational(-1620),
                                  Rational(-3780), Rational(-7560), Rational(-11772),
                                  Rational(-14220), Rational(-13860), Rational(-9540)}));
    REQUIRE_THROWS_AS(q_factor(3), DomainError);
}

TEST_CASE("quotient coefficients stay negative through n = 30") {
    for (long n = 4; n <= 30; ++n) REQUIRE_NOTHROW(q_factor(n));
}

TEST_CASE("reciprocal-branch quotient") {
    // n = 1: 72 b (2 b^2 + 2 b + 1); the constant coefficient is the lone zero
    REQUIRE(s_factor(1) == Polynomial<Rational>({Rational(0), Rational(72), Rational(144),
                                                 Rational(144)}));
    for (long n = 1; n <= 30; ++n) REQUIRE_NOTHROW(s_factor(n));
    REQUIRE_THROWS_AS(s_factor(0), DomainError);
}

TEST_CASE("derivative tables at zero") {
    for (long n = 9; n <= 20; ++n) REQUIRE(derivative_table_v(n));
    for (long n = 2; n <= 20; ++n) REQUIRE(derivative_table_k(n));
    REQUIRE_THROWS_AS(derivative_table_v(8), DomainError);
    REQUIRE_THROWS_AS(derivative_table_k(1), DomainError);
}

TEST_CASE("alternating binomial collapse") {
    REQUIRE(lemma5_sum(4, 0).first == 75);
    REQUIRE(lemma5_sum(9, 0).first == 150);
    REQUIRE(lemma5_sum(13, 1).first == 885);
    for (long n = 4; n <= 40; ++n)
        for (long j = 0; j <= n - 4; ++j) {
            const auto [lhs, rhs] = lemma5_sum(n, j);
            REQUIRE(lhs == rhs);
        }
    REQUIRE_THROWS_AS(lemma5_sum(4, 1), DomainError);
    REQUIRE_THROWS_AS(lemma5_sum(3, 0), DomainError);
}

TEST_CASE("weighted binomial polynomial has one root in (-1, 0) for large n") {
    const Lemma6Result r13 = lemma6_root_count(13);
    REQUIRE(r13.value_at_minus1 == -42);
    REQUIRE(r13.root_bound == 1);
    for (long n = 13; n <= 40; ++n) REQUIRE(lemma6_root_count(n).root_bound == 1);
}

TEST_CASE("factored derivative identity and antiderivative double sum") {
    for (long n = 4; n <= 25; ++n) {
        REQUIRE(l_poly_check(n));
        REQUIRE(v1_double_sum_check(n));
    }
    REQUIRE_THROWS_AS(l_poly(3), DomainError);
}

TEST_CASE("endpoint sign bracketing certifies the pair real part") {
    const Theorem1Result r52 = theorem1_verify(5, Rational(2));
    REQUIRE(sign(r52.g_at_1) < 0);
    REQUIRE(sign(r52.g_at_b) > 0);
    REQUIRE(r52.inside);
    REQUIRE(std::abs(r52.x1 - r52.pair_real) <= 1e-9);

    // arithmetic-mean instance: quartic on (1,3) pins x1 = 2
    const Theorem1Result r43 = theorem1_verify(4, Rational(3));
    REQUIRE(r43.x1 == Approx(2.0).epsilon(1e-12));

    // reciprocal instance: rational root 6/5 on (1,2)
    const Theorem1Result rm12 = theorem1_verify(-1, Rational(2));
    REQUIRE(rm12.x1 == Approx(1.2).epsilon(1e-12));
    REQUIRE(reciprocal_pair_root(Rational(2)) == make_rational(6, 5));
    REQUIRE(reciprocal_pair_root(Rational(3)) == make_rational(6, 5));  // 3*4/(1+9) = 6/5
    REQUIRE(reciprocal_pair_root(make_rational(3, 2)) == make_rational(15, 13));

    REQUIRE_THROWS_AS(theorem1_verify(2, Rational(2)), ExcludedExponentError);
    REQUIRE_THROWS_AS(theorem1_verify(5, Rational(1)), DomainError);
}

TEST_CASE("full grid of endpoint-sign instances") {
    for (long p : lab_exponents())
        for (const Rational& b :
             {make_rational(3, 2), Rational(2), Rational(3), Rational(10)}) {
            const Theorem1Result res = theorem1_verify(p, b);
            REQUIRE(res.inside);
            REQUIRE(std::abs(res.x1 - res.pair_real) <= 1e-9);
        }
}
