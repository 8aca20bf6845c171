#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <taylormeans/means.hpp>

using namespace taylormeans;
using Catch::Approx;

TEST_CASE("taylor polynomial expansion into the monomial basis") {
    // x^4 about 2, order 3: 16 + 32(x-2) + 24(x-2)^2 + 8(x-2)^3
    const Polynomial<double> p = taylor_poly(FunctionSpec::power(4), 3, 2.0);
    REQUIRE(p.degree() == 3);
    REQUIRE(p.coeff(0) == Approx(-16.0));
    REQUIRE(p.coeff(1) == Approx(32.0));
    REQUIRE(p.coeff(2) == Approx(-24.0));
    REQUIRE(p.coeff(3) == Approx(8.0));

    const Polynomial<Rational> pe = taylor_poly_exact(FunctionSpec::power(4), 3, Rational(2));
    REQUIRE(pe == Polynomial<Rational>({Rational(-16), Rational(32), Rational(-24),
                                        Rational(8)}));

    // order 0 is the constant f(c)
    REQUIRE(taylor_poly(FunctionSpec::exp(), 0, 0.0).coeff(0) == Approx(1.0));
    // full order reproduces the function exactly for polynomials
    const Polynomial<double> full = taylor_poly(FunctionSpec::power(4), 4, 3.0);
    REQUIRE(full.coeff(4) == Approx(1.0));
    for (int j = 0; j < 4; ++j) REQUIRE(full.coeff(j) == Approx(0.0).margin(1e-9));
}

TEST_CASE("taylor difference via two constructions") {
    // x^4, order 3, nodes 1 and 2: 4x^3 - 18x^2 + 28x - 15
    const Polynomial<double> d = taylor_diff(FunctionSpec::power(4), 3, 1.0, 2.0);
    REQUIRE(d.coeff(0) == Approx(-15.0));
    REQUIRE(d.coeff(1) == Approx(28.0));
    REQUIRE(d.coeff(2) == Approx(-18.0));
    REQUIRE(d.coeff(3) == Approx(4.0));

    const Polynomial<Rational> de =
        taylor_diff_exact(FunctionSpec::power(4), 3, Rational(1), Rational(2));
    REQUIRE(de == Polynomial<Rational>({Rational(-15), Rational(28), Rational(-18),
                                        Rational(4)}));

    // the float and exact routes agree for a spread of integer powers
    for (long p : {-3L, -1L, 5L, 7L})
        for (int r = 1; r <= 4; ++r) {
            const Polynomial<double> f =
                taylor_diff(FunctionSpec::power(static_cast<double>(p)), r, 1.0, 2.0);
            const Polynomial<Rational> e = taylor_diff_exact(
                FunctionSpec::power(static_cast<double>(p)), r, Rational(1), Rational(2));
            for (int j = 0; j <= r; ++j)
                REQUIRE(f.coeff(j) == Approx(to_double(e.coeff(j))).margin(1e-10));
        }
}

TEST_CASE("remainder residual vanishes exactly at intersection points") {
    const FunctionSpec f = FunctionSpec::power(4);
    REQUIRE(normalized_residual(f, 3, 1.0, 2.0, Complex(1.5)) < 1e-14);
    REQUIRE(normalized_residual(f, 3, 1.0, 2.0, Complex(1.5, 0.5)) < 1e-14);
    REQUIRE(normalized_residual(f, 3, 1.0, 2.0, Complex(1.7)) > 1e-3);
    REQUIRE(remainder_residual(f, 3, 1.0, 2.0, Complex(1.5)) < 1e-10);
}

TEST_CASE("pair cubic from moments") {
    // reciprocal function on (1,2): moments 45/8, 7, 9, 12
    const GCubic g = g_cubic(FunctionSpec::power(-1), 1.0, 2.0);
    REQUIRE(g.moments.A() == Approx(45.0 / 8.0));
    REQUIRE(g.moments.B() == Approx(7.0));
    REQUIRE(g.moments.C() == Approx(9.0));
    REQUIRE(g.moments.D() == Approx(12.0));
    REQUIRE(g.poly.coeff(0) == Approx(-999.0 / 2.0));
    REQUIRE(g.poly.coeff(1) == Approx(4743.0 / 4.0));
    REQUIRE(g.poly.coeff(2) == Approx(-945.0));
    REQUIRE(g.poly.coeff(3) == Approx(2025.0 / 8.0));
    REQUIRE(g.poly(1.2) == Approx(0.0).margin(1e-9));
    REQUIRE(g.poly(1.0) == Approx(-45.0 / 8.0));
    REQUIRE(g.poly(2.0) == Approx(117.0));

    const Polynomial<Rational> ge = g_cubic_exact(FunctionSpec::power(-1), Rational(1),
                                                  Rational(2));
    REQUIRE(ge(make_rational(6, 5)) == 0);
    REQUIRE(ge(Rational(1)) == make_rational(-45, 8));
    REQUIRE(ge(Rational(2)) == 117);

    // quartic function on (1,3): the cubic factors through x = 2
    const Polynomial<Rational> g4 = g_cubic_exact(FunctionSpec::power(4), Rational(1),
                                                  Rational(3));
    REQUIRE(g4 == Polynomial<Rational>({Rational(-156672), Rational(225792),
                                        Rational(-110592), Rational(18432)}));
    REQUIRE(g4(Rational(2)) == 0);
}

TEST_CASE("pair cubic matches its integral form") {
    const Tolerances tol;
    for (const FunctionSpec& f :
         {FunctionSpec::power(-1), FunctionSpec::power(5), FunctionSpec::exp()}) {
        const GCubic g = g_cubic(f, 1.0, 2.0, tol);
        for (double x : {0.7, 1.0, 1.3, 1.9, 2.4}) {
            const double via_integral = g_integral_form(f, 1.0, 2.0, x, tol);
            REQUIRE(via_integral ==
                    Approx(g.poly(x)).epsilon(1e-9).margin(1e-9 * std::abs(g.poly(2.0))));
        }
    }
}

TEST_CASE("order-3 pair solve lands on the frozen instance") {
    const MeanResult res = solve_r3_pair(FunctionSpec::power(-1), 1.0, 2.0);
    REQUIRE(res.pairs.size() == 1);
    REQUIRE(res.pairs[0].real() == Approx(1.2).epsilon(1e-12));
    REQUIRE(res.pairs[0].imag() == Approx(0.4).epsilon(1e-12));
    REQUIRE(res.x0.has_value());
    REQUIRE(*res.x0 == Approx(4.0 / 3.0).epsilon(1e-12));
    REQUIRE(res.inside[0]);
    REQUIRE(res.residual <= 1e-8);
}

TEST_CASE("full pipeline agrees with the cubic shortcut at order 3") {
    for (double p : {-2.0, -1.0, 1.5, 4.0, 5.0, 7.0})
        for (double b : {1.5, 2.0, 5.0}) {
            const FunctionSpec f = FunctionSpec::power(p);
            const MeanResult direct = mean_result(f, 3, 1.0, b);
            const MeanResult cubic = solve_r3_pair(f, 1.0, b);
            REQUIRE(direct.pairs.size() == 1);
            REQUIRE(direct.pairs[0].real() ==
                    Approx(cubic.pairs[0].real()).epsilon(1e-10));
            REQUIRE(direct.pairs[0].imag() ==
                    Approx(cubic.pairs[0].imag()).epsilon(1e-10));
            REQUIRE(*direct.x0 == Approx(*cubic.x0).epsilon(1e-10));
        }
}

TEST_CASE("harmonic and geometric means") {
    const std::vector<std::pair<double, double>> grid = {{1, 2}, {2, 5}, {1, 10}};
    for (int r : {1, 3, 5})
        for (const auto& [a, b] : grid) {
            const double harmonic = unique_real_mean(FunctionSpec::power(-1), r, a, b);
            REQUIRE(std::abs(harmonic - 2.0 * a * b / (a + b)) <= 1e-9);
            const double geometric =
                unique_real_mean(FunctionSpec::power(r / 2.0), r, a, b);
            REQUIRE(std::abs(geometric - std::sqrt(a * b)) <= 1e-9);
        }
    REQUIRE_THROWS_AS(unique_real_mean(FunctionSpec::power(-1), 2, 1.0, 2.0), DomainError);
}

TEST_CASE("even orders have no real intersection") {
    const MeanResult res = mean_result(FunctionSpec::power(3), 2, 1.0, 2.0);
    REQUIRE_FALSE(res.x0.has_value());
    REQUIRE(res.pairs.size() == 1);
    REQUIRE(res.pairs[0].real() == Approx(1.5).epsilon(1e-9));  // (a+b)/2 for x^(r+1)
}

TEST_CASE("average of root real parts equals the center of mass") {
    for (const FunctionSpec& f :
         {FunctionSpec::power(5), FunctionSpec::power(-2), FunctionSpec::exp(),
          FunctionSpec::log()})
        for (int r = 1; r <= 5; ++r) {
            if (f.integer_power() && f.integer_exponent() >= 0 && f.integer_exponent() <= r)
                continue;  // the (r+1)-th derivative vanishes identically
            const auto [avg, com] = real_parts_average_check(f, r, 1.0, 2.0);
            REQUIRE(avg == Approx(com).epsilon(1e-9));
        }
}

TEST_CASE("counterexample instance: the pair escapes the interval") {
    const MeanResult res = mean_result(FunctionSpec::power(1.5), 3, 1.0, 36.0);
    REQUIRE(res.x0.has_value());
    REQUIRE(std::abs(*res.x0 - 6.0) <= 1e-9);
    REQUIRE(res.pairs.size() == 1);
    REQUIRE(std::abs(res.pairs[0].real() - 33.0 / 43.0) <= 1e-9);
    REQUIRE(std::abs(res.pairs[0].imag() - 15.0 / 43.0 * std::sqrt(291.0)) <= 1e-9);
    REQUIRE_FALSE(res.inside[0]);
    REQUIRE(res.residual <= 1e-8);
}

TEST_CASE("exp and log families stay inside") {
    for (const FunctionSpec& f : {FunctionSpec::exp(), FunctionSpec::log()}) {
        const double m = unique_real_mean(f, 3, 1.0, 2.0);
        REQUIRE(m > 1.0);
        REQUIRE(m < 2.0);
        const MeanResult res = mean_result(f, 3, 1.0, 2.0);
        REQUIRE(res.residual <= 1e-8);
    }
}

TEST_CASE("location bounds from the difference-mean identity") {
    // p >= 7/2: the lower bound 1 < x1 is certified
    const LocationBounds hi = theorem2_bounds(5.0, 2.0);
    REQUIRE(hi.lower_ok);
    REQUIRE(hi.x1 > 1.0);
    REQUIRE(hi.x1 < 2.0);

    const LocationBounds edge = theorem2_bounds(3.5, 2.0);
    REQUIRE(edge.lower_ok);

    // p < 2 (and not 0 or 1): the upper bound x1 < b is certified
    const LocationBounds lo = theorem2_bounds(-1.0, 2.0);
    REQUIRE(lo.upper_ok);
    REQUIRE(lo.x1 == Approx(1.2).epsilon(1e-9));
    REQUIRE(lo.x0 == Approx(4.0 / 3.0).epsilon(1e-9));

    const LocationBounds frac = theorem2_bounds(1.5, 36.0);
    REQUIRE(frac.upper_ok);
    REQUIRE(frac.x1 == Approx(33.0 / 43.0).epsilon(1e-9));

    REQUIRE_THROWS_AS(theorem2_bounds(2.0, 2.0), ExcludedExponentError);
    REQUIRE_THROWS_AS(theorem2_bounds(5.0, 0.5), DomainError);
}

TEST_CASE("degenerate exponents are rejected up front") {
    REQUIRE_THROWS_AS(mean_result(FunctionSpec::power(2), 3, 1.0, 2.0),
                      ExcludedExponentError);
    REQUIRE_THROWS_AS(mean_result(FunctionSpec::power(0), 1, 1.0, 2.0),
                      ExcludedExponentError);
    REQUIRE_THROWS_AS(mean_result(FunctionSpec::power(5), 3, 2.0, 1.0), DomainError);
}
