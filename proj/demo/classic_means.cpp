// Where two Taylor polynomials of f meet: the unique real intersection point
// (odd order) is a mean of the endpoints, and familiar means drop out of
// familiar functions.

#include <cstdio>

#include <taylormeans/means.hpp>

using namespace taylormeans;

int main() {
    const double a = 2.0, b = 5.0;

    std::printf("Taylor polynomials of order r at a = %g and b = %g intersect at:\n\n", a, b);
    std::printf("  %-12s %-3s %-22s %s\n", "function", "r", "intersection", "classic mean");

    struct Row {
        const char* label;
        FunctionSpec f;
        int r;
        double expected;
        const char* name;
    };
    const Row rows[] = {
        {"1/x", FunctionSpec::power(-1), 3, 2 * a * b / (a + b), "harmonic"},
        {"x^(3/2)", FunctionSpec::power(1.5), 3, std::sqrt(a * b), "geometric"},
        {"x^(5/2)", FunctionSpec::power(2.5), 5, std::sqrt(a * b), "geometric"},
    };
    for (const Row& row : rows) {
        const double x0 = unique_real_mean(row.f, row.r, a, b);
        std::printf("  %-12s %-3d %-22.15g %s = %.15g\n", row.label, row.r, x0, row.name,
                    row.expected);
    }

    std::printf("\nEven orders give no real intersection, only conjugate pairs; for\n");
    std::printf("f = x^(r+1) every pair's real part is the arithmetic mean:\n\n");
    for (int r : {2, 4}) {
        const MeanResult res = mean_result(FunctionSpec::power(r + 1.0), r, a, b);
        std::printf("  x^%d, r = %d:", r + 1, r);
        for (Complex z : res.pairs) std::printf("  %.12g %+.12gi", z.real(), z.imag());
        std::printf("   (midpoint %.12g)\n", (a + b) / 2);
    }

    std::printf("\nThe conjugate pairs are not always means. f = x^(3/2) on (1, 36):\n\n");
    const MeanResult cx = mean_result(FunctionSpec::power(1.5), 3, 1.0, 36.0);
    std::printf("  real intersection   %.15g   (inside, the geometric mean)\n", *cx.x0);
    std::printf("  conjugate pair      %.15g +- %.15g i   (%s)\n", cx.pairs[0].real(),
                cx.pairs[0].imag(), cx.inside[0] ? "inside" : "real part outside (1, 36)");
    return 0;
}
