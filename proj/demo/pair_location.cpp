// Order-3 conjugate pairs for f = x^p on (1, b): the pair's real part is the
// unique real root of a strictly increasing cubic, so its location follows
// from two exact sign evaluations, and a generalized-mean bound pins it down.

#include <cstdio>

#include <taylormeans/means.hpp>
#include <taylormeans/stolarsky.hpp>
#include <taylormeans/theorem_lab.hpp>

using namespace taylormeans;

int main() {
    const Rational b(3);

    std::printf("f = x^p on (1, %s), order 3: cubic signs at the endpoints and the\n",
                to_string(b).c_str());
    std::printf("resulting conjugate-pair real part x1.\n\n");
    std::printf("  %-4s %-9s %-9s %-20s %s\n", "p", "sign(1)", "sign(b)", "x1", "inside?");
    for (long p : {-5L, -1L, 4L, 7L, 12L}) {
        const Theorem1Result res = theorem1_verify(p, b);
        std::printf("  %-4ld %-9s %-9s %-20.15g %s\n", p, res.g_at_1 < 0 ? "negative" : "?",
                    res.g_at_b > 0 ? "positive" : "?", res.x1, res.inside ? "yes" : "no");
    }

    std::printf("\nFor p = -1 the real part has a closed form b(1+b)/(1+b^2):\n");
    std::printf("  exact x1 = %s\n", to_string(reciprocal_pair_root(b)).c_str());

    const double bd = 3.0;
    std::printf("\nSharper location via the two-parameter generalized mean E(s, s-1):\n");
    std::printf("x1 = (3 E(p-2, p-3; b, 1) - x0) / 2, with x0 the real intersection.\n\n");
    std::printf("  %-6s %-20s %-20s %s\n", "p", "x1 (cubic)", "x1 (mean form)", "certified");
    for (double p : {-1.0, 1.5, 3.5, 5.0, 8.0}) {
        const LocationBounds lb = theorem2_bounds(p, bd);
        const char* certified = lb.lower_ok   ? "x1 > 1"
                                : lb.upper_ok ? "x1 < b"
                                              : "none at this p";
        const double mean_form =
            0.5 * (3.0 * stolarsky_mean(p - 2.0, p - 3.0, bd, 1.0) - lb.x0);
        std::printf("  %-6g %-20.15g %-20.15g %s\n", p, lb.x1, mean_form, certified);
    }
    return 0;
}
