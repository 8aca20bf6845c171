#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "errors.hpp"
#include "function_spec.hpp"
#include "means.hpp"

namespace taylormeans {

struct SweepCase {
    std::string spec;
    int r = 0;
    double a = 0.0, b = 0.0;
    std::optional<double> x0;
    std::vector<Complex> pairs;
    std::vector<bool> inside;
    bool cj1 = false;  // at least one pair real part strictly inside (a,b)
    bool cj2 = false;  // every pair real part strictly inside (a,b)
    double residual = 0.0;
    std::string error;  // nonempty marks a failed case; the sweep continues
};

struct SweepSummary {
    int cases = 0;
    int errors = 0;
    int cj1_true = 0;
    int cj2_true = 0;
};

struct SweepReport {
    std::vector<SweepCase> cases;
    SweepSummary summary;
};

namespace detail {

// Closed forms for the reciprocal function's pair real parts at orders 4 and
// 5; any sweep case they apply to gets cross-checked against them.
inline std::vector<double> reciprocal_pair_closed_forms(int r, double a, double b) {
    if (r == 4) {
        const double s5 = std::sqrt(5.0);
        return {0.5 * (5.0 - s5) * a * b * (a + b) /
                (2.0 * b * b - (s5 - 1.0) * a * b + 2.0 * a * a)};
    }
    if (r == 5)
        return {(a + b) * a * b / (2.0 * (a * a - a * b + b * b)),
                3.0 * (a + b) * a * b / (2.0 * (a * a + a * b + b * b))};
    return {};
}

inline void run_sweep_case(SweepCase& sc, const FunctionSpec& f, const Tolerances& tol) {
    try {
        const MeanResult res = mean_result(f, sc.r, sc.a, sc.b, tol);
        sc.x0 = res.x0;
        sc.pairs = res.pairs;
        sc.inside = res.inside;
        sc.residual = res.residual;
        sc.cj1 = res.any_inside();
        sc.cj2 = res.all_inside();

        if (sc.r == 3) {
            // Independent route: the pair cubic must land on the same point.
            const MeanResult viacubic = solve_r3_pair(f, sc.a, sc.b, tol);
            if (std::abs(viacubic.pairs[0].real() - res.pairs[0].real()) >
                tol.pairing * std::max(1.0, std::abs(res.pairs[0].real())))
                throw MismatchError("cubic route disagrees with the direct root solve");
        }
        if (f.kind() == FunctionKind::Power && f.exponent() == -1.0) {
            const auto closed = reciprocal_pair_closed_forms(sc.r, sc.a, sc.b);
            if (closed.size() == sc.pairs.size()) {
                std::vector<double> got;
                for (Complex z : sc.pairs) got.push_back(z.real());
                std::sort(got.begin(), got.end());
                std::vector<double> want = closed;
                std::sort(want.begin(), want.end());
                for (size_t i = 0; i < want.size(); ++i)
                    if (std::abs(got[i] - want[i]) >
                        tol.pairing * std::max(1.0, std::abs(want[i])))
                        throw MismatchError("closed-form pair real part mismatch");
            }
        }
    } catch (const std::exception& e) {
        sc.error = e.what();
    }
}

}  // namespace detail

// Evaluate every (spec, r, b) combination, in parallel when jobs > 1, and
// assemble a deterministic, sorted report.
inline SweepReport conjecture_sweep(const std::vector<FunctionSpec>& specs,
                                    const std::vector<int>& r_values, double a,
                                    const std::vector<double>& b_grid, int jobs = 1,
                                    const Tolerances& tol = {}) {
    if (specs.empty() || r_values.empty() || b_grid.empty())
        throw UsageError("sweep grid must be nonempty");
    SweepReport report;
    std::vector<const FunctionSpec*> case_spec;
    for (const FunctionSpec& f : specs)
        for (int r : r_values)
            for (double b : b_grid) {
                SweepCase sc;
                sc.spec = f.name();
                sc.r = r;
                sc.a = a;
                sc.b = b;
                report.cases.push_back(std::move(sc));
                case_spec.push_back(&f);
            }

    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(report.cases.size())));
    if (jobs == 1) {
        for (size_t i = 0; i < report.cases.size(); ++i)
            detail::run_sweep_case(report.cases[i], *case_spec[i], tol);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < report.cases.size();
                     i = next.fetch_add(1))
                    detail::run_sweep_case(report.cases[i], *case_spec[i], tol);
            });
        for (std::thread& t : pool) t.join();
    }

    std::sort(report.cases.begin(), report.cases.end(),
              [](const SweepCase& l, const SweepCase& r) {
                  if (l.spec != r.spec) return l.spec < r.spec;
                  if (l.r != r.r) return l.r < r.r;
                  if (l.a != r.a) return l.a < r.a;
                  return l.b < r.b;
              });
    for (const SweepCase& sc : report.cases) {
        ++report.summary.cases;
        if (!sc.error.empty()) {
            ++report.summary.errors;
            continue;
        }
        if (sc.cj1) ++report.summary.cj1_true;
        if (sc.cj2) ++report.summary.cj2_true;
    }
    return report;
}

inline nlohmann::ordered_json to_json(const SweepReport& report) {
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const SweepCase& sc : report.cases) {
        nlohmann::ordered_json c;
        c["spec"] = sc.spec;
        c["r"] = sc.r;
        c["a"] = sc.a;
        c["b"] = sc.b;
        if (sc.x0)
            c["x0"] = *sc.x0;
        else
            c["x0"] = nullptr;
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (Complex z : sc.pairs) pairs.push_back({z.real(), z.imag()});
        c["pairs"] = std::move(pairs);
        c["inside"] = sc.inside;
        c["cj1"] = sc.cj1;
        c["cj2"] = sc.cj2;
        c["residual"] = sc.residual;
        if (!sc.error.empty()) c["error"] = sc.error;
        cases.push_back(std::move(c));
    }
    nlohmann::ordered_json out;
    out["cases"] = std::move(cases);
    out["summary"] = {{"cases", report.summary.cases},
                      {"errors", report.summary.errors},
                      {"cj1_true", report.summary.cj1_true},
                      {"cj2_true", report.summary.cj2_true}};
    return out;
}

namespace detail {

inline std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

// One row per conjugate pair (pairless cases still get a single row so every
// case appears exactly once in the file).
inline std::string to_csv(const SweepReport& report) {
    std::string out = "spec,r,a,b,x0,pair_index,pair_re,pair_im,inside,cj1,cj2,residual,error\n";
    for (const SweepCase& sc : report.cases) {
        const std::string head = sc.spec + "," + std::to_string(sc.r) + "," +
                                 detail::csv_double(sc.a) + "," + detail::csv_double(sc.b) + "," +
                                 (sc.x0 ? detail::csv_double(*sc.x0) : std::string());
        const std::string tail = std::string(sc.cj1 ? "true" : "false") + "," +
                                 (sc.cj2 ? "true" : "false") + "," +
                                 detail::csv_double(sc.residual) + "," + sc.error;
        if (sc.pairs.empty()) {
            out += head + ",,,," + tail + "\n";
            continue;
        }
        for (size_t i = 0; i < sc.pairs.size(); ++i)
            out += head + "," + std::to_string(i) + "," +
                   detail::csv_double(sc.pairs[i].real()) + "," +
                   detail::csv_double(sc.pairs[i].imag()) + "," +
                   (sc.inside[i] ? "true" : "false") + "," + tail + "\n";
    }
    return out;
}

struct NonrealNodesDemo {
    Complex node_a, node_b;
    std::vector<Complex> roots;   // sorted by real part
    Complex node_mean;            // (a+b)/2, which must appear among the roots
    Complex factored_scale;       // leading coefficient of prod (-z + root_k)
    double max_error = 0.0;       // worst distance to the expected root set
};

// Quartic function, order 3, nodes off the real axis: the intersection points
// line up on a segment and include the arithmetic mean of the nodes.
inline NonrealNodesDemo nonreal_nodes_demo() {
    NonrealNodesDemo demo;
    demo.node_a = Complex(2.0, 4.0);
    demo.node_b = Complex(4.0, 2.0);
    const FunctionSpec f = FunctionSpec::power(4.0);
    const Polynomial<Complex> diff =
        taylor_poly_complex(f, 3, demo.node_a) - taylor_poly_complex(f, 3, demo.node_b);
    std::vector<Complex> roots = solve_roots(diff);
    std::sort(roots.begin(), roots.end(), [](Complex l, Complex r) {
        return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
    });
    demo.roots = roots;
    demo.node_mean = 0.5 * (demo.node_a + demo.node_b);
    // prod (-z + root_k) has leading (-1)^3; undo it to report the scale in
    // front of the factored form.
    demo.factored_scale = -diff.leading();

    const std::vector<Complex> expected = {Complex(2, 2), Complex(3, 3), Complex(4, 4)};
    double worst = 0.0;
    for (size_t i = 0; i < expected.size() && i < roots.size(); ++i)
        worst = std::max(worst, std::abs(roots[i] - expected[i]));
    if (roots.size() != expected.size()) worst = 1.0;
    demo.max_error = worst;
    return demo;
}

}  // namespace taylormeans
