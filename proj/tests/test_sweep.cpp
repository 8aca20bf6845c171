#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include <taylormeans/sweep.hpp>

using namespace taylormeans;
using Catch::Approx;

namespace {

const SweepCase& find_case(const SweepReport& report, int r, double b) {
    for (const SweepCase& sc : report.cases)
        if (sc.r == r && sc.b == b) return sc;
    FAIL("case not found");
    return report.cases.front();
}

}  // namespace

TEST_CASE("reciprocal-function sweep reproduces the known verdicts") {
    const SweepReport report = conjecture_sweep({FunctionSpec::power(-1)}, {4, 5, 7}, 1.0,
                                                {2.0, 4.0});
    REQUIRE(report.summary.cases == 6);
    REQUIRE(report.summary.errors == 0);

    // order 5 on (1,2): real parts 1 (boundary => outside) and 9/7 (inside)
    const SweepCase& c52 = find_case(report, 5, 2.0);
    REQUIRE(c52.pairs.size() == 2);
    REQUIRE(std::abs(c52.pairs[0].real() - 1.0) <= 1e-9);
    REQUIRE(std::abs(c52.pairs[1].real() - 9.0 / 7.0) <= 1e-9);
    REQUIRE_FALSE(c52.inside[0]);
    REQUIRE(c52.inside[1]);
    REQUIRE(c52.cj1);
    REQUIRE_FALSE(c52.cj2);
    REQUIRE(*c52.x0 == Approx(4.0 / 3.0).epsilon(1e-9));

    // order 4 on (1,4): one real part drops below 1
    const SweepCase& c44 = find_case(report, 4, 4.0);
    REQUIRE(c44.pairs.size() == 2);
    const double s5 = std::sqrt(5.0);
    const double x2 = 5.0 * (5.0 - s5) / (19.0 - 2.0 * s5);
    REQUIRE(std::abs(c44.pairs[0].real() - x2) <= 1e-9);
    REQUIRE(c44.pairs[0].real() < 1.0);
    REQUIRE_FALSE(c44.inside[0]);
    REQUIRE(c44.inside[1]);
    REQUIRE(c44.cj1);
    REQUIRE_FALSE(c44.cj2);
    REQUIRE_FALSE(c44.x0.has_value());

    // order 7 on (1,2): three pairs, two inside
    const SweepCase& c72 = find_case(report, 7, 2.0);
    REQUIRE(c72.pairs.size() == 3);
    REQUIRE(std::count(c72.inside.begin(), c72.inside.end(), true) == 2);
    REQUIRE(c72.cj1);
    REQUIRE_FALSE(c72.cj2);
}

TEST_CASE("powers one above the order put every pair at the midpoint") {
    for (int r : {2, 3, 4, 5, 6}) {
        const SweepReport report = conjecture_sweep(
            {FunctionSpec::power(static_cast<double>(r + 1))}, {r}, 1.0, {2.0});
        const SweepCase& sc = report.cases.front();
        REQUIRE(sc.error.empty());
        REQUIRE(sc.cj2);
        for (Complex z : sc.pairs) REQUIRE(std::abs(z.real() - 1.5) <= 1e-9);
    }
}

TEST_CASE("order-3 sweeps are always fully inside") {
    const SweepReport report =
        conjecture_sweep({FunctionSpec::power(5)}, {3}, 1.0,
                         {1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0});
    REQUIRE(report.summary.cases == 8);
    REQUIRE(report.summary.errors == 0);
    REQUIRE(report.summary.cj2_true == 8);
}

TEST_CASE("per-case errors do not halt the sweep") {
    const SweepReport report = conjecture_sweep(
        {FunctionSpec::power(2), FunctionSpec::power(5)}, {3}, 1.0, {2.0});
    REQUIRE(report.summary.cases == 2);
    REQUIRE(report.summary.errors == 1);
    bool saw_error = false, saw_good = false;
    for (const SweepCase& sc : report.cases) {
        if (sc.spec == "power:2") {
            REQUIRE_FALSE(sc.error.empty());
            saw_error = true;
        } else {
            REQUIRE(sc.error.empty());
            saw_good = true;
        }
    }
    REQUIRE(saw_error);
    REQUIRE(saw_good);
    REQUIRE_THROWS_AS(conjecture_sweep({}, {3}, 1.0, {2.0}), UsageError);
}

TEST_CASE("parallel execution is schedule-independent") {
    const std::vector<FunctionSpec> specs = {FunctionSpec::power(-1), FunctionSpec::power(5),
                                             FunctionSpec::exp()};
    const std::vector<int> orders = {3, 4, 5};
    const std::vector<double> grid = {1.5, 2.0, 3.0};
    const SweepReport serial = conjecture_sweep(specs, orders, 1.0, grid, 1);
    const SweepReport parallel = conjecture_sweep(specs, orders, 1.0, grid, 4);
    REQUIRE(to_json(serial).dump(2) == to_json(parallel).dump(2));
    REQUIRE(to_csv(serial) == to_csv(parallel));
}

TEST_CASE("report serialization") {
    const SweepReport report = conjecture_sweep({FunctionSpec::power(-1)}, {3, 4}, 1.0, {2.0});
    const nlohmann::ordered_json j = to_json(report);
    REQUIRE(j["cases"].size() == 2);
    REQUIRE(j["summary"]["cases"] == 2);
    for (const auto& c : j["cases"]) {
        REQUIRE(c.contains("spec"));
        REQUIRE(c.contains("r"));
        REQUIRE(c.contains("a"));
        REQUIRE(c.contains("b"));
        REQUIRE(c.contains("x0"));
        REQUIRE(c.contains("pairs"));
        REQUIRE(c.contains("inside"));
        REQUIRE(c.contains("cj1"));
        REQUIRE(c.contains("cj2"));
        REQUIRE(c.contains("residual"));
    }
    // order 4 has no real intersection: x0 is null in JSON
    REQUIRE(j["cases"][1]["x0"].is_null());
    REQUIRE(j["cases"][0]["x0"].is_number());

    // round trip through the text form
    const nlohmann::ordered_json again = nlohmann::ordered_json::parse(j.dump(2));
    REQUIRE(again == j);
    REQUIRE(again["cases"][0]["x0"].get<double>() ==
            report.cases[0].x0.value());

    // CSV: one row per pair (r=3 has one, r=4 has two) plus the header
    const std::string csv = to_csv(report);
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 4);
    REQUIRE(csv.rfind("spec,r,a,b,x0,pair_index,pair_re,pair_im,inside,cj1,cj2,residual,error",
                      0) == 0);
}

TEST_CASE("nonreal nodes demo") {
    const NonrealNodesDemo demo = nonreal_nodes_demo();
    REQUIRE(demo.roots.size() == 3);
    REQUIRE(demo.max_error <= 1e-9);
    REQUIRE(std::abs(demo.roots[0] - Complex(2, 2)) <= 1e-9);
    REQUIRE(std::abs(demo.roots[1] - Complex(3, 3)) <= 1e-9);
    REQUIRE(std::abs(demo.roots[2] - Complex(4, 4)) <= 1e-9);
    REQUIRE(std::abs(demo.node_mean - Complex(3, 3)) == 0.0);
    REQUIRE(std::abs(demo.factored_scale - Complex(8, -8)) <= 1e-9);
    // the midpoint of the nodes appears among the intersection points
    REQUIRE(std::abs(demo.roots[1] - demo.node_mean) <= 1e-9);
}
