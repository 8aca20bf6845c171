#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "errors.hpp"
#include "function_spec.hpp"
#include "means.hpp"
#include "sweep.hpp"
#include "theorem_lab.hpp"

namespace taylormeans {

namespace cli_detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt(Complex z) {
    const double im = z.imag();
    return fmt(z.real()) + (im < 0 ? " - " : " + ") + fmt(std::abs(im)) + " i";
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

// `lo..hi[:step]` (inclusive) or a comma list; every malformed grid is a
// usage error, never a crash.
inline std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    for (const std::string& token : split(text, ',')) {
        if (token.empty()) throw UsageError("empty grid token in '" + text + "'");
        const size_t dots = token.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stod(token));
                continue;
            }
            const std::string lo_s = token.substr(0, dots);
            std::string hi_s = token.substr(dots + 2);
            double step = 1.0;
            if (const size_t colon = hi_s.find(':'); colon != std::string::npos) {
                step = std::stod(hi_s.substr(colon + 1));
                hi_s = hi_s.substr(0, colon);
            }
            const double lo = std::stod(lo_s), hi = std::stod(hi_s);
            if (!(step > 0.0) || hi < lo)
                throw UsageError("bad range '" + token + "' (need lo <= hi, step > 0)");
            const long count = std::lround(std::floor((hi - lo) / step + 1e-9)) + 1;
            for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("cannot parse grid token '" + token + "'");
        }
    }
    if (out.empty()) throw UsageError("empty grid '" + text + "'");
    return out;
}

inline std::vector<long> parse_int_list(const std::string& text) {
    std::vector<long> out;
    for (double v : parse_grid(text)) {
        const long i = std::lround(v);
        if (std::abs(v - static_cast<double>(i)) > 1e-9)
            throw UsageError("expected integers in '" + text + "'");
        out.push_back(i);
    }
    return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const std::string& token : split(text, ',')) out.push_back(parse_rational(token));
    if (out.empty()) throw UsageError("empty list '" + text + "'");
    return out;
}

inline int default_jobs() {
    if (const char* env = std::getenv("TAYLOR_MEAN_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return 1;
}

struct CheckTally {
    int passed = 0;
    int failed = 0;
};

template <class Fn>
void run_check(CheckTally& tally, std::ostream& out, const std::string& label, Fn&& fn) {
    try {
        fn();
        ++tally.passed;
        out << "pass  " << label << "\n";
    } catch (const std::exception& e) {
        ++tally.failed;
        out << "FAIL  " << label << ": " << e.what() << "\n";
    }
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + out_path + "'");
    file << text;
}

inline std::string render_case(const SweepCase& sc, const std::string& format) {
    if (format == "json") {
        SweepReport single;
        single.cases.push_back(sc);
        return to_json(single)["cases"][0].dump(2) + "\n";
    }
    if (format == "csv") {
        SweepReport single;
        single.cases.push_back(sc);
        return to_csv(single);
    }
    std::string text;
    text += "spec = " + sc.spec + "\n";
    text += "r = " + std::to_string(sc.r) + "\n";
    text += "interval = (" + fmt(sc.a) + ", " + fmt(sc.b) + ")\n";
    text += "x0 = " + (sc.x0 ? fmt(*sc.x0) : std::string("none")) + "\n";
    for (size_t i = 0; i < sc.pairs.size(); ++i)
        text += "pair[" + std::to_string(i) + "] = " + fmt(sc.pairs[i]) +
                (sc.inside[i] ? "  inside" : "  outside") + "\n";
    text += std::string("cj1 = ") + (sc.cj1 ? "true" : "false") + "\n";
    text += std::string("cj2 = ") + (sc.cj2 ? "true" : "false") + "\n";
    text += "residual = " + fmt(sc.residual) + "\n";
    return text;
}

inline int cmd_mean(const std::string& spec, int r, double a, double b,
                    const std::string& format, const std::string& out_path,
                    const Tolerances& tol, std::ostream& out, std::ostream& err) {
    const FunctionSpec f = FunctionSpec::parse(spec);
    SweepCase sc;
    sc.spec = f.name();
    sc.r = r;
    sc.a = a;
    sc.b = b;
    detail::run_sweep_case(sc, f, tol);
    if (!sc.error.empty()) {
        err << "error: " << sc.error << "\n";
        return 1;
    }
    emit(render_case(sc, format), out_path, out);
    return 0;
}

inline int cmd_verify(const std::string& suite, const std::string& n_range,
                      const std::string& p_range, const std::string& b_list,
                      const Tolerances& tol, std::ostream& out, std::ostream& err) {
    const auto wants = [&](const char* name) { return suite == name || suite == "all"; };
    const bool known = suite == "all" || suite == "vw" || suite == "factor-signs" ||
                       suite == "lemma5" || suite == "lemma6" || suite == "l-poly" ||
                       suite == "v1" || suite == "theorem1" || suite == "derivative-tables";
    if (!known) throw UsageError("unknown suite '" + suite + "'");

    const auto n_values = [&](long lo, long hi) {
        std::vector<long> out_v;
        if (!n_range.empty()) {
            for (long n : parse_int_list(n_range))
                if (n >= lo) out_v.push_back(n);
        } else {
            for (long n = lo; n <= hi; ++n) out_v.push_back(n);
        }
        if (out_v.empty()) throw UsageError("empty n range for suite " + suite);
        return out_v;
    };
    const auto p_values = [&] {
        std::vector<long> out_v;
        const std::vector<long> raw =
            p_range.empty() ? [] {
                std::vector<long> d;
                for (long p = -12; p <= 20; ++p) d.push_back(p);
                return d;
            }()
                            : parse_int_list(p_range);
        for (long p : raw)
            if (p < 0 || p > 3) out_v.push_back(p);
        if (out_v.empty()) throw UsageError("empty p range for suite " + suite);
        return out_v;
    };
    const auto b_values = [&](const char* fallback) {
        return parse_rational_list(b_list.empty() ? fallback : b_list);
    };

    CheckTally tally;
    if (wants("vw")) {
        const auto bs = b_values("3/2,2,3,10");
        for (long p : p_values()) {
            run_check(tally, out, "vw p=" + std::to_string(p), [&] {
                vw_build(p);
                reflection_check(p);
            });
            for (const Rational& b : bs)
                run_check(tally, out,
                          "vw-signs p=" + std::to_string(p) + " b=" + to_string(b), [&] {
                              const VWPair vw = vw_build(p);
                              if (sign(vw.V(b)) >= 0)
                                  throw SignViolationError("V(b) is not negative");
                              if (sign(vw.W(b)) <= 0)
                                  throw SignViolationError("W(b) is not positive");
                          });
        }
    }
    if (wants("factor-signs")) {
        for (long n : n_values(1, 30)) {
            if (n >= 4)
                run_check(tally, out, "q-factor n=" + std::to_string(n),
                          [&] { q_factor(n); });
            run_check(tally, out, "s-factor n=" + std::to_string(n), [&] { s_factor(n); });
        }
    }
    if (wants("lemma5")) {
        for (long n : n_values(4, 40))
            run_check(tally, out, "lemma5 n=" + std::to_string(n), [&] {
                for (long j = 0; j <= n - 4; ++j) {
                    const auto [lhs, rhs] = lemma5_sum(n, j);
                    if (lhs != rhs)
                        throw MismatchError("fails at j = " + std::to_string(j));
                }
            });
    }
    if (wants("lemma6")) {
        for (long n : n_values(13, 40))
            run_check(tally, out, "lemma6 n=" + std::to_string(n), [&] {
                const Lemma6Result res = lemma6_root_count(n);
                if (res.root_bound != 1)
                    throw MismatchError("root bound " + std::to_string(res.root_bound) +
                                        ", expected 1");
            });
    }
    if (wants("l-poly")) {
        for (long n : n_values(4, 25))
            run_check(tally, out, "l-poly n=" + std::to_string(n), [&] { l_poly_check(n); });
    }
    if (wants("v1")) {
        for (long n : n_values(4, 25))
            run_check(tally, out, "v1 n=" + std::to_string(n),
                      [&] { v1_double_sum_check(n); });
    }
    if (wants("theorem1")) {
        const auto bs = b_values("3/2,2,3,10");
        for (long p : p_values())
            for (const Rational& b : bs)
                run_check(tally, out,
                          "theorem1 p=" + std::to_string(p) + " b=" + to_string(b), [&] {
                              const Theorem1Result res = theorem1_verify(p, b, tol);
                              if (!res.inside)
                                  throw SignViolationError("x1 escaped (1, b)");
                              if (p == -1) {
                                  const Rational want = reciprocal_pair_root(b);
                                  if (std::abs(res.x1 - to_double(want)) > 1e-9)
                                      throw MismatchError("closed form disagrees");
                              }
                          });
    }
    if (wants("derivative-tables")) {
        for (long n : n_values(9, 25))
            run_check(tally, out, "dv-table n=" + std::to_string(n),
                      [&] { derivative_table_v(n); });
        for (long n : n_values(2, 25))
            run_check(tally, out, "dk-table n=" + std::to_string(n),
                      [&] { derivative_table_k(n); });
    }

    out << tally.passed << " of " << (tally.passed + tally.failed) << " checks passed\n";
    if (tally.failed > 0) {
        err << tally.failed << " checks failed\n";
        return 1;
    }
    return 0;
}

inline int cmd_sweep(const std::string& specs_text, const std::string& r_text, double a,
                     const std::string& b_text, const std::string& format,
                     const std::string& out_path, int jobs, bool strict,
                     const std::string& demo, const Tolerances& tol, std::ostream& out,
                     std::ostream& err) {
    if (!demo.empty()) {
        if (demo != "nonreal-nodes") throw UsageError("unknown demo '" + demo + "'");
        const NonrealNodesDemo d = nonreal_nodes_demo();
        std::string text;
        text += "nodes: " + fmt(d.node_a) + "  and  " + fmt(d.node_b) + "\n";
        for (size_t i = 0; i < d.roots.size(); ++i)
            text += "root[" + std::to_string(i) + "] = " + fmt(d.roots[i]) + "\n";
        text += "node mean = " + fmt(d.node_mean) + "\n";
        text += "factored scale = " + fmt(d.factored_scale) + "\n";
        text += "max error = " + fmt(d.max_error) + "\n";
        emit(text, out_path, out);
        if (d.max_error > 1e-9) {
            err << "error: demo roots drifted beyond 1e-9\n";
            return 1;
        }
        return 0;
    }

    std::vector<FunctionSpec> specs;
    for (const std::string& token : split(specs_text, ','))
        specs.push_back(FunctionSpec::parse(token));
    std::vector<int> r_values;
    for (long r : parse_int_list(r_text)) r_values.push_back(static_cast<int>(r));
    const std::vector<double> b_grid = parse_grid(b_text);

    const SweepReport report = conjecture_sweep(specs, r_values, a, b_grid, jobs, tol);
    if (format == "csv")
        emit(to_csv(report), out_path, out);
    else
        emit(to_json(report).dump(2) + "\n", out_path, out);
    if (strict && report.summary.errors > 0) {
        err << "error: " << report.summary.errors << " sweep cases failed\n";
        return 1;
    }
    return 0;
}

}  // namespace cli_detail

// Full command-line front end; returns the process exit code (0 success,
// 1 computational failure, 2 usage error).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Means defined by intersection points of Taylor polynomials"};
    app.require_subcommand(1);

    std::string spec = "power:-1", format = "plain", out_path;
    int r = 3;
    double a = 1.0, b = 2.0;
    Tolerances tol;

    CLI::App* mean = app.add_subcommand("mean", "Solve the intersection points of P_a and P_b");
    mean->add_option("--f", spec, "function spec: power:<p> | exp | log")->required();
    mean->add_option("--r", r, "Taylor order (>= 1)")->required();
    mean->add_option("--a", a, "left endpoint");
    mean->add_option("--b", b, "right endpoint")->required();
    mean->add_option("--format", format, "plain | json | csv");
    mean->add_option("--out", out_path, "write the report to this file");
    mean->add_option("--residual-tol", tol.mean_residual, "normalized residual gate");
    mean->add_option("--pairing-tol", tol.pairing, "conjugate pairing tolerance");

    std::string suite, n_range, p_range, b_list;
    CLI::App* verify = app.add_subcommand("verify", "Run an exact verification suite");
    verify
        ->add_option("--suite", suite,
                     "vw | factor-signs | lemma5 | lemma6 | l-poly | v1 | theorem1 | "
                     "derivative-tables | all")
        ->required();
    verify->add_option("--n", n_range, "integer range lo..hi[:step] or comma list");
    verify->add_option("--p", p_range, "integer exponent range (0..3 auto-skipped)");
    verify->add_option("--b", b_list, "comma list of rationals, e.g. 3/2,2,10");

    std::string sweep_specs = "power:-1", r_text = "3", b_text = "2", demo;
    int jobs = cli_detail::default_jobs();
    bool strict = false;
    CLI::App* sweep = app.add_subcommand("sweep", "Conjecture sweep over a case grid");
    sweep->add_option("--f", sweep_specs, "comma list of function specs");
    sweep->add_option("--r", r_text, "comma list / range of Taylor orders");
    sweep->add_option("--a", a, "left endpoint");
    sweep->add_option("--b", b_text, "grid lo..hi[:step] or comma list");
    sweep->add_option("--format", format, "json | csv");
    sweep->add_option("--out", out_path, "write the report to this file");
    sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    sweep->add_flag("--strict", strict, "exit 1 if any case records an error");
    sweep->add_option("--demo", demo, "named demo: nonreal-nodes");

    std::vector<const char*> argv;
    argv.push_back("taylor-mean");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (mean->parsed())
            return cli_detail::cmd_mean(spec, r, a, b, format, out_path, tol, out, err);
        if (verify->parsed())
            return cli_detail::cmd_verify(suite, n_range, p_range, b_list, tol, out, err);
        if (sweep->parsed())
            return cli_detail::cmd_sweep(sweep_specs, r_text, a, b_text,
                                         format == "plain" ? "json" : format, out_path, jobs,
                                         strict, demo, tol, out, err);
        err << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace taylormeans
