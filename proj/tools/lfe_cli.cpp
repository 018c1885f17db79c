// Command-line surface: evaluate central values, tabulate the cutoff
// function, run the bound-verification sweeps, diagnose coefficient data,
// and export the pinned fixtures.  Results go to standard output as JSON;
// tables go to --out as CSV.  Exit codes: 0 success, 1 validation error,
// 2 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfe/archimedean.hpp"
#include "lfe/cutoff.hpp"
#include "lfe/evaluator.hpp"
#include "lfe/io.hpp"
#include "lfe/oracles.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lfe::ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_grid(const std::string& text) {
    // start:stop:log|lin:count
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4)
        throw lfe::ValidationError("grid spec must be start:stop:log|lin:count");
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const bool logspace = parts[2] == "log";
    if (!logspace && parts[2] != "lin")
        throw lfe::ValidationError("grid spacing must be 'log' or 'lin'");
    const int count = std::stoi(parts[3]);
    if (count < 2 || !(start < stop) || (logspace && !(start > 0.0)))
        throw lfe::ValidationError("grid spec out of range");
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double u = static_cast<double>(i) / (count - 1);
        xs[static_cast<std::size_t>(i)] =
            logspace ? start * std::pow(stop / start, u) : start + (stop - start) * u;
    }
    return xs;
}

lfe::TruncationPolicy make_policy(const lfe::LFunctionInstance& inst, std::int64_t terms,
                                  const std::string& mode, double eps) {
    lfe::TruncationPolicy tp;
    tp.eps = eps;
    if (mode == "power") {
        tp.mode = lfe::TruncationMode::conductor_power;
    } else if (mode == "fixed") {
        tp.mode = lfe::TruncationMode::fixed_length;
        tp.hard_cap = terms > 0 ? terms
                                : std::min<std::int64_t>(
                                      8000, inst.coefficients->declared_length());
    } else {
        throw lfe::ValidationError("--mode must be 'fixed' or 'power'");
    }
    return tp;
}

ordered_json complex_json(const lfe::Complex& z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

int run(int argc, char** argv) {
    CLI::App app{"central-value engine for principal L-functions"};
    app.require_subcommand(1);

    std::string instance_path, out_path, grid_spec, method = "exact", mode = "fixed";
    double kernel_a = 0.25, eps = 0.1, t_shift = 0.0, sigma = 0.0, step = 0.0, tol = 1e-12;
    std::int64_t terms = 0;
    double t_max = 200.0;
    int sweep_points = 801;
    std::int64_t growth_x = 0;
    std::string fixtures_dir = ".";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--instance", instance_path, "instance JSON file")->required();
        cmd->add_option("--kernel-a", kernel_a, "Gaussian kernel width (default 1/4)");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate L(1/2) or L(1/2+it)");
    add_common(eval_cmd);
    eval_cmd->add_option("--method", method, "exact | explicit");
    eval_cmd->add_option("--eps", eps, "truncation exponent / error-term epsilon");
    eval_cmd->add_option("--t", t_shift, "critical-line shift t");
    eval_cmd->add_option("--terms", terms, "fixed number of terms (0 = auto)");
    eval_cmd->add_option("--mode", mode, "truncation mode: fixed | power");
    eval_cmd->add_option("--sigma", sigma, "contour abscissa (0 = default)");
    eval_cmd->add_option("--step", step, "contour step (0 = default)");
    eval_cmd->add_option("--tol", tol, "contour tolerance");

    CLI::App* tab_cmd = app.add_subcommand("tabulate-f", "tabulate the cutoff function");
    add_common(tab_cmd);
    tab_cmd->add_option("--x", grid_spec, "grid start:stop:log|lin:count")->required();
    tab_cmd->add_option("--out", out_path, "CSV output path")->required();
    tab_cmd->add_option("--sigma", sigma, "contour abscissa (0 = default)");
    tab_cmd->add_option("--step", step, "contour step (0 = default)");
    tab_cmd->add_option("--tol", tol, "contour tolerance");

    CLI::App* bounds_cmd =
        app.add_subcommand("check-bounds", "growth and small-shift bound sweeps");
    add_common(bounds_cmd);
    bounds_cmd->add_option("--t-max", t_max, "sweep half-range");
    bounds_cmd->add_option("--points", sweep_points, "sweep grid points");

    CLI::App* diag_cmd = app.add_subcommand("diagnose", "coefficient and instance diagnostics");
    add_common(diag_cmd);
    diag_cmd->add_option("--x", growth_x, "growth-diagnostic prefix length (0 = all)");
    diag_cmd->add_option("--eps", eps, "growth-diagnostic epsilon");

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "fixture utilities");
    CLI::App* export_cmd = fixtures_cmd->add_subcommand("export", "write pinned fixture JSON");
    export_cmd->add_option("--dir", fixtures_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (eval_cmd->parsed()) {
        const lfe::LFunctionInstance inst = lfe::parse_instance(read_file(instance_path));
        const lfe::KernelParams kp{kernel_a};
        const lfe::TruncationPolicy tp = make_policy(inst, terms, mode, eps);
        lfe::ContourSpec cs = lfe::ContourSpec::for_instance(inst, kp, tol);
        if (sigma != 0.0) cs.sigma = sigma;
        if (step > 0.0) cs.step = step;
        lfe::CentralValueResult result;
        if (method == "explicit") {
            if (t_shift != 0.0)
                throw lfe::ValidationError("--t with --method explicit is not supported; "
                                           "twist the instance instead");
            result = lfe::central_value_explicit(inst, kp, tp);
        } else if (method == "exact") {
            result = t_shift == 0.0 ? lfe::central_value_exact(inst, kp, cs, tp)
                                    : lfe::critical_line_value(inst, t_shift, kp, cs, tp);
        } else {
            throw lfe::ValidationError("--method must be 'exact' or 'explicit'");
        }
        std::cout << lfe::serialize_result(result);
        return 0;
    }

    if (tab_cmd->parsed()) {
        const lfe::LFunctionInstance inst = lfe::parse_instance(read_file(instance_path));
        const lfe::KernelParams kp{kernel_a};
        lfe::ContourSpec cs = lfe::ContourSpec::for_instance(inst, kp, tol);
        if (sigma != 0.0) cs.sigma = sigma;
        if (step > 0.0) cs.step = step;
        const lfe::CutoffFunction cf(inst, kp, cs);
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw lfe::ValidationError("cannot open output file: " + out_path);
        out << "x,re_f,im_f,abs_f,quad_error\n";
        for (double x : parse_grid(grid_spec)) {
            const lfe::CutoffEvaluation fe = cf.value(x);
            out << lfe::format_double(x) << ',' << lfe::format_double(fe.value.real()) << ','
                << lfe::format_double(fe.value.imag()) << ','
                << lfe::format_double(std::abs(fe.value)) << ','
                << lfe::format_double(fe.quad_error_estimate) << '\n';
        }
        return 0;
    }

    if (bounds_cmd->parsed()) {
        const lfe::LFunctionInstance inst = lfe::parse_instance(read_file(instance_path));
        ordered_json report;
        report["label"] = inst.label;
        report["C"] = lfe::analytic_conductor(inst);
        report["eta"] = lfe::eta_min(inst);
        report["growth_sweeps"] = ordered_json::array();
        for (double sg : {-0.15, 0.0, 0.15}) {
            const lfe::EvaluationStrip strip = lfe::evaluation_strip(inst);
            const double sg_used =
                sg == 0.0 ? 0.0 : std::clamp(sg, strip.sigma_min + 1e-6, strip.sigma_max - 1e-6);
            const lfe::GrowthSweepReport sweep =
                lfe::vertical_growth_sweep(inst, sg_used, t_max, sweep_points);
            report["growth_sweeps"].push_back(ordered_json{{"sigma", sg_used},
                                                           {"max_normalized", sweep.max_normalized},
                                                           {"t_at_max", sweep.t_at_max}});
        }
        report["small_shift"] = ordered_json::array();
        for (double t : {0.0, 0.01, 0.05, 0.1}) {
            const lfe::SmallShiftReport r = lfe::small_shift_deviation(inst, t);
            report["small_shift"].push_back(
                ordered_json{{"t", t}, {"deviation", r.deviation}, {"bound", r.bound}});
        }
        std::cout << report.dump(2) << "\n";
        return 0;
    }

    if (diag_cmd->parsed()) {
        const lfe::LFunctionInstance inst = lfe::parse_instance(read_file(instance_path));
        const std::int64_t x =
            growth_x > 0 ? growth_x : inst.coefficients->declared_length();
        const lfe::CoefficientGrowthReport growth =
            lfe::coefficient_growth_diagnostic(*inst.coefficients, x, eps);
        ordered_json report;
        report["label"] = inst.label;
        report["C"] = lfe::analytic_conductor(inst);
        report["eta"] = lfe::eta_min(inst);
        const lfe::EvaluationStrip strip = lfe::evaluation_strip(inst);
        report["strip"] = ordered_json{{"sigma_min", strip.sigma_min},
                                       {"sigma_max", strip.sigma_max}};
        report["coefficient_growth"] = ordered_json{{"x", x},
                                                    {"partial_sum", growth.partial_sum},
                                                    {"reference", growth.reference},
                                                    {"ratio", growth.ratio}};
        const lfe::Complex a1 = inst.coefficients->at(1);
        report["a1"] = complex_json(a1);
        report["a1_normalized"] = std::abs(a1 - lfe::Complex{1.0, 0.0}) <= 1e-9;
        std::cout << report.dump(2) << "\n";
        return 0;
    }

    if (export_cmd->parsed()) {
        for (const lfe::oracles::FixtureSpec& fs : lfe::oracles::builtin_fixture_names()) {
            const lfe::LFunctionInstance inst = lfe::oracles::builtin_fixture(fs.name);
            const std::string path = fixtures_dir + "/" + fs.name + ".json";
            std::ofstream out(path, std::ios::binary);
            if (!out) throw lfe::ValidationError("cannot open output file: " + path);
            out << lfe::serialize_instance(inst);
            std::cout << path << "\n";
        }
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lfe::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const lfe::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
