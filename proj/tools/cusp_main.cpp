// Command-line front end: classify cusp singularities of plane parametric
// curves at t = 0, compute evolute chains of fronts, plot them as SVG and
// run the randomized invariance suites.
//
//   cusp classify <x> <y>
//   cusp evolute  <x> <y> -m M
//   cusp plot     <x> <y> -m M --range a,b --samples S --out file.svg
//   cusp property --seed S --trials T
//
// Exit codes: 0 success, 1 usage/parse error, 2 violated mathematical
// precondition, 3 property-suite failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "cusp/commands.hpp"

namespace {

int finish(const cusp::CommandResult& res, const std::string& out_path) {
    if (!res.svg.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output file '" << out_path << "'\n";
            return 1;
        }
        out << res.svg;
    }
    std::cout << res.report.dump(2) << "\n";
    return res.exit_code;
}

bool parse_range(const std::string& text, cusp::RunConfig& cfg) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return false;
    try {
        cfg.t_min = std::stod(text.substr(0, comma));
        cfg.t_max = std::stod(text.substr(comma + 1));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cusp classifier and evolute toolkit for plane parametric curves"};
    app.require_subcommand(1);

    cusp::RunConfig cfg;
    std::string x_expr, y_expr, range_text;
    int m = cfg.max_evolute;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--order", cfg.order, "jet truncation order");
        cmd->add_option("--backend", cfg.backend, "coefficient backend: rational or float");
        cmd->add_option("--tol", cfg.tol, "relative zero tolerance for the float backend");
    };
    auto add_curve = [&](CLI::App* cmd) {
        cmd->add_option("x", x_expr, "x(t) expression")->required();
        cmd->add_option("y", y_expr, "y(t) expression")->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "classify the singularity at t = 0");
    add_curve(classify);
    add_common(classify);
    classify->add_option("--fact22-max-n", cfg.fact22_max_n, "largest n tried for the sufficient (2,n) criterion");

    CLI::App* evolute = app.add_subcommand("evolute", "compute the evolute chain Ev^0..Ev^m");
    add_curve(evolute);
    add_common(evolute);
    evolute->add_option("-m,--max-evolute", m, "number of evolute levels");

    CLI::App* plot = app.add_subcommand("plot", "render the curve and its evolutes as SVG");
    add_curve(plot);
    add_common(plot);
    plot->add_option("-m,--max-evolute", m, "number of evolute levels");
    plot->add_option("--range", range_text, "parameter range a,b");
    plot->add_option("--samples", cfg.samples, "sample count");
    plot->add_option("--out", cfg.out_path, "output SVG path");

    CLI::App* property = app.add_subcommand("property", "run the randomized invariance suites");
    property->add_option("--seed", cfg.seed, "random seed");
    property->add_option("--trials", cfg.trials, "trials per suite");
    property
        ->add_flag("--corrupt-77", cfg.corrupt77,
                   "negative control: corrupt the B^2 weight so the normal-form suite must fail")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (!range_text.empty() && !parse_range(range_text, cfg)) {
        std::cerr << "invalid --range, expected 'a,b'\n";
        return 1;
    }

    if (classify->parsed()) return finish(cusp::cmd_classify(x_expr, y_expr, cfg), cfg.out_path);
    if (evolute->parsed()) return finish(cusp::cmd_evolute(x_expr, y_expr, m, cfg), cfg.out_path);
    if (plot->parsed()) return finish(cusp::cmd_plot(x_expr, y_expr, m, cfg), cfg.out_path);
    if (property->parsed()) return finish(cusp::cmd_property(cfg), cfg.out_path);
    return 1;
}
