// Command-line surface over the map laboratory: configures a (model, gauge)
// pair, runs certificates, and emits JSON/CSV reports.
//
// Exit codes: 0 success, 1 property failure, 2 configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "nonopen/runner.hpp"

namespace {

using nonopen::json;
using nonopen::RunConfig;
using nonopen::RunOutput;
using nonopen::Vector;

Vector load_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nonopen::parameter_error("cannot open vector file: " + path);
    json j;
    in >> j;
    return nonopen::vector_from_json(j);
}

void emit(const RunOutput& out, const std::string& out_path, const std::string& format) {
    if (format == "csv" && out.csv.empty())
        throw nonopen::parameter_error("this command has no CSV representation");
    const std::string text = format == "csv" ? out.csv : out.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw nonopen::parameter_error("cannot open output file: " + out_path);
        f << text;
    }
}

struct Cli {
    RunConfig cfg;
    std::string out_path;
    std::string format = "json";
    std::string config_path;

    void add_common(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file; flags override its fields");
        cmd->add_option("--model", cfg.model,
                        "l2_weighted|lp_seq|linf_dyadic|c0_dyadic|lp_grid|weaksep");
        cmd->add_option("--gauge", cfg.gauge,
                        "weighted_l2|dyadic|lq_even|l5_odd|grid_square|weaksep");
        cmd->add_option("--p", cfg.p, "sequence/grid exponent p");
        cmd->add_option("--q", cfg.q, "even exponent for the lq_even gauge");
        cmd->add_option("--power", cfg.power, "gauge power m (gauge used as G^m)");
        cmd->add_option("--cells", cfg.cells, "grid cell count M");
        cmd->add_option("--family", cfg.family, "coordinate|dual_eval");
        cmd->add_option("--s", cfg.s, "weak-norm exponent; must equal the gauge degree");
        cmd->add_option("--seed", cfg.seed, "RNG seed; fully determines sampling");
        cmd->add_option("--samples", cfg.samples, "sample count per property");
        cmd->add_option("--tol-fd", cfg.tol_fd, "finite-difference tolerance");
        cmd->add_option("--tol-solve", cfg.tol_solve, "solve residual tolerance");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        cmd->add_option("--format", format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
    }

    void merge_config_file(const CLI::App* cmd) {
        if (config_path.empty()) return;
        std::ifstream in(config_path);
        if (!in) throw nonopen::config_error("cannot open config file: " + config_path);
        json j;
        in >> j;
        RunConfig from_file = RunConfig::from_json(j);
        // flags given on the command line win over the file
        const auto keep = [&](const std::string& flag) { return cmd->count(flag) > 0; };
        if (!keep("--model")) cfg.model = from_file.model;
        if (!keep("--gauge")) cfg.gauge = from_file.gauge;
        if (!keep("--p")) cfg.p = from_file.p;
        if (!keep("--q")) cfg.q = from_file.q;
        if (!keep("--power")) cfg.power = from_file.power;
        if (!keep("--cells")) cfg.cells = from_file.cells;
        if (!keep("--family")) cfg.family = from_file.family;
        if (!keep("--s")) cfg.s = from_file.s;
        if (!keep("--seed")) cfg.seed = from_file.seed;
        if (!keep("--samples")) cfg.samples = from_file.samples;
        if (!keep("--tol-fd")) cfg.tol_fd = from_file.tol_fd;
        if (!keep("--tol-solve")) cfg.tol_solve = from_file.tol_solve;
    }
};

void print_models_table(const RunOutput& out) {
    for (const auto& row : out.report.at("rows")) {
        std::cout << row.at("model").get<std::string>() << " / "
                  << row.at("gauge").get<std::string>() << " / "
                  << row.at("notes").get<std::string>() << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for non-open C1 maps F(x) = exp(-1/G(x)) x"};
    app.require_subcommand(1);

    Cli cli;

    auto* models = app.add_subcommand("models", "list the built-in (model, gauge) pairings");
    bool models_json = false;
    models->add_flag("--json", models_json, "emit JSON instead of the table");

    auto* eval = app.add_subcommand("eval", "apply F to a vector");
    std::string eval_x;
    eval->add_option("x", eval_x, "vector JSON file")->required();
    cli.add_common(eval);

    auto* gradcheck =
        app.add_subcommand("gradcheck", "finite-difference validation of the derivatives");
    cli.add_common(gradcheck);

    auto* solve = app.add_subcommand("solve", "solve J_F(x) h = y in closed form");
    std::string solve_x, solve_y;
    solve->add_option("x", solve_x, "base point JSON file")->required();
    solve->add_option("y", solve_y, "right-hand side JSON file")->required();
    cli.add_common(solve);

    auto* invert = app.add_subcommand("invert", "radial inversion of F");
    std::string invert_y;
    invert->add_option("y", invert_y, "target vector JSON file")->required();
    cli.add_common(invert);

    auto* nonopen_cmd =
        app.add_subcommand("nonopen", "gamma table and inverse blow-up divergence report");
    std::uint64_t n_max = 100;
    nonopen_cmd->add_option("--n-max", n_max, "run n = 1..n_max");
    cli.add_common(nonopen_cmd);

    auto* certify = app.add_subcommand("certify", "no-preimage certificate for (delta/2) y");
    double delta = 0.0;
    std::string certify_y;
    certify->add_option("--delta", delta, "delta in (0,1)")->required();
    certify->add_option("y", certify_y, "unit vector JSON file")->required();
    cli.add_common(certify);

    auto* report = app.add_subcommand("report", "run every certificate battery");
    cli.add_common(report);

    CLI11_PARSE(app, argc, argv);

    try {
        RunOutput out;
        if (models->parsed()) {
            out = nonopen::run_models();
            if (!models_json) {
                print_models_table(out);
                return 0;
            }
        } else if (eval->parsed()) {
            cli.merge_config_file(eval);
            out = nonopen::run_eval(cli.cfg, load_vector(eval_x));
        } else if (gradcheck->parsed()) {
            cli.merge_config_file(gradcheck);
            out = nonopen::run_gradcheck(cli.cfg);
        } else if (solve->parsed()) {
            cli.merge_config_file(solve);
            out = nonopen::run_solve(cli.cfg, load_vector(solve_x), load_vector(solve_y));
        } else if (invert->parsed()) {
            cli.merge_config_file(invert);
            out = nonopen::run_invert(cli.cfg, load_vector(invert_y));
        } else if (nonopen_cmd->parsed()) {
            cli.merge_config_file(nonopen_cmd);
            out = nonopen::run_nonopen(cli.cfg, n_max);
        } else if (certify->parsed()) {
            cli.merge_config_file(certify);
            out = nonopen::run_certify(cli.cfg, delta, load_vector(certify_y));
        } else if (report->parsed()) {
            cli.merge_config_file(report);
            out = nonopen::run_report(cli.cfg);
        }
        emit(out, cli.out_path, cli.format);
        return out.exit_code;
    } catch (const nonopen::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const nonopen::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const nonopen::representation_error& e) {
        std::cerr << "representation error: " << e.what() << "\n";
        return 2;
    } catch (const nonopen::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
