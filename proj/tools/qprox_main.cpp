// Scenario-driven front end: run, sweep, validate, certify.
// Exit codes: 0 ok, 1 usage/config error, 2 max-iters, 3 step-failure,
// 4 refuted trap, 5 I/O error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "qprox/config.hpp"
#include "qprox/runner.hpp"
#include "qprox/trace_io.hpp"

namespace {

int load_config(const std::string& path, std::uint64_t* seed_override,
                qprox::ScenarioConfig& out) {
    std::string text;
    try {
        text = qprox::read_file(path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return static_cast<int>(qprox::ExitCode::io_error);
    }
    const qprox::ParseResult parsed = qprox::parse_config(text);
    if (!parsed.ok()) {
        for (const auto& err : parsed.errors)
            std::fprintf(stderr, "config error at %s: %s\n", err.path.c_str(), err.message.c_str());
        return static_cast<int>(qprox::ExitCode::config_error);
    }
    out = *parsed.config;
    if (seed_override) out.seed = *seed_override;
    return 0;
}

std::string resolve_out_dir(const std::string& flag_value, const qprox::ScenarioConfig& config) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("QPROX_OUT"); env && *env) return env;
    return config.out_dir;
}

std::size_t resolve_workers(std::size_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("QPROX_WORKERS"); env && *env) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized proximal runs over quasi-metric spaces"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir_flag;
    std::uint64_t seed_value = 0;
    bool seed_given = false;
    std::size_t workers_flag = 0;
    bool quiet = false;
    std::string trace_path;

    auto add_common = [&](CLI::App* cmd, bool needs_config = true) {
        auto* opt = cmd->add_option("--config", config_path, "scenario config file (JSON)");
        if (needs_config) opt->required();
        cmd->add_option("--seed", seed_value, "override the config seed")
            ->each([&](const std::string&) { seed_given = true; });
        cmd->add_option("--out", out_dir_flag, "output directory (overrides config and QPROX_OUT)");
        cmd->add_flag("--quiet", quiet, "suppress progress lines");
    };

    auto* cmd_run = app.add_subcommand("run", "run one scenario and write its artifacts");
    add_common(cmd_run);

    auto* cmd_sweep = app.add_subcommand("sweep", "run the sweep cross product");
    add_common(cmd_sweep);
    cmd_sweep->add_option("--workers", workers_flag, "concurrent scenario cap (or QPROX_WORKERS)");

    auto* cmd_validate = app.add_subcommand("validate", "parse and validate a config");
    add_common(cmd_validate);

    auto* cmd_certify =
        app.add_subcommand("certify", "re-certify the endpoint of an existing trace");
    add_common(cmd_certify);
    cmd_certify->add_option("--trace", trace_path, "trace.csv written by a previous run")->required();

    CLI11_PARSE(app, argc, argv);

    qprox::ScenarioConfig config;
    if (const int rc = load_config(config_path, seed_given ? &seed_value : nullptr, config); rc != 0) {
        if (app.got_subcommand(cmd_validate) && rc == static_cast<int>(qprox::ExitCode::config_error))
            return rc;
        return rc;
    }

    if (app.got_subcommand(cmd_validate)) {
        std::printf("ok\n");
        return 0;
    }

    try {
        if (app.got_subcommand(cmd_run)) {
            const auto result = qprox::run_scenario(config, resolve_out_dir(out_dir_flag, config), quiet);
            if (!quiet) std::printf("%s\n", result.message.c_str());
            return static_cast<int>(result.code);
        }
        if (app.got_subcommand(cmd_sweep)) {
            const auto code = qprox::run_sweep(config, resolve_out_dir(out_dir_flag, config),
                                               resolve_workers(workers_flag), quiet);
            return static_cast<int>(code);
        }
        if (app.got_subcommand(cmd_certify)) {
            const qprox::Objective f = qprox::build_objective(config.objective);
            const auto q = qprox::build_quasi_distance(config.quasi_distance, f.dimension);
            const auto gamma = qprox::build_gamma(config.gamma);
            const qprox::Point x_star =
                qprox::read_trace_final_point(qprox::read_file(trace_path), f.dimension);
            const double lambda_star =
                config.certify.lambda_star_factor * config.solver.lambda_lo;
            qprox::CertifySettings settings;
            settings.count = config.certify.samples;
            settings.radii = config.certify.radii;
            settings.shell_seed =
                qprox::derive_seed(config.seed, qprox::seed_stream::certify_shell);
            qprox::PointSampler sampler = qprox::make_box_sampler(
                f.box, qprox::derive_seed(config.seed, qprox::seed_stream::certify_box));
            const auto cert =
                qprox::certify_trap(f, *q, *gamma, lambda_star, x_star, sampler, settings);
            const std::string text = qprox::certificate_text(cert);
            std::fputs(text.c_str(), stdout);
            const std::string dir = resolve_out_dir(out_dir_flag, config);
            std::filesystem::create_directories(dir);
            qprox::write_file((std::filesystem::path(dir) / "certificate.txt").string(), text);
            return cert.kind == qprox::TrapKind::refuted
                       ? static_cast<int>(qprox::ExitCode::refuted_trap)
                       : 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return static_cast<int>(qprox::ExitCode::config_error);
    }
    return 0;
}
