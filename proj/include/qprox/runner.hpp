#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "qprox/config.hpp"
#include "qprox/objective.hpp"
#include "qprox/solver.hpp"
#include "qprox/trace_io.hpp"
#include "qprox/traps.hpp"

namespace qprox {

/// Documented process exit codes; every terminal status maps to exactly one.
enum class ExitCode : int {
    ok = 0,            // converged, endpoint certificate strong or weak
    config_error = 1,  // bad usage / invalid config
    max_iters = 2,
    step_failure = 3,
    refuted_trap = 4,  // converged but a worthwhile move away was sampled
    io_error = 5,
};

struct ScenarioResult {
    ExitCode code = ExitCode::ok;
    Trace trace;
    TrapCertificate certificate;
    double lambda_star = 0.0;
    std::string message;
};

// randomness streams derived from the config seed
namespace seed_stream {
constexpr std::uint64_t lambda = 1;
constexpr std::uint64_t certify_box = 2;
constexpr std::uint64_t certify_shell = 3;
constexpr std::uint64_t kl = 4;
}  // namespace seed_stream

/// Optional KL check at the converged point, reported in the summary.
inline std::string kl_summary_line(const ScenarioConfig& config, const Objective& f,
                                   const Trace& trace) {
    if (!config.kl || trace.records.empty()) return "";
    KLDescriptor desc;
    desc.theta = config.kl->theta;
    desc.c = config.kl->c;
    desc.eta = config.kl->eta;
    desc.x_ref = trace.final_point;
    PointSampler sampler = make_box_sampler(f.box, derive_seed(config.seed, seed_stream::kl));
    const KLReport rep = kl_empirical_check(f, desc, sampler, 10000);
    std::string status = rep.status == KLStatus::pass          ? "pass"
                         : rep.status == KLStatus::fail        ? "fail"
                                                               : "inconclusive";
    return "kl_check: " + status + " min_statistic=" + fmt_double(rep.min_statistic) +
           " in_band=" + std::to_string(rep.in_band) + "\n";
}

/// Run one scenario end to end and write its artifacts (trace.csv,
/// summary.txt, certificate.txt, habituation.txt, rate.csv) into out_dir.
inline ScenarioResult run_scenario(const ScenarioConfig& config, const std::string& out_dir,
                                   bool quiet = true) {
    ScenarioResult result;

    const Objective f = build_objective(config.objective);
    const auto q = build_quasi_distance(config.quasi_distance, f.dimension);
    const auto gamma = build_gamma(config.gamma);
    SolverConfig solver_cfg = build_solver_config(config.solver);
    solver_cfg.lambda_schedule.seed = derive_seed(config.seed, seed_stream::lambda);
    const Regime regime = parse_regime(config.solver.regime);

    result.trace = run(regime, f, *q, *gamma, solver_cfg, config.x0);

    // endpoint certification at lambda_star = factor * tail lambda
    const double lambda_inf = result.trace.lambda_infinity();
    result.lambda_star = std::isfinite(lambda_inf) && lambda_inf > 0.0
                             ? config.certify.lambda_star_factor * lambda_inf
                             : config.certify.lambda_star_factor * solver_cfg.lambda_lo;
    CertifySettings cert_settings;
    cert_settings.count = config.certify.samples;
    cert_settings.radii = config.certify.radii;
    cert_settings.shell_seed = derive_seed(config.seed, seed_stream::certify_shell);
    PointSampler box_sampler = make_box_sampler(f.box, derive_seed(config.seed, seed_stream::certify_box));
    const TrapReport trap =
        variational_trap_report(result.trace, f, *q, *gamma, result.lambda_star, box_sampler,
                                cert_settings);
    result.certificate = trap.endpoint;

    const HabituationProfile hab = habituation_profile(result.trace, solver_cfg.step_tol);
    const RateData rate = emit_rate_data(result.trace);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        result.code = ExitCode::io_error;
        result.message = "cannot create output directory " + out_dir + ": " + ec.message();
        return result;
    }
    try {
        const auto dir = std::filesystem::path(out_dir);
        write_file((dir / "trace.csv").string(), trace_csv(result.trace, f.dimension));
        write_file((dir / "summary.txt").string(),
                   summary_text(result.trace, *gamma, config.x0, f.value(config.x0)) +
                       "path_ok: " + (trap.path_ok ? std::string("1") : std::string("0")) + "\n" +
                       "lambda_star: " + fmt_double(result.lambda_star) + "\n" +
                       kl_summary_line(config, f, result.trace));
        write_file((dir / "certificate.txt").string(), certificate_text(result.certificate));
        write_file((dir / "habituation.txt").string(), habituation_text(hab, solver_cfg.step_tol));
        write_file((dir / "rate.csv").string(), rate_csv(rate));
    } catch (const std::exception& e) {
        result.code = ExitCode::io_error;
        result.message = e.what();
        return result;
    }

    switch (result.trace.status) {
        case TerminationStatus::converged:
            result.code = result.certificate.kind == TrapKind::refuted ? ExitCode::refuted_trap
                                                                       : ExitCode::ok;
            break;
        case TerminationStatus::max_iters:
            result.code = ExitCode::max_iters;
            break;
        case TerminationStatus::step_failure:
            result.code = ExitCode::step_failure;
            break;
    }
    result.message = std::string(to_string(result.trace.status)) + ", endpoint " +
                     to_string(result.certificate.kind);
    if (!quiet) std::printf("%s: %s\n", out_dir.c_str(), result.message.c_str());
    return result;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

/// Expand the sweep axes into concrete single-run configs. Each run gets a
/// deterministic seed derived from (config.seed, run index).
inline std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& base) {
    if (!base.sweep) return {base};
    const auto& sw = *base.sweep;
    const auto alphas = sw.alphas.empty() ? std::vector<double>{base.gamma.alpha} : sw.alphas;
    const auto sigmas = sw.sigmas.empty() ? std::vector<double>{base.solver.sigma} : sw.sigmas;
    const auto lambdas = sw.lambdas.empty() ? std::vector<double>{0.0} : sw.lambdas;
    const auto x0s = sw.x0s.empty() ? std::vector<Point>{base.x0} : sw.x0s;

    std::vector<ScenarioConfig> runs;
    std::uint64_t index = 0;
    for (double alpha : alphas)
        for (double sigma : sigmas)
            for (double lambda : lambdas)
                for (const auto& x0 : x0s) {
                    ScenarioConfig c = base;
                    c.sweep.reset();
                    c.gamma.alpha = alpha;
                    c.solver.sigma = sigma;
                    if (!sw.lambdas.empty()) {
                        c.solver.lambda_lo = lambda;
                        c.solver.lambda_hi = lambda;
                        c.solver.lambda_schedule.kind = "constant";
                        c.solver.lambda_schedule.value = lambda;
                        c.solver.lambda_schedule.values.clear();
                    }
                    c.x0 = x0;
                    c.seed = derive_seed(base.seed, 1000 + index);
                    runs.push_back(std::move(c));
                    ++index;
                }
    return runs;
}

/// Run the sweep cross product; each run owns its own output subdirectory
/// and nothing mutable is shared, so runs execute concurrently up to the
/// worker cap.
inline ExitCode run_sweep(const ScenarioConfig& base, const std::string& out_dir,
                          std::size_t workers, bool quiet = true) {
    const std::vector<ScenarioConfig> runs = expand_sweep(base);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) return ExitCode::io_error;

    std::string manifest = "run,dir,alpha,sigma,lambda_lo,lambda_hi,x0,seed\n";
    std::vector<std::string> dirs(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "run%03zu", i);
        dirs[i] = (std::filesystem::path(out_dir) / name).string();
        manifest += std::to_string(i) + "," + name + "," + fmt_double(runs[i].gamma.alpha) + "," +
                    fmt_double(runs[i].solver.sigma) + "," + fmt_double(runs[i].solver.lambda_lo) +
                    "," + fmt_double(runs[i].solver.lambda_hi) + "," + fmt_point(runs[i].x0, ';') +
                    "," + std::to_string(runs[i].seed) + "\n";
    }
    try {
        write_file((std::filesystem::path(out_dir) / "manifest.csv").string(), manifest);
    } catch (const std::exception&) {
        return ExitCode::io_error;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<int> worst{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= runs.size()) break;
            ScenarioResult res;
            try {
                res = run_scenario(runs[i], dirs[i], quiet);
            } catch (const std::exception& e) {
                res.code = ExitCode::config_error;
                res.message = e.what();
            }
            int code = static_cast<int>(res.code);
            int cur = worst.load();
            while (code > cur && !worst.compare_exchange_weak(cur, code)) {
            }
        }
    };
    const std::size_t pool = std::max<std::size_t>(1, std::min(workers, runs.size()));
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (std::size_t t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return static_cast<ExitCode>(worst.load());
}

}  // namespace qprox
