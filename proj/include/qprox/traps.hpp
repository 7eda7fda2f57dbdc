#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qprox/objective.hpp"
#include "qprox/quasi_metric.hpp"
#include "qprox/resistance.hpp"
#include "qprox/rng.hpp"
#include "qprox/solver.hpp"

namespace qprox {

// ---------------------------------------------------------------------------
// Worthwhile-change test
// ---------------------------------------------------------------------------

struct WorthwhileResult {
    bool worthwhile = false;
    double margin = 0.0;  // f(x) - f(y) - lambda*G[q(x,y)]
};

/// A move x -> y is worthwhile at ratio lambda when the payoff improvement
/// covers lambda times the relative resistance: f(x) - f(y) >= lambda*G[q(x,y)].
/// Staying (y = x) is always weakly worthwhile since G[0] = 0.
inline WorthwhileResult is_worthwhile_change(const Objective& f, const QuasiDistance& q,
                                             const ResistanceCurve& gamma, double lambda,
                                             const Point& x, const Point& y) {
    if (!(lambda > 0.0)) throw std::invalid_argument("is_worthwhile_change: requires lambda > 0");
    const double margin = f.value(x) - f.value(y) - lambda * gamma.gamma(q.evaluate(x, y));
    return {margin >= 0.0, margin};
}

// ---------------------------------------------------------------------------
// Variational-trap certification
// ---------------------------------------------------------------------------

enum class TrapKind { strong, weak, refuted };

inline const char* to_string(TrapKind k) {
    switch (k) {
        case TrapKind::strong: return "strong";
        case TrapKind::weak: return "weak";
        case TrapKind::refuted: return "refuted";
    }
    return "unknown";
}

/// Sampled evidence about the trap status of a point: over every sampled y,
/// is any move from x_star worthwhile at ratio lambda_star? Evidence over
/// the sampled set only, not a proof over all of X.
struct TrapCertificate {
    Point point;
    double lambda_star = 0.0;
    TrapKind kind = TrapKind::refuted;
    std::size_t samples = 0;
    double worst_violation = -std::numeric_limits<double>::infinity();
    std::optional<Point> witness;  // a worthwhile move away, when refuted
};

struct CertifySettings {
    std::size_t count = 10000;
    std::vector<double> radii = {1e-4, 1e-2, 1e-1, 1.0};  // shells around x_star
    std::uint64_t shell_seed = 1;
};

/// Evaluate f(x*) - f(y) - lambda*G[q(x*,y)] over box samples plus dense
/// shells around x_star. Strong: strictly negative everywhere sampled
/// (beyond the discrimination gap); weak: nonpositive up to tolerance;
/// otherwise refuted with the worst sample as witness.
inline TrapCertificate certify_trap(const Objective& f, const QuasiDistance& q,
                                    const ResistanceCurve& gamma, double lambda_star,
                                    const Point& x_star, PointSampler& sampler,
                                    const CertifySettings& settings = {}) {
    if (!(lambda_star > 0.0)) throw std::invalid_argument("certify_trap: requires lambda_star > 0");
    require_dimension(x_star, f.dimension, "certify_trap x_star");

    TrapCertificate cert;
    cert.point = x_star;
    cert.lambda_star = lambda_star;

    const double f_star = f.value(x_star);
    const double tol = 1e-10 * (1.0 + std::abs(f_star));

    auto consider = [&](const Point& y) {
        if (y == x_star) return;
        ++cert.samples;
        const double violation = f_star - f.value(y) - lambda_star * gamma.gamma(q.evaluate(x_star, y));
        if (violation > cert.worst_violation) {
            cert.worst_violation = violation;
            if (violation > tol) cert.witness = y;
        }
    };

    const std::size_t box_budget = settings.count / 2;
    for (std::size_t i = 0; i < box_budget; ++i) consider(sampler());

    std::mt19937_64 shell_engine(settings.shell_seed);
    if (!settings.radii.empty()) {
        const std::size_t per_shell =
            std::max<std::size_t>(1, (settings.count - box_budget) / settings.radii.size());
        for (double radius : settings.radii) {
            for (std::size_t i = 0; i < per_shell; ++i) {
                const Point d = random_direction(shell_engine, f.dimension);
                Point y(f.dimension);
                for (std::size_t j = 0; j < y.size(); ++j) y[j] = x_star[j] + radius * d[j];
                consider(f.box.clamp(std::move(y)));
            }
        }
    }

    if (cert.worst_violation < -tol)
        cert.kind = TrapKind::strong;
    else if (cert.worst_violation <= tol)
        cert.kind = TrapKind::weak;
    else
        cert.kind = TrapKind::refuted;
    return cert;
}

// ---------------------------------------------------------------------------
// Habituation diagnostics
// ---------------------------------------------------------------------------

enum class HabituationClass { habituating, oscillating, stalled };

inline const char* to_string(HabituationClass c) {
    switch (c) {
        case HabituationClass::habituating: return "habituating";
        case HabituationClass::oscillating: return "oscillating";
        case HabituationClass::stalled: return "stalled";
    }
    return "unknown";
}

struct HabituationProfile {
    std::vector<double> q_steps;
    HabituationClass classification = HabituationClass::stalled;
    double tail_max = 0.0;  // max q_step over the last 10 records
    bool monotone_f = true;
};

/// The step quasi-distances of a trace and whether they die out: a process
/// habituates when the tail of q(x_k, x_{k+1}) falls below step_tol.
inline HabituationProfile habituation_profile(const Trace& trace, double step_tol) {
    if (trace.records.empty()) throw std::invalid_argument("habituation_profile: empty trace");
    HabituationProfile prof;
    prof.q_steps.reserve(trace.records.size());
    for (const auto& rec : trace.records) {
        prof.q_steps.push_back(rec.q_step);
        if (rec.f_next > rec.f_k + certification_slack(rec.f_k)) prof.monotone_f = false;
    }

    const std::size_t n = prof.q_steps.size();
    const std::size_t tail = std::min<std::size_t>(10, n);
    prof.tail_max = 0.0;
    for (std::size_t i = n - tail; i < n; ++i) prof.tail_max = std::max(prof.tail_max, prof.q_steps[i]);

    if (prof.tail_max <= step_tol) {
        prof.classification = HabituationClass::habituating;
    } else {
        // no decay relative to the head -> oscillating; decayed but still
        // above the threshold -> stalled
        const std::size_t head = std::min<std::size_t>(10, n);
        double head_max = 0.0;
        for (std::size_t i = 0; i < head; ++i) head_max = std::max(head_max, prof.q_steps[i]);
        prof.classification = prof.tail_max > 0.5 * head_max ? HabituationClass::oscillating
                                                             : HabituationClass::stalled;
    }
    return prof;
}

// ---------------------------------------------------------------------------
// Combined report
// ---------------------------------------------------------------------------

/// Path condition + endpoint condition of a variational trap: every accepted
/// step was worthwhile at its ratio lambda_k(1-sigma), and no worthwhile
/// change exists from the final point at ratio lambda_star.
struct TrapReport {
    bool path_ok = false;
    std::size_t steps_checked = 0;
    double worst_path_margin = std::numeric_limits<double>::infinity();
    TrapCertificate endpoint;
};

inline TrapReport variational_trap_report(const Trace& trace, const Objective& f,
                                          const QuasiDistance& q, const ResistanceCurve& gamma,
                                          double lambda_star, PointSampler& sampler,
                                          const CertifySettings& settings = {}) {
    TrapReport report;
    report.path_ok = true;
    for (const auto& rec : trace.records) {
        const double ratio = rec.lambda_k * (1.0 - trace.sigma);
        const double margin =
            rec.f_k - rec.f_next - ratio * gamma.gamma(rec.q_step);
        report.worst_path_margin = std::min(report.worst_path_margin, margin);
        if (margin < -certification_slack(rec.f_k)) report.path_ok = false;
        ++report.steps_checked;
    }
    report.endpoint = certify_trap(f, q, gamma, lambda_star, trace.final_point, sampler, settings);
    return report;
}

}  // namespace qprox
