#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qprox/objective.hpp"
#include "qprox/point.hpp"
#include "qprox/quasi_metric.hpp"
#include "qprox/resistance.hpp"
#include "qprox/rng.hpp"

namespace qprox {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

enum class Regime { exact, eps_inexact, algorithm1, algorithm2 };

/// Per-iteration worthwhile-change ratio lambda_k, constrained to
/// [lambda_lo, lambda_hi]. Random draws are hashed from (seed, k) so the
/// schedule is deterministic and randomly addressable.
struct LambdaSchedule {
    enum class Kind { constant, periodic, random };
    Kind kind = Kind::constant;
    double value = 1.0;            // constant
    std::vector<double> values;    // periodic cycle
    std::uint64_t seed = 0;        // random

    double at(std::size_t k, double lo, double hi) const {
        switch (kind) {
            case Kind::constant:
                return value;
            case Kind::periodic:
                return values[k % values.size()];
            case Kind::random: {
                std::mt19937_64 eng(derive_seed(seed, k));
                return std::uniform_real_distribution<double>(lo, hi)(eng);
            }
        }
        return value;
    }
};

/// Error budget eps_k for the global inexact condition.
struct EpsilonSchedule {
    enum class Kind { constant, geometric, summable };
    Kind kind = Kind::constant;
    double value = 0.0;   // eps_0
    double ratio = 0.5;   // geometric decay factor

    double at(std::size_t k) const {
        switch (kind) {
            case Kind::constant:
                return value;
            case Kind::geometric:
                return value * std::pow(ratio, static_cast<double>(k));
            case Kind::summable:
                return value / (static_cast<double>(k + 1) * static_cast<double>(k + 1));
        }
        return value;
    }
};

struct InnerSettings {
    std::size_t grid_per_axis = 257;  // coarse scan resolution
    std::size_t max_sweeps = 64;      // coordinate-refinement sweeps
    std::size_t retries = 3;          // accuracy-tightening retries per step
};

struct SolverConfig {
    double lambda_lo = 1.0;
    double lambda_hi = 1.0;
    LambdaSchedule lambda_schedule;
    double sigma = 0.0;  // descent relaxation, in [0,1)
    double b = 2.0;      // stopping-rule constant
    EpsilonSchedule epsilon_schedule;
    std::size_t max_iters = 10000;
    double step_tol = 1e-6;      // habituation threshold on q(x_k, x_{k+1})
    double residual_tol = 1e-6;  // critical-point threshold on ||w||
    InnerSettings inner;

    void validate() const {
        if (!(lambda_lo > 0.0 && lambda_lo <= lambda_hi && std::isfinite(lambda_hi)))
            throw std::invalid_argument("SolverConfig: requires 0 < lambda_lo <= lambda_hi < inf");
        if (!(sigma >= 0.0 && sigma < 1.0))
            throw std::invalid_argument("SolverConfig: requires sigma in [0,1)");
        if (!(b > 0.0)) throw std::invalid_argument("SolverConfig: requires b > 0");
        if (max_iters < 1) throw std::invalid_argument("SolverConfig: requires max_iters >= 1");
        if (inner.grid_per_axis < 3)
            throw std::invalid_argument("SolverConfig: inner grid needs >= 3 points per axis");
        if (lambda_schedule.kind == LambdaSchedule::Kind::constant) {
            if (lambda_schedule.value < lambda_lo || lambda_schedule.value > lambda_hi)
                throw std::invalid_argument("SolverConfig: constant lambda outside [lambda_lo, lambda_hi]");
        } else if (lambda_schedule.kind == LambdaSchedule::Kind::periodic) {
            if (lambda_schedule.values.empty())
                throw std::invalid_argument("SolverConfig: periodic lambda schedule needs values");
            for (double v : lambda_schedule.values)
                if (v < lambda_lo || v > lambda_hi)
                    throw std::invalid_argument("SolverConfig: periodic lambda outside [lambda_lo, lambda_hi]");
        }
        if (epsilon_schedule.value < 0.0)
            throw std::invalid_argument("SolverConfig: epsilon must be nonnegative");
    }
};

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

struct IterationRecord {
    std::size_t k = 0;
    Point x_k;
    Point x_next;
    double f_k = 0.0;
    double f_next = 0.0;
    double q_step = 0.0;        // q(x_k, x_next)
    double w_norm = 0.0;        // ||w||, w in df(x_next), minimal-norm selection
    double v_norm = 0.0;        // ||v||, v in dq(x_k,.)(x_next)
    bool descent_ok = false;    // sufficient-descent condition
    bool stop_rule_ok = false;  // marginal-change stopping rule
    double global_slack = 0.0;  // max(0, P(x_next) - grid min of P)
    double lambda_k = 0.0;
};

enum class TerminationStatus { converged, max_iters, step_failure };

inline const char* to_string(TerminationStatus s) {
    switch (s) {
        case TerminationStatus::converged: return "converged";
        case TerminationStatus::max_iters: return "max-iters";
        case TerminationStatus::step_failure: return "step-failure";
    }
    return "unknown";
}

struct Trace {
    std::vector<IterationRecord> records;
    TerminationStatus status = TerminationStatus::max_iters;
    Point final_point;
    double final_residual = std::numeric_limits<double>::quiet_NaN();
    std::string failure_reason;

    // run context, kept for downstream re-verification and reports
    Regime regime = Regime::exact;
    double sigma = 0.0;
    double b = 0.0;
    double step_tol = 0.0;
    double residual_tol = 0.0;

    /// Tail estimate of lim lambda_k: mean over the last (up to) 10 records.
    double lambda_infinity() const {
        if (records.empty()) return std::numeric_limits<double>::quiet_NaN();
        const std::size_t tail = std::min<std::size_t>(10, records.size());
        double s = 0.0;
        for (std::size_t i = records.size() - tail; i < records.size(); ++i)
            s += records[i].lambda_k;
        return s / static_cast<double>(tail);
    }
};

struct StepFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Additive slack for inequality certification, scaled by the payoff level.
inline double certification_slack(double f_ref) { return 1e-12 * (1.0 + std::abs(f_ref)); }

// ---------------------------------------------------------------------------
// Inner subproblem: minimize P(y) = f(y) + lambda * G[q(x_k, y)] over the box
// ---------------------------------------------------------------------------

struct SubproblemResult {
    Point argmin;
    double value = 0.0;
    double grid_min = 0.0;        // best value seen on the coarse scan grid
    double certified_slack = 0.0; // grid_min - value, >= 0 by construction
};

namespace detail {

template <typename F>
struct LineBest {
    double t;
    double value;
};

/// Golden-section plus guarded parabolic polish on [a, b]. Keeps the best
/// point ever evaluated; the polish recovers the accuracy that plain
/// golden-section loses to rounding near a smooth minimum.
template <typename F>
LineBest<F> line_min(F&& fn, double a, double b) {
    constexpr double invphi = 0.6180339887498949;
    double best_t = a, best_v = fn(a);
    {
        const double fb = fn(b);
        if (fb < best_v) { best_v = fb; best_t = b; }
    }
    const double xtol = 1e-11 * (1.0 + std::abs(a) + std::abs(b));
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    auto consider = [&](double t, double v) {
        if (v < best_v) { best_v = v; best_t = t; }
    };
    consider(x1, f1);
    consider(x2, f2);
    int guard = 200;
    while (b - a > xtol && guard-- > 0) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = fn(x1);
            consider(x1, f1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = fn(x2);
            consider(x2, f2);
        }
    }
    // Parabolic polish at decreasing spacings; each proposal only accepted
    // if it actually lowers the value (kinks make the fit meaningless).
    for (double h_rel : {1e-3, 1e-5, 3e-6}) {
        const double h = h_rel * (1.0 + std::abs(best_t));
        const double tl = best_t - h, tr = best_t + h;
        const double fl = fn(tl), fc = best_v, fr = fn(tr);
        consider(tl, fl);
        consider(tr, fr);
        const double denom = fl - 2.0 * fc + fr;
        if (!(denom > 0.0)) continue;
        double delta = 0.5 * h * (fl - fr) / denom;
        delta = std::clamp(delta, -h, h);
        const double tv = best_t + delta;
        consider(tv, fn(tv));
    }
    return {best_t, best_v};
}

template <typename P>
SubproblemResult minimize_on_box(P&& payoff, const Box& box, const Point& x_k,
                                 const InnerSettings& inner) {
    const std::size_t n = box.dimension();
    const std::size_t m = std::max<std::size_t>(3, inner.grid_per_axis);

    // Coarse scan. For n <= 3 a full tensor grid; above that a thin grid
    // seeds the projected-subgradient fallback in the caller.
    std::vector<double> cell(n);
    std::vector<std::vector<double>> axes(n);
    for (std::size_t j = 0; j < n; ++j) {
        axes[j].resize(m);
        for (std::size_t i = 0; i < m; ++i)
            axes[j][i] = box.lo[j] + (box.hi[j] - box.lo[j]) * static_cast<double>(i) /
                                         static_cast<double>(m - 1);
        cell[j] = (box.hi[j] - box.lo[j]) / static_cast<double>(m - 1);
    }
    Point grid_best(n);
    double grid_min = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> idx(n, 0);
    Point x(n);
    while (true) {
        for (std::size_t j = 0; j < n; ++j) x[j] = axes[j][idx[j]];
        const double v = payoff(x);
        if (v < grid_min) { grid_min = v; grid_best = x; }
        std::size_t j = 0;
        while (j < n && ++idx[j] == m) idx[j++] = 0;
        if (j == n) break;
    }

    // Coordinate refinement around the scan winner.
    Point y = grid_best;
    double y_val = grid_min;
    for (std::size_t sweep = 0; sweep < inner.max_sweeps; ++sweep) {
        const double before = y_val;
        for (std::size_t j = 0; j < n; ++j) {
            const double lo = std::max(box.lo[j], y[j] - cell[j]);
            const double hi = std::min(box.hi[j], y[j] + cell[j]);
            if (!(hi > lo)) continue;
            auto along = [&](double t) {
                Point z = y;
                z[j] = t;
                return payoff(z);
            };
            const auto r = line_min(along, lo, hi);
            if (r.value < y_val) {
                y[j] = r.t;
                y_val = r.value;
            }
        }
        if (before - y_val <= 1e-16 * (1.0 + std::abs(y_val))) break;
    }

    // Candidate selection: staying put wins exact ties, so fixed points of
    // the subproblem are reproduced bit-exactly. A per-coordinate snap back
    // to x_k removes refinement dust around the penalty kink.
    Point snapped = y;
    bool snapped_any = false;
    for (std::size_t j = 0; j < n; ++j) {
        if (snapped[j] != x_k[j] && std::abs(snapped[j] - x_k[j]) <= 1e-9 * (1.0 + std::abs(x_k[j]))) {
            snapped[j] = x_k[j];
            snapped_any = true;
        }
    }

    SubproblemResult out;
    out.grid_min = grid_min;
    if (box.contains(x_k)) {
        out.argmin = x_k;
        out.value = payoff(x_k);
    } else {
        out.argmin = grid_best;
        out.value = grid_min;
    }
    auto consider = [&](const Point& cand, double val) {
        if (val < out.value) {
            out.value = val;
            out.argmin = cand;
        }
    };
    consider(grid_best, grid_min);
    consider(y, y_val);
    if (snapped_any) consider(snapped, payoff(snapped));
    out.certified_slack = out.grid_min - out.value;
    return out;
}

template <typename P, typename DP>
SubproblemResult minimize_on_box_highdim(P&& payoff, DP&& payoff_subgradient, const Box& box,
                                         const Point& x_k, const InnerSettings& inner) {
    const std::size_t n = box.dimension();
    // thin seed grid
    const std::size_t m = 5;
    Point best(n);
    double best_v = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> idx(n, 0);
    Point x(n);
    while (true) {
        for (std::size_t j = 0; j < n; ++j)
            x[j] = box.lo[j] + (box.hi[j] - box.lo[j]) * static_cast<double>(idx[j]) /
                                   static_cast<double>(m - 1);
        const double v = payoff(x);
        if (v < best_v) { best_v = v; best = x; }
        std::size_t j = 0;
        while (j < n && ++idx[j] == m) idx[j++] = 0;
        if (j == n) break;
    }
    const double grid_min = best_v;
    if (box.contains(x_k)) {
        const double vk = payoff(x_k);
        if (vk < best_v) { best_v = vk; best = x_k; }
    }
    double span = 0.0;
    for (std::size_t j = 0; j < n; ++j) span = std::max(span, box.hi[j] - box.lo[j]);
    Point y = best;
    const std::size_t iters = inner.max_sweeps * 50;
    for (std::size_t i = 0; i < iters; ++i) {
        Point d = payoff_subgradient(y);
        const double dn = norm2(d);
        if (dn < 1e-14) break;
        const double step = 0.1 * span / std::sqrt(static_cast<double>(i + 1));
        Point z(n);
        for (std::size_t j = 0; j < n; ++j) z[j] = y[j] - step * d[j] / dn;
        z = box.clamp(std::move(z));
        const double v = payoff(z);
        y = std::move(z);
        if (v < best_v) { best_v = v; best = y; }
    }
    SubproblemResult out;
    out.argmin = best;
    out.value = best_v;
    out.grid_min = grid_min;
    out.certified_slack = grid_min - best_v;
    return out;
}

}  // namespace detail

/// Approximately minimize the proximal payoff P(y) = f(y) + lambda*G[q(x_k,y)]
/// over the domain box: coarse grid scan, then coordinate-wise golden-section
/// refinement (projected subgradient descent above three dimensions). The
/// returned slack certifies the achieved value against the scan-grid minimum.
inline SubproblemResult prox_subproblem_min(const Objective& f, const QuasiDistance& q,
                                            const ResistanceCurve& gamma, double lambda,
                                            const Point& x_k, const InnerSettings& inner) {
    if (!(lambda > 0.0)) throw std::invalid_argument("prox_subproblem_min: requires lambda > 0");
    if (f.box.lo.empty()) throw std::invalid_argument("prox_subproblem_min: objective has no domain box");
    require_dimension(x_k, f.dimension, "prox_subproblem_min x_k");
    auto payoff = [&](const Point& y) { return f.value_fn(y) + lambda * gamma.gamma(q.evaluate(x_k, y)); };
    if (f.dimension <= 3)
        return detail::minimize_on_box(payoff, f.box, x_k, inner);
    auto payoff_subgradient = [&](const Point& y) {
        Point g = f.subgradient_fn(y);
        const double qv = q.evaluate(x_k, y);
        const double gp = gamma.gamma_prime(qv);
        const Point v = q.subgradient_second(x_k, y);
        for (std::size_t j = 0; j < g.size(); ++j) g[j] += lambda * gp * v[j];
        return g;
    };
    return detail::minimize_on_box_highdim(payoff, payoff_subgradient, f.box, x_k, inner);
}

// ---------------------------------------------------------------------------
// Stepping regimes
// ---------------------------------------------------------------------------

namespace detail {

inline IterationRecord make_record(std::size_t k, const Objective& f, const QuasiDistance& q,
                                   const ResistanceCurve& gamma, double lambda, double sigma,
                                   double b, const Point& x_k, const SubproblemResult& sub) {
    IterationRecord rec;
    rec.k = k;
    rec.x_k = x_k;
    rec.x_next = sub.argmin;
    rec.f_k = f.value(x_k);
    rec.f_next = f.value(sub.argmin);
    rec.q_step = q.evaluate(x_k, sub.argmin);
    rec.w_norm = norm2(f.subgradient_element(sub.argmin));
    rec.v_norm = norm2(q.subgradient_second(x_k, sub.argmin));
    rec.lambda_k = lambda;
    rec.global_slack = std::max(0.0, rec.f_next + lambda * gamma.gamma(rec.q_step) - sub.grid_min);
    const double slack = certification_slack(rec.f_k);
    rec.descent_ok =
        rec.f_k - rec.f_next >= lambda * (1.0 - sigma) * gamma.gamma(rec.q_step) - slack;
    if (rec.q_step == 0.0) {
        // worthwhile temporary stay: both sides of the stopping rule vanish
        rec.stop_rule_ok = rec.w_norm <= 1e-12 + slack;
    } else {
        rec.stop_rule_ok = rec.w_norm <= b * gamma.gamma_prime(rec.q_step) * rec.v_norm + slack;
    }
    return rec;
}

inline InnerSettings tightened(InnerSettings s) {
    s.grid_per_axis = s.grid_per_axis * 2 - 1;
    s.max_sweeps += 16;
    return s;
}

}  // namespace detail

/// One exact proximal step: x_next is the certified subproblem argmin.
/// b only feeds the informational stopping-rule flag on the record.
inline IterationRecord exact_prox_step(const Objective& f, const QuasiDistance& q,
                                       const ResistanceCurve& gamma, double lambda,
                                       const Point& x_k, const InnerSettings& inner,
                                       std::size_t k = 0, double b = 1.0) {
    const SubproblemResult sub = prox_subproblem_min(f, q, gamma, lambda, x_k, inner);
    return detail::make_record(k, f, q, gamma, lambda, /*sigma=*/0.0, b, x_k, sub);
}

/// Global epsilon-inexact step: x_next must satisfy
/// P(x_next) <= P(y) + eps_k for all grid y. eps_k = 0 degenerates to exact.
inline IterationRecord epsilon_inexact_step(const Objective& f, const QuasiDistance& q,
                                            const ResistanceCurve& gamma, double lambda,
                                            const Point& x_k, double epsilon_k,
                                            const InnerSettings& inner, std::size_t k = 0,
                                            double b = 1.0) {
    if (!(epsilon_k >= 0.0))
        throw std::invalid_argument("epsilon_inexact_step: requires epsilon_k >= 0");
    const SubproblemResult sub = prox_subproblem_min(f, q, gamma, lambda, x_k, inner);
    IterationRecord rec = detail::make_record(k, f, q, gamma, lambda, 0.0, b, x_k, sub);
    if (rec.global_slack > epsilon_k + certification_slack(rec.f_k))
        throw StepFailure("epsilon_inexact_step: cannot certify epsilon condition at step " +
                          std::to_string(k));
    return rec;
}

/// One step of the descent + stopping-rule scheme: find x_next with
///   f(x_k) - f(x_next) >= lambda_k (1-sigma) G[q(x_k, x_next)]
///   ||w|| <= b G'[q(x_k, x_next)] ||v||
/// Candidates come from the inner subproblem solve; a failed stopping-rule
/// check tightens inner accuracy up to the retry budget.
inline IterationRecord algorithm1_step(const Objective& f, const QuasiDistance& q,
                                       const ResistanceCurve& gamma, double lambda, double sigma,
                                       double b, double residual_tol, const Point& x_k,
                                       const InnerSettings& inner, std::size_t k = 0) {
    InnerSettings attempt = inner;
    for (std::size_t r = 0; r <= inner.retries; ++r) {
        const SubproblemResult sub = prox_subproblem_min(f, q, gamma, lambda, x_k, attempt);
        IterationRecord rec = detail::make_record(k, f, q, gamma, lambda, sigma, b, x_k, sub);
        if (rec.q_step == 0.0) {
            // stay-step: acceptable only at (numerically) critical points
            if (rec.w_norm <= residual_tol) {
                rec.stop_rule_ok = true;
                return rec;
            }
        } else if (rec.descent_ok && rec.stop_rule_ok) {
            return rec;
        }
        attempt = detail::tightened(attempt);
    }
    throw StepFailure("algorithm1_step: no candidate satisfied descent + stopping rule at step " +
                      std::to_string(k));
}

/// One step of the globally worthwhile scheme: in addition to the stopping
/// rule, x_next must satisfy, for all grid y,
///   f(y) - f(x_next) >= lambda_k [ (1-sigma) G[q(x_k,x_next)] - G[q(x_k,y)] ]
/// i.e. P(x_next) <= P(y) + lambda_k sigma G[q(x_k,x_next)]. Setting y = x_k
/// recovers the plain descent condition; sigma = 0 recovers the exact step.
inline IterationRecord algorithm2_step(const Objective& f, const QuasiDistance& q,
                                       const ResistanceCurve& gamma, double lambda, double sigma,
                                       double b, double residual_tol, const Point& x_k,
                                       const InnerSettings& inner, std::size_t k = 0) {
    InnerSettings attempt = inner;
    for (std::size_t r = 0; r <= inner.retries; ++r) {
        const SubproblemResult sub = prox_subproblem_min(f, q, gamma, lambda, x_k, attempt);
        IterationRecord rec = detail::make_record(k, f, q, gamma, lambda, sigma, b, x_k, sub);
        const double budget = lambda * sigma * gamma.gamma(rec.q_step);
        const bool global_ok = rec.global_slack <= budget + certification_slack(rec.f_k);
        if (rec.q_step == 0.0) {
            if (rec.w_norm <= residual_tol && global_ok) {
                rec.stop_rule_ok = true;
                return rec;
            }
        } else if (rec.descent_ok && rec.stop_rule_ok && global_ok) {
            return rec;
        }
        attempt = detail::tightened(attempt);
    }
    throw StepFailure("algorithm2_step: global worthwhile condition not certified at step " +
                      std::to_string(k));
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

/// Run a full worthwhile stay-and-change process from x0. Terminates when
/// both the habituation test (q_step <= step_tol) and the criticality test
/// (||w|| <= residual_tol) hold, or on max_iters / step-failure.
inline Trace run(Regime regime, const Objective& f, const QuasiDistance& q,
                 const ResistanceCurve& gamma, const SolverConfig& config, const Point& x0) {
    config.validate();
    require_dimension(x0, f.dimension, "run x0");
    if (!f.box.contains(x0)) throw std::invalid_argument("run: x0 outside domain box");
    if (q.dimension() != f.dimension)
        throw std::invalid_argument("run: quasi-distance dimension != objective dimension");

    Trace trace;
    trace.regime = regime;
    trace.sigma = regime == Regime::algorithm1 || regime == Regime::algorithm2 ? config.sigma : 0.0;
    trace.b = config.b;
    trace.step_tol = config.step_tol;
    trace.residual_tol = config.residual_tol;

    Point x = x0;
    trace.final_point = x;
    trace.status = TerminationStatus::max_iters;
    for (std::size_t k = 0; k < config.max_iters; ++k) {
        const double lambda = config.lambda_schedule.at(k, config.lambda_lo, config.lambda_hi);
        IterationRecord rec;
        try {
            switch (regime) {
                case Regime::exact:
                    rec = exact_prox_step(f, q, gamma, lambda, x, config.inner, k, config.b);
                    break;
                case Regime::eps_inexact:
                    rec = epsilon_inexact_step(f, q, gamma, lambda, x,
                                               config.epsilon_schedule.at(k), config.inner, k,
                                               config.b);
                    break;
                case Regime::algorithm1:
                    rec = algorithm1_step(f, q, gamma, lambda, config.sigma, config.b,
                                          config.residual_tol, x, config.inner, k);
                    break;
                case Regime::algorithm2:
                    rec = algorithm2_step(f, q, gamma, lambda, config.sigma, config.b,
                                          config.residual_tol, x, config.inner, k);
                    break;
            }
        } catch (const StepFailure& e) {
            trace.status = TerminationStatus::step_failure;
            trace.failure_reason = e.what();
            break;
        }
        x = rec.x_next;
        const double q_step = rec.q_step;
        const double residual = rec.w_norm;
        trace.records.push_back(std::move(rec));
        trace.final_point = x;
        trace.final_residual = residual;
        if (q_step <= config.step_tol && residual <= config.residual_tol) {
            trace.status = TerminationStatus::converged;
            break;
        }
    }
    if (trace.records.empty()) {
        trace.final_residual = critical_residual(f, x0);
    }
    return trace;
}

/// Telescoped resistance budget: sum of G[q_step] over a trace.
inline double sum_gamma_qstep(const Trace& trace, const ResistanceCurve& gamma) {
    double s = 0.0;
    for (const auto& rec : trace.records) s += gamma.gamma(rec.q_step);
    return s;
}

}  // namespace qprox
