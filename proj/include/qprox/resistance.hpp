#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qprox {

/// Relative resistance-to-change curve G. The proximal perturbation term is
/// G[q(x,y)]. Hypotheses: G[0] = G'[0] = 0 and G' > 0, G'' > 0 on q > 0,
/// i.e. a strictly convex disutility that vanishes to second order at zero
/// (weak resistance). Curves are immutable and pure.
class ResistanceCurve {
  public:
    virtual ~ResistanceCurve() = default;
    virtual double gamma(double q) const = 0;
    virtual double gamma_prime(double q) const = 0;
    virtual double gamma_second(double q) const = 0;
};

namespace detail {
inline void require_nonnegative_q(double q, const char* what) {
    if (!(q >= 0.0))
        throw std::invalid_argument(std::string(what) + ": requires q >= 0");
}
}  // namespace detail

/// G[q] = q^alpha with alpha > 1. alpha <= 1 is strong resistance and is
/// rejected at construction.
class PowerResistance final : public ResistanceCurve {
  public:
    explicit PowerResistance(double alpha) : alpha_(alpha) {
        if (!(alpha > 1.0) || !std::isfinite(alpha))
            throw std::invalid_argument("PowerResistance: alpha must exceed 1");
    }

    double gamma(double q) const override {
        detail::require_nonnegative_q(q, "PowerResistance::gamma");
        return std::pow(q, alpha_);
    }

    double gamma_prime(double q) const override {
        detail::require_nonnegative_q(q, "PowerResistance::gamma_prime");
        return alpha_ * std::pow(q, alpha_ - 1.0);
    }

    double gamma_second(double q) const override {
        detail::require_nonnegative_q(q, "PowerResistance::gamma_second");
        if (q == 0.0 && alpha_ < 2.0)
            throw std::invalid_argument("PowerResistance::gamma_second: undefined at 0 for alpha < 2");
        return alpha_ * (alpha_ - 1.0) * std::pow(q, alpha_ - 2.0);
    }

    double alpha() const { return alpha_; }

  private:
    double alpha_;
};

/// User-defined curve given by value and two derivatives. The hypotheses are
/// not enforced here; run validate_hypotheses before trusting one.
class CustomResistance final : public ResistanceCurve {
  public:
    using Fn = std::function<double(double)>;

    CustomResistance(Fn value, Fn first, Fn second)
        : value_(std::move(value)), first_(std::move(first)), second_(std::move(second)) {
        if (!value_ || !first_ || !second_)
            throw std::invalid_argument("CustomResistance: all three callables required");
    }

    double gamma(double q) const override {
        detail::require_nonnegative_q(q, "CustomResistance::gamma");
        return value_(q);
    }
    double gamma_prime(double q) const override {
        detail::require_nonnegative_q(q, "CustomResistance::gamma_prime");
        return first_(q);
    }
    double gamma_second(double q) const override {
        detail::require_nonnegative_q(q, "CustomResistance::gamma_second");
        return second_(q);
    }

  private:
    Fn value_, first_, second_;
};

/// Generalized rate of curvature  rho(q, r) = G'[q/r] / (G[q]/q).
/// For G[q] = q^alpha this is the constant alpha * r^(1-alpha); as r -> 1 it
/// recovers the elasticity of the disutility curve.
inline double curvature_rate(const ResistanceCurve& curve, double q, double r) {
    if (!(q > 0.0)) throw std::invalid_argument("curvature_rate: requires q > 0");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("curvature_rate: requires r in (0,1)");
    return curve.gamma_prime(q / r) / (curve.gamma(q) / q);
}

/// rho_bar bounds the curvature rate on (0, q_bar]. Finiteness of the bound
/// is the admissibility condition on the perturbation curve.
struct CurvatureBound {
    double r;
    double q_bar;
    double rho_bar;
};

namespace detail {
/// Log-spaced grid on [lo_factor*q_bar, q_bar]; resolves blow-up near zero.
inline std::vector<double> log_grid(double q_bar, std::size_t n, double lo_factor = 1e-6) {
    std::vector<double> g(n);
    const double lo = std::log(lo_factor * q_bar);
    const double hi = std::log(q_bar);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    g.back() = q_bar;
    return g;
}
}  // namespace detail

inline CurvatureBound curvature_bound(const ResistanceCurve& curve, double r, double q_bar,
                                      std::size_t grid_size = 512) {
    if (grid_size < 2) throw std::invalid_argument("curvature_bound: grid_size must be >= 2");
    if (!(q_bar > 0.0)) throw std::invalid_argument("curvature_bound: requires q_bar > 0");
    double sup = 0.0;
    for (double q : detail::log_grid(q_bar, grid_size))
        sup = std::max(sup, curvature_rate(curve, q, r));
    return {r, q_bar, sup};
}

struct HypothesesReport {
    bool gamma_zero_ok = false;        // G[0] = 0
    bool gamma_prime_zero_ok = false;  // G'[0] = 0
    bool prime_positive_ok = false;    // G' > 0 on (0, q_bar]
    bool second_positive_ok = false;   // G'' > 0 on (0, q_bar]
    double rho_bar = 0.0;
    bool rho_finite_ok = false;

    bool all_ok() const {
        return gamma_zero_ok && gamma_prime_zero_ok && prime_positive_ok &&
               second_positive_ok && rho_finite_ok;
    }
};

inline HypothesesReport validate_hypotheses(const ResistanceCurve& curve, double q_bar, double r,
                                            std::size_t grid_size = 512) {
    HypothesesReport rep;
    rep.gamma_zero_ok = curve.gamma(0.0) == 0.0;
    rep.gamma_prime_zero_ok = curve.gamma_prime(0.0) == 0.0;
    rep.prime_positive_ok = true;
    rep.second_positive_ok = true;
    for (double q : detail::log_grid(q_bar, grid_size)) {
        if (!(curve.gamma_prime(q) > 0.0)) rep.prime_positive_ok = false;
        if (!(curve.gamma_second(q) > 0.0)) rep.second_positive_ok = false;
    }
    rep.rho_bar = curvature_bound(curve, r, q_bar, grid_size).rho_bar;
    rep.rho_finite_ok = std::isfinite(rep.rho_bar);
    return rep;
}

}  // namespace qprox
