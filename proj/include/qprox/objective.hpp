#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qprox/point.hpp"
#include "qprox/rng.hpp"

namespace qprox {

/// A "to be decreased" payoff f with a subgradient-element oracle.
/// value() is finite on the domain box and +inf outside it; the oracle
/// returns one element of the limiting subdifferential, by convention the
/// minimal-norm selection at kinks.
struct Objective {
    std::size_t dimension = 0;
    Box box;
    std::function<double(const Point&)> value_fn;
    std::function<Point(const Point&)> subgradient_fn;
    bool bounded_below = true;

    double value(const Point& x) const {
        require_dimension(x, dimension, "Objective::value");
        if (!box.contains(x)) return std::numeric_limits<double>::infinity();
        return value_fn(x);
    }

    Point subgradient_element(const Point& x) const {
        require_dimension(x, dimension, "Objective::subgradient_element");
        if (!box.contains(x))
            throw std::invalid_argument("Objective::subgradient_element: point outside domain box");
        return subgradient_fn(x);
    }
};

/// ||w|| for the oracle's minimal-norm selection; zero certifies that the
/// selection witnesses 0 in the subdifferential (a critical point).
inline double critical_residual(const Objective& f, const Point& x) {
    return norm2(f.subgradient_element(x));
}

// ---------------------------------------------------------------------------
// Built-in test objectives. Each is smooth except where noted; subgradient
// oracles use the minimal-norm selection at kinks.
// ---------------------------------------------------------------------------

/// f(x) = sum_j weights[j] * (x[j] - center[j])^2
inline Objective make_quadratic(Point weights, Point center, Box box) {
    box.validate();
    const std::size_t n = box.dimension();
    if (weights.empty()) weights.assign(n, 1.0);
    if (center.empty()) center.assign(n, 0.0);
    require_dimension(weights, n, "make_quadratic weights");
    require_dimension(center, n, "make_quadratic center");
    Objective f;
    f.dimension = n;
    f.box = std::move(box);
    f.value_fn = [weights, center](const Point& x) {
        double s = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double d = x[j] - center[j];
            s += weights[j] * d * d;
        }
        return s;
    };
    f.subgradient_fn = [weights, center](const Point& x) {
        Point g(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) g[j] = 2.0 * weights[j] * (x[j] - center[j]);
        return g;
    };
    return f;
}

/// f(x) = sum_j |x[j]|
inline Objective make_abs(Box box) {
    box.validate();
    Objective f;
    f.dimension = box.dimension();
    f.box = std::move(box);
    f.value_fn = [](const Point& x) {
        double s = 0.0;
        for (double c : x) s += std::abs(c);
        return s;
    };
    f.subgradient_fn = [](const Point& x) {
        Point g(x.size());
        for (std::size_t j = 0; j < x.size(); ++j)
            g[j] = x[j] > 0.0 ? 1.0 : (x[j] < 0.0 ? -1.0 : 0.0);
        return g;
    };
    return f;
}

/// f(x) = sum_j (x[j]^2 - 1)^2  — two wells per coordinate at +-1, a
/// critical local max at 0.
inline Objective make_double_well(Box box) {
    box.validate();
    Objective f;
    f.dimension = box.dimension();
    f.box = std::move(box);
    f.value_fn = [](const Point& x) {
        double s = 0.0;
        for (double c : x) {
            const double d = c * c - 1.0;
            s += d * d;
        }
        return s;
    };
    f.subgradient_fn = [](const Point& x) {
        Point g(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) g[j] = 4.0 * x[j] * (x[j] * x[j] - 1.0);
        return g;
    };
    return f;
}

/// f(x) = sum_j l1_weights[j]*|x[j]| + 0.5*(x[j] - center[j])^2
/// Nonsmooth at coordinate zeros; the minimal-norm subgradient there is the
/// projection of 0 onto [m - w, m + w] with m = x[j] - center[j].
inline Objective make_l1_quadratic(Point l1_weights, Point center, Box box) {
    box.validate();
    const std::size_t n = box.dimension();
    if (l1_weights.empty()) l1_weights.assign(n, 1.0);
    if (center.empty()) center.assign(n, 1.0);
    require_dimension(l1_weights, n, "make_l1_quadratic l1_weights");
    require_dimension(center, n, "make_l1_quadratic center");
    for (double w : l1_weights)
        if (!(w > 0.0)) throw std::invalid_argument("make_l1_quadratic: l1_weights must be positive");
    Objective f;
    f.dimension = n;
    f.box = std::move(box);
    f.value_fn = [l1_weights, center](const Point& x) {
        double s = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double d = x[j] - center[j];
            s += l1_weights[j] * std::abs(x[j]) + 0.5 * d * d;
        }
        return s;
    };
    f.subgradient_fn = [l1_weights, center](const Point& x) {
        Point g(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double m = x[j] - center[j];
            if (x[j] > 0.0)
                g[j] = m + l1_weights[j];
            else if (x[j] < 0.0)
                g[j] = m - l1_weights[j];
            else
                g[j] = std::abs(m) <= l1_weights[j] ? 0.0
                                                    : m - std::copysign(l1_weights[j], m);
        }
        return g;
    };
    return f;
}

// ---------------------------------------------------------------------------
// Knowledge-management scenario: an entrepreneur hires/fires skilled workers
// x in R^l (continuous counts). Revenue is price * quantity * quality with
// quantity sum_j x_j and complementary quality prod_j (1 - exp(-x_j));
// operational cost is the wage bill. The solver minimizes the residual
// profit f = g_bar - g, where g_bar is the box supremum of profit.
// ---------------------------------------------------------------------------

struct EntrepreneurScenario {
    std::size_t skill_types = 2;  // l
    double price = 1.0;
    Point wages;                  // one per skill type, >= 0
    Box box;                      // worker-count bounds, lo >= 0
    std::size_t gbar_grid = 201;  // per-axis resolution of the g_bar scan

    void validate() const {
        if (skill_types < 1) throw std::invalid_argument("EntrepreneurScenario: need l >= 1");
        if (skill_types > 4)
            throw std::invalid_argument("EntrepreneurScenario: g_bar grid scan rejected for l > 4");
        if (!std::isfinite(price)) throw std::invalid_argument("EntrepreneurScenario: price must be finite");
        require_dimension(wages, skill_types, "EntrepreneurScenario wages");
        for (double w : wages)
            if (!(w >= 0.0) || !std::isfinite(w))
                throw std::invalid_argument("EntrepreneurScenario: wages must be nonnegative finite");
        box.validate();
        if (box.dimension() != skill_types)
            throw std::invalid_argument("EntrepreneurScenario: box dimension != skill_types");
        for (double lo : box.lo)
            if (lo < 0.0) throw std::invalid_argument("EntrepreneurScenario: worker counts are nonnegative");
        if (gbar_grid < 2) throw std::invalid_argument("EntrepreneurScenario: gbar_grid must be >= 2");
    }
};

namespace detail {
inline double entrepreneur_profit(const EntrepreneurScenario& s, const Point& x) {
    double quantity = 0.0;
    double quality = 1.0;
    double wage_bill = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        quantity += x[j];
        quality *= 1.0 - std::exp(-x[j]);
        wage_bill += s.wages[j] * x[j];
    }
    return s.price * quantity * quality - wage_bill;
}

inline Point entrepreneur_profit_gradient(const EntrepreneurScenario& s, const Point& x) {
    const std::size_t n = x.size();
    std::vector<double> one_minus_exp(n);
    double quantity = 0.0;
    double quality = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        one_minus_exp[j] = 1.0 - std::exp(-x[j]);
        quantity += x[j];
        quality *= one_minus_exp[j];
    }
    Point g(n);
    for (std::size_t i = 0; i < n; ++i) {
        double others = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others *= one_minus_exp[j];
        g[i] = s.price * quality + s.price * quantity * std::exp(-x[i]) * others - s.wages[i];
    }
    return g;
}

/// Dense-grid supremum of profit over the box.
inline double entrepreneur_gbar(const EntrepreneurScenario& s) {
    const std::size_t n = s.skill_types;
    const std::size_t m = s.gbar_grid;
    std::vector<std::size_t> idx(n, 0);
    Point x(n);
    double best = -std::numeric_limits<double>::infinity();
    while (true) {
        for (std::size_t j = 0; j < n; ++j)
            x[j] = s.box.lo[j] + (s.box.hi[j] - s.box.lo[j]) * static_cast<double>(idx[j]) /
                                     static_cast<double>(m - 1);
        const double g = entrepreneur_profit(s, x);
        if (!std::isfinite(g))
            throw std::invalid_argument("build_entrepreneur: profit not finite on the domain box");
        best = std::max(best, g);
        std::size_t j = 0;
        while (j < n && ++idx[j] == m) idx[j++] = 0;
        if (j == n) break;
    }
    return best;
}
}  // namespace detail

/// f(x) = g_bar - g(x) >= 0 at grid points; minimizers of f are profit
/// maximizers of g. g_bar comes from a dense grid scan at construction.
inline Objective build_entrepreneur(const EntrepreneurScenario& scenario) {
    scenario.validate();
    const double g_bar = detail::entrepreneur_gbar(scenario);
    Objective f;
    f.dimension = scenario.skill_types;
    f.box = scenario.box;
    f.value_fn = [scenario, g_bar](const Point& x) {
        return g_bar - detail::entrepreneur_profit(scenario, x);
    };
    f.subgradient_fn = [scenario](const Point& x) {
        Point g = detail::entrepreneur_profit_gradient(scenario, x);
        for (auto& c : g) c = -c;
        return g;
    };
    return f;
}

// ---------------------------------------------------------------------------
// Kurdyka-Lojasiewicz machinery
// ---------------------------------------------------------------------------

/// Desingularizer phi(s) = c * s^(1-theta) with phi(0) = 0, concave and
/// increasing on (0, eta). The KL inequality near x_ref reads
///   phi'(f(x) - f(x_ref)) * dist(0, d f(x)) >= 1.
struct KLDescriptor {
    double theta = 0.5;  // in (0,1)
    double c = 1.0;      // > 0
    double eta = 1.0;    // > 0, validity band in function value
    Point x_ref;

    void validate() const {
        if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("KLDescriptor: theta in (0,1)");
        if (!(c > 0.0)) throw std::invalid_argument("KLDescriptor: c must be positive");
        if (!(eta > 0.0)) throw std::invalid_argument("KLDescriptor: eta must be positive");
    }

    double phi_prime(double s) const { return c * (1.0 - theta) * std::pow(s, -theta); }
};

enum class KLStatus { pass, fail, inconclusive };

struct KLReport {
    KLStatus status = KLStatus::inconclusive;
    std::size_t in_band = 0;       // samples that landed in the value band
    double min_statistic = std::numeric_limits<double>::infinity();
};

/// Sampled check of the KL inequality over the band
/// { x : f(x_ref) < f(x) < f(x_ref) + eta }. Pass needs min >= 1 - 1e-9.
inline KLReport kl_empirical_check(const Objective& f, const KLDescriptor& desc,
                                   PointSampler& sampler, std::size_t count) {
    desc.validate();
    require_dimension(desc.x_ref, f.dimension, "kl_empirical_check x_ref");
    KLReport rep;
    const double f_ref = f.value(desc.x_ref);
    const std::size_t budget = count * 100;
    for (std::size_t tries = 0; tries < budget && rep.in_band < count; ++tries) {
        const Point x = sampler();
        const double fx = f.value(x);
        const double gap = fx - f_ref;
        if (!(gap > 0.0 && gap < desc.eta)) continue;
        ++rep.in_band;
        const double stat = desc.phi_prime(gap) * critical_residual(f, x);
        rep.min_statistic = std::min(rep.min_statistic, stat);
    }
    if (rep.in_band == 0) {
        rep.status = KLStatus::inconclusive;
    } else {
        rep.status = rep.min_statistic >= 1.0 - 1e-9 ? KLStatus::pass : KLStatus::fail;
    }
    return rep;
}

}  // namespace qprox
