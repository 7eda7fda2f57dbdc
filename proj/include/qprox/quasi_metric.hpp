#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <stdexcept>

#include "qprox/point.hpp"
#include "qprox/rng.hpp"

namespace qprox {

/// Asymmetric cost to be able to change from action x to action y.
/// Axioms: q(x,y) >= 0, q(x,y) = 0 iff x = y, and the triangle inequality
/// q(x,z) <= q(x,y) + q(y,z). Symmetry is NOT assumed: moving one way may
/// cost more than moving back.
///
/// Instances are immutable after construction and safe to share across
/// concurrent solver runs; all operations are pure.
class QuasiDistance {
  public:
    virtual ~QuasiDistance() = default;

    virtual std::size_t dimension() const = 0;

    /// q(x,y). Throws std::invalid_argument on dimension mismatch.
    virtual double evaluate(const Point& x, const Point& y) const = 0;

    /// One element of the subdifferential of the convex map y -> q(x,y).
    /// At tie coordinates (y[j] == x[j]) the designated selection is the
    /// minimal-norm one (zero in that coordinate).
    virtual Point subgradient_second(const Point& x, const Point& y) const = 0;
};

/// Per-coordinate hiring/firing cost model:
///   q(x,y) = sum_j h_plus[j]*(y[j]-x[j])^+  +  h_minus[j]*(x[j]-y[j])^+ .
/// Conservation costs are fixed to zero, so the cost to stay vanishes and
/// the cost to change is itself the quasi distance.
class AsymmetricWeightedL1 final : public QuasiDistance {
  public:
    AsymmetricWeightedL1(Point h_plus, Point h_minus)
        : h_plus_(std::move(h_plus)), h_minus_(std::move(h_minus)) {
        if (h_plus_.empty() || h_plus_.size() != h_minus_.size())
            throw std::invalid_argument("AsymmetricWeightedL1: weight vectors empty or mismatched");
        for (std::size_t j = 0; j < h_plus_.size(); ++j) {
            if (!(h_plus_[j] > 0.0) || !std::isfinite(h_plus_[j]) ||
                !(h_minus_[j] > 0.0) || !std::isfinite(h_minus_[j]))
                throw std::invalid_argument("AsymmetricWeightedL1: weights must be positive finite");
        }
    }

    std::size_t dimension() const override { return h_plus_.size(); }

    double evaluate(const Point& x, const Point& y) const override {
        require_dimension(x, dimension(), "AsymmetricWeightedL1::evaluate x");
        require_dimension(y, dimension(), "AsymmetricWeightedL1::evaluate y");
        double cost = 0.0;
        for (std::size_t j = 0; j < h_plus_.size(); ++j) {
            const double d = y[j] - x[j];
            cost += d >= 0.0 ? h_plus_[j] * d : -h_minus_[j] * d;
        }
        return cost;
    }

    Point subgradient_second(const Point& x, const Point& y) const override {
        require_dimension(x, dimension(), "AsymmetricWeightedL1::subgradient_second x");
        require_dimension(y, dimension(), "AsymmetricWeightedL1::subgradient_second y");
        Point v(dimension());
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (y[j] > x[j])
                v[j] = h_plus_[j];
            else if (y[j] < x[j])
                v[j] = -h_minus_[j];
            else
                v[j] = 0.0;  // selection from [-h_minus, h_plus]
        }
        return v;
    }

    const Point& h_plus() const { return h_plus_; }
    const Point& h_minus() const { return h_minus_; }

  private:
    Point h_plus_;
    Point h_minus_;
};

/// q(x,y) = scale * ||x - y||_2. The symmetric special case.
class ScaledEuclidean final : public QuasiDistance {
  public:
    ScaledEuclidean(std::size_t dimension, double scale) : n_(dimension), scale_(scale) {
        if (n_ == 0) throw std::invalid_argument("ScaledEuclidean: dimension must be >= 1");
        if (!(scale_ > 0.0) || !std::isfinite(scale_))
            throw std::invalid_argument("ScaledEuclidean: scale must be positive finite");
    }

    std::size_t dimension() const override { return n_; }

    double evaluate(const Point& x, const Point& y) const override {
        require_dimension(x, n_, "ScaledEuclidean::evaluate x");
        require_dimension(y, n_, "ScaledEuclidean::evaluate y");
        return scale_ * l2_distance(x, y);
    }

    Point subgradient_second(const Point& x, const Point& y) const override {
        require_dimension(x, n_, "ScaledEuclidean::subgradient_second x");
        require_dimension(y, n_, "ScaledEuclidean::subgradient_second y");
        const double d = l2_distance(x, y);
        Point v(n_, 0.0);
        if (d == 0.0) return v;  // minimal-norm selection from the scale-ball
        for (std::size_t j = 0; j < n_; ++j) v[j] = scale_ * (y[j] - x[j]) / d;
        return v;
    }

    double scale() const { return scale_; }

  private:
    std::size_t n_;
    double scale_;
};

/// beta1*||x-y||_2 <= q(x,y) <= beta2*||x-y||_2 for all x, y.
struct NormEquivalenceBounds {
    double beta1;
    double beta2;
};

inline NormEquivalenceBounds equivalence_bounds(const AsymmetricWeightedL1& q) {
    double wmin = std::numeric_limits<double>::infinity();
    double wmax = 0.0;
    for (std::size_t j = 0; j < q.dimension(); ++j) {
        wmin = std::min({wmin, q.h_plus()[j], q.h_minus()[j]});
        wmax = std::max({wmax, q.h_plus()[j], q.h_minus()[j]});
    }
    return {wmin, std::sqrt(static_cast<double>(q.dimension())) * wmax};
}

inline NormEquivalenceBounds equivalence_bounds(const ScaledEuclidean& q) {
    return {q.scale(), q.scale()};
}

/// Sampled evidence that the quasi-distance axioms hold. Report-only:
/// violations are recorded, never thrown.
struct AxiomReport {
    std::size_t triples = 0;
    double max_triangle_violation = 0.0;   // max over triples of q(x,z)-q(x,y)-q(y,z)
    double max_identity_violation = 0.0;   // max over x of |q(x,x)|
    double min_distinct_value = std::numeric_limits<double>::infinity();
    bool nonnegative = true;
    bool asymmetry_witnessed = false;      // found a pair with q(x,y) != q(y,x)

    bool passed(double tol = 1e-12) const {
        return max_triangle_violation <= tol && max_identity_violation == 0.0 &&
               nonnegative && min_distinct_value > 0.0;
    }
};

inline AxiomReport verify_axioms(const QuasiDistance& q, PointSampler& sampler, std::size_t count) {
    if (count < 1) throw std::invalid_argument("verify_axioms: count must be >= 1");
    AxiomReport report;
    report.triples = count;
    for (std::size_t i = 0; i < count; ++i) {
        const Point x = sampler();
        const Point y = sampler();
        const Point z = sampler();
        const double qxy = q.evaluate(x, y);
        const double qyx = q.evaluate(y, x);
        const double qyz = q.evaluate(y, z);
        const double qxz = q.evaluate(x, z);
        if (qxy < 0.0 || qyz < 0.0 || qxz < 0.0) report.nonnegative = false;
        report.max_triangle_violation =
            std::max(report.max_triangle_violation, qxz - (qxy + qyz));
        report.max_identity_violation =
            std::max(report.max_identity_violation, std::abs(q.evaluate(x, x)));
        if (x != y) report.min_distinct_value = std::min(report.min_distinct_value, qxy);
        if (qxy != qyx) report.asymmetry_witnessed = true;
    }
    return report;
}

}  // namespace qprox
