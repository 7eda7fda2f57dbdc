#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qprox {

/// An action profile in R^n. Coordinates are abstract action units
/// (e.g. worker counts per skill type).
using Point = std::vector<double>;

inline bool all_finite(const Point& x) {
    for (double c : x)
        if (!std::isfinite(c)) return false;
    return true;
}

inline void require_dimension(const Point& x, std::size_t n, const char* what) {
    if (x.size() != n)
        throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                    std::to_string(n) + ", got " + std::to_string(x.size()));
}

inline double norm2(const Point& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

inline double l2_distance(const Point& x, const Point& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Axis-aligned coordinate bounds. Doubles as the representable domain
/// of grid-based oracles.
struct Box {
    Point lo;
    Point hi;

    std::size_t dimension() const { return lo.size(); }

    void validate() const {
        if (lo.empty() || lo.size() != hi.size())
            throw std::invalid_argument("Box: lo/hi dimension mismatch or empty");
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || lo[i] >= hi[i])
                throw std::invalid_argument("Box: requires finite lo < hi per coordinate");
        }
    }

    bool contains(const Point& x) const {
        if (x.size() != lo.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < lo[i] || x[i] > hi[i]) return false;
        return true;
    }

    Point clamp(Point x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < lo[i]) x[i] = lo[i];
            if (x[i] > hi[i]) x[i] = hi[i];
        }
        return x;
    }

    bool operator==(const Box&) const = default;
};

}  // namespace qprox
