#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "qprox/point.hpp"

namespace qprox {

/// splitmix64 step; used to derive independent stream seeds from one
/// master seed so every consumer of randomness is pinned to the config seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

/// Source of sample points; all samplers are deterministic given their seed.
using PointSampler = std::function<Point()>;

inline PointSampler make_box_sampler(const Box& box, std::uint64_t seed) {
    auto engine = std::make_shared<std::mt19937_64>(seed);
    Box b = box;
    return [engine, b]() {
        Point x(b.dimension());
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::uniform_real_distribution<double> u(b.lo[i], b.hi[i]);
            x[i] = u(*engine);
        }
        return x;
    };
}

/// Uniform direction on the unit sphere (Gaussian normalization).
inline Point random_direction(std::mt19937_64& engine, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Point d(n);
    double nrm = 0.0;
    do {
        for (auto& c : d) c = g(engine);
        nrm = norm2(d);
    } while (nrm < 1e-12);
    for (auto& c : d) c /= nrm;
    return d;
}

}  // namespace qprox
