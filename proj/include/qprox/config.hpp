#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qprox/objective.hpp"
#include "qprox/point.hpp"
#include "qprox/quasi_metric.hpp"
#include "qprox/resistance.hpp"
#include "qprox/solver.hpp"
#include "qprox/traps.hpp"

namespace qprox {

// ---------------------------------------------------------------------------
// Scenario configuration. The on-disk grammar is JSON (see README for the
// full key reference); parse_config collects every validation error rather
// than stopping at the first.
// ---------------------------------------------------------------------------

struct ObjectiveSpec {
    std::string kind = "quadratic";  // quadratic | abs | double_well | l1_quadratic | entrepreneur
    Point weights;                   // quadratic
    Point center;                    // quadratic / l1_quadratic
    Point l1_weights;                // l1_quadratic
    double price = 1.0;              // entrepreneur
    Point wages;                     // entrepreneur
    std::size_t gbar_grid = 201;     // entrepreneur
    Box box;

    bool operator==(const ObjectiveSpec&) const = default;
};

struct QuasiSpec {
    std::string kind = "euclidean";  // asym_l1 | euclidean
    Point h_plus;
    Point h_minus;
    double scale = 1.0;

    bool operator==(const QuasiSpec&) const = default;
};

struct GammaSpec {
    std::string kind = "power";
    double alpha = 2.0;
    double q_bar = 1.0;
    double r = 0.5;

    bool operator==(const GammaSpec&) const = default;
};

struct LambdaScheduleSpec {
    std::string kind = "constant";  // constant | periodic | random
    double value = 1.0;
    std::vector<double> values;

    bool operator==(const LambdaScheduleSpec&) const = default;
};

struct EpsilonSpec {
    std::string kind = "constant";  // constant | geometric | summable
    double value = 0.0;
    double ratio = 0.5;

    bool operator==(const EpsilonSpec&) const = default;
};

struct InnerSpec {
    std::size_t grid = 257;
    std::size_t sweeps = 64;
    std::size_t retries = 3;

    bool operator==(const InnerSpec&) const = default;
};

struct SolverSpec {
    std::string regime = "exact";  // exact | eps_inexact | algorithm1 | algorithm2
    double lambda_lo = 1.0;
    double lambda_hi = 1.0;
    LambdaScheduleSpec lambda_schedule;
    double sigma = 0.0;
    double b = 2.0;
    EpsilonSpec epsilon;
    std::size_t max_iters = 10000;
    double step_tol = 1e-6;
    double residual_tol = 1e-6;
    InnerSpec inner;

    bool operator==(const SolverSpec&) const = default;
};

struct CertifySpec {
    std::size_t samples = 10000;
    std::vector<double> radii = {1e-4, 1e-2, 1e-1, 1.0};
    double lambda_star_factor = 1.1;  // lambda_star = factor * lambda_infinity

    bool operator==(const CertifySpec&) const = default;
};

struct KLSpec {
    double theta = 0.5;
    double c = 1.0;
    double eta = 1.0;

    bool operator==(const KLSpec&) const = default;
};

struct SweepSpec {
    std::vector<double> alphas;
    std::vector<double> sigmas;
    std::vector<double> lambdas;
    std::vector<Point> x0s;
    std::size_t max_runs = 64;

    bool empty() const { return alphas.empty() && sigmas.empty() && lambdas.empty() && x0s.empty(); }
    bool operator==(const SweepSpec&) const = default;
};

struct ScenarioConfig {
    std::uint64_t seed = 0;
    ObjectiveSpec objective;
    QuasiSpec quasi_distance;
    GammaSpec gamma;
    SolverSpec solver;
    Point x0;
    std::string out_dir = "out";
    CertifySpec certify;
    std::optional<KLSpec> kl;
    std::optional<SweepSpec> sweep;

    bool operator==(const ScenarioConfig&) const = default;
};

struct ConfigError {
    std::string path;     // dotted key path, or "syntax"
    std::string message;
};

struct ParseResult {
    std::optional<ScenarioConfig> config;
    std::vector<ConfigError> errors;

    bool ok() const { return config.has_value() && errors.empty(); }
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace cfg_detail {

using nlohmann::json;

struct Reader {
    std::vector<ConfigError>& errors;

    static std::string join(const std::string& path, const char* key) {
        return path.empty() ? std::string(key) : path + "." + key;
    }

    void fail(const std::string& path, const std::string& msg) { errors.push_back({path, msg}); }

    double num(const json& j, const std::string& path, const char* key, double fallback,
               bool required = false) {
        if (!j.contains(key)) {
            if (required) fail(join(path, key), "missing required number");
            return fallback;
        }
        if (!j.at(key).is_number()) {
            fail(join(path, key), "expected a number");
            return fallback;
        }
        return j.at(key).get<double>();
    }

    std::size_t index(const json& j, const std::string& path, const char* key, std::size_t fallback) {
        if (!j.contains(key)) return fallback;
        if (!j.at(key).is_number_unsigned()) {
            fail(join(path, key), "expected a nonnegative integer");
            return fallback;
        }
        return j.at(key).get<std::size_t>();
    }

    std::string str(const json& j, const std::string& path, const char* key,
                    const std::string& fallback) {
        if (!j.contains(key)) return fallback;
        if (!j.at(key).is_string()) {
            fail(join(path, key), "expected a string");
            return fallback;
        }
        return j.at(key).get<std::string>();
    }

    Point vec(const json& j, const std::string& path, const char* key, Point fallback = {}) {
        if (!j.contains(key)) return fallback;
        if (!j.at(key).is_array()) {
            fail(join(path, key), "expected an array of numbers");
            return fallback;
        }
        Point out;
        for (const auto& e : j.at(key)) {
            if (!e.is_number()) {
                fail(join(path, key), "expected an array of numbers");
                return fallback;
            }
            out.push_back(e.get<double>());
        }
        return out;
    }
};

inline void validate_semantics(const ScenarioConfig& c, std::vector<ConfigError>& errors) {
    auto fail = [&](const std::string& path, const std::string& msg) {
        errors.push_back({path, msg});
    };

    // objective
    const auto& ob = c.objective;
    const bool known_objective = ob.kind == "quadratic" || ob.kind == "abs" ||
                                 ob.kind == "double_well" || ob.kind == "l1_quadratic" ||
                                 ob.kind == "entrepreneur";
    if (!known_objective)
        fail("objective.kind", "unknown kind '" + ob.kind +
                                   "'; allowed: quadratic, abs, double_well, l1_quadratic, entrepreneur");
    if (ob.box.lo.empty() || ob.box.lo.size() != ob.box.hi.size()) {
        fail("objective.box", "box.lo and box.hi must be nonempty arrays of equal length");
    } else {
        for (std::size_t i = 0; i < ob.box.lo.size(); ++i)
            if (!(ob.box.lo[i] < ob.box.hi[i])) {
                fail("objective.box", "requires lo < hi per coordinate");
                break;
            }
    }
    const std::size_t dim = ob.box.lo.size();
    if (ob.kind == "entrepreneur") {
        if (ob.wages.size() != dim) fail("objective.wages", "need one wage per skill type");
        if (dim > 4) fail("objective.box", "entrepreneur supports at most 4 skill types");
        if (ob.gbar_grid < 2) fail("objective.gbar_grid", "must be >= 2");
        for (double w : ob.wages)
            if (!(w >= 0.0)) fail("objective.wages", "wages must be nonnegative");
    }

    // quasi distance
    const auto& qd = c.quasi_distance;
    if (qd.kind == "asym_l1") {
        if (qd.h_plus.size() != dim || qd.h_minus.size() != dim)
            fail("quasi_distance", "h_plus/h_minus must match the objective dimension");
        for (double h : qd.h_plus)
            if (!(h > 0.0)) fail("quasi_distance.h_plus", "weights must be positive");
        for (double h : qd.h_minus)
            if (!(h > 0.0)) fail("quasi_distance.h_minus", "weights must be positive");
    } else if (qd.kind == "euclidean") {
        if (!(qd.scale > 0.0)) fail("quasi_distance.scale", "must be positive");
    } else {
        fail("quasi_distance.kind", "unknown kind '" + qd.kind + "'; allowed: asym_l1, euclidean");
    }

    // gamma
    if (c.gamma.kind != "power")
        fail("gamma.kind", "unknown kind '" + c.gamma.kind + "'; allowed: power");
    if (!(c.gamma.alpha > 1.0)) fail("gamma.alpha", "alpha must exceed 1");
    if (!(c.gamma.q_bar > 0.0)) fail("gamma.q_bar", "must be positive");
    if (!(c.gamma.r > 0.0 && c.gamma.r < 1.0)) fail("gamma.r", "must lie in (0,1)");

    // solver
    const auto& sv = c.solver;
    const bool known_regime = sv.regime == "exact" || sv.regime == "eps_inexact" ||
                              sv.regime == "algorithm1" || sv.regime == "algorithm2";
    if (!known_regime)
        fail("solver.regime", "unknown regime '" + sv.regime +
                                  "'; allowed: exact, eps_inexact, algorithm1, algorithm2");
    if (!(sv.lambda_lo > 0.0 && sv.lambda_lo <= sv.lambda_hi))
        fail("solver.lambda_lo", "requires 0 < lambda_lo <= lambda_hi");
    if (!(sv.sigma >= 0.0 && sv.sigma < 1.0)) fail("solver.sigma", "must lie in [0,1)");
    if (!(sv.b > 0.0)) fail("solver.b", "must be positive");
    if (sv.max_iters < 1) fail("solver.max_iters", "must be >= 1");
    if (sv.inner.grid < 3) fail("solver.inner.grid", "must be >= 3");
    const auto& ls = sv.lambda_schedule;
    if (ls.kind == "constant") {
        if (ls.value < sv.lambda_lo || ls.value > sv.lambda_hi)
            fail("solver.lambda_schedule.value", "outside [lambda_lo, lambda_hi]");
    } else if (ls.kind == "periodic") {
        if (ls.values.empty()) fail("solver.lambda_schedule.values", "periodic schedule needs values");
        for (double v : ls.values)
            if (v < sv.lambda_lo || v > sv.lambda_hi) {
                fail("solver.lambda_schedule.values", "value outside [lambda_lo, lambda_hi]");
                break;
            }
    } else if (ls.kind != "random") {
        fail("solver.lambda_schedule.kind",
             "unknown kind '" + ls.kind + "'; allowed: constant, periodic, random");
    }
    const auto& ep = sv.epsilon;
    if (ep.kind != "constant" && ep.kind != "geometric" && ep.kind != "summable")
        fail("solver.epsilon.kind",
             "unknown kind '" + ep.kind + "'; allowed: constant, geometric, summable");
    if (ep.value < 0.0) fail("solver.epsilon.value", "must be nonnegative");
    if (ep.kind == "geometric" && !(ep.ratio > 0.0 && ep.ratio < 1.0))
        fail("solver.epsilon.ratio", "must lie in (0,1)");

    // start point
    if (c.x0.size() != dim)
        fail("x0", "must match the objective dimension");
    else if (dim > 0 && !c.objective.box.lo.empty() && c.objective.box.lo.size() == dim) {
        for (std::size_t i = 0; i < dim; ++i)
            if (c.x0[i] < ob.box.lo[i] || c.x0[i] > ob.box.hi[i]) {
                fail("x0", "must lie inside objective.box");
                break;
            }
    }

    // certification
    if (c.certify.samples < 1) fail("certify.samples", "must be >= 1");
    if (!(c.certify.lambda_star_factor > 0.0)) fail("certify.lambda_star_factor", "must be positive");
    for (double r : c.certify.radii)
        if (!(r > 0.0)) fail("certify.radii", "radii must be positive");

    // kl
    if (c.kl) {
        if (!(c.kl->theta > 0.0 && c.kl->theta < 1.0)) fail("kl.theta", "must lie in (0,1)");
        if (!(c.kl->c > 0.0)) fail("kl.c", "must be positive");
        if (!(c.kl->eta > 0.0)) fail("kl.eta", "must be positive");
    }

    // sweep
    if (c.sweep) {
        const auto& sw = *c.sweep;
        std::size_t runs = std::max<std::size_t>(1, sw.alphas.size()) *
                           std::max<std::size_t>(1, sw.sigmas.size()) *
                           std::max<std::size_t>(1, sw.lambdas.size()) *
                           std::max<std::size_t>(1, sw.x0s.size());
        if (sw.empty()) fail("sweep", "sweep present but no axes given");
        if (runs > sw.max_runs)
            fail("sweep", "cross product has " + std::to_string(runs) +
                              " runs, exceeding max_runs = " + std::to_string(sw.max_runs));
        for (double a : sw.alphas)
            if (!(a > 1.0)) fail("sweep.alpha", "alpha must exceed 1");
        for (double s : sw.sigmas)
            if (!(s >= 0.0 && s < 1.0)) fail("sweep.sigma", "must lie in [0,1)");
        for (double l : sw.lambdas)
            if (!(l > 0.0)) fail("sweep.lambda", "must be positive");
        for (const auto& x : sw.x0s)
            if (x.size() != dim) fail("sweep.x0", "entries must match the objective dimension");
    }
}

}  // namespace cfg_detail

inline ParseResult parse_config(const std::string& text) {
    using nlohmann::json;
    ParseResult result;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        result.errors.push_back({"syntax", e.what()});
        return result;
    }
    if (!j.is_object()) {
        result.errors.push_back({"syntax", "top level must be an object"});
        return result;
    }

    ScenarioConfig c;
    cfg_detail::Reader rd{result.errors};

    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            rd.fail("seed", "expected a nonnegative integer");
        else
            c.seed = j.at("seed").get<std::uint64_t>();
    }

    if (j.contains("objective") && j.at("objective").is_object()) {
        const auto& o = j.at("objective");
        c.objective.kind = rd.str(o, "objective", "kind", c.objective.kind);
        // kind-specific fields: only read what the kind uses, so that
        // parse(print(config)) is the identity on valid configs
        if (c.objective.kind == "quadratic") {
            c.objective.weights = rd.vec(o, "objective", "weights");
            c.objective.center = rd.vec(o, "objective", "center");
        } else if (c.objective.kind == "l1_quadratic") {
            c.objective.l1_weights = rd.vec(o, "objective", "l1_weights");
            c.objective.center = rd.vec(o, "objective", "center");
        } else if (c.objective.kind == "entrepreneur") {
            c.objective.price = rd.num(o, "objective", "price", c.objective.price);
            c.objective.wages = rd.vec(o, "objective", "wages");
            c.objective.gbar_grid = rd.index(o, "objective", "gbar_grid", c.objective.gbar_grid);
        }
        if (o.contains("box") && o.at("box").is_object()) {
            c.objective.box.lo = rd.vec(o.at("box"), "objective.box", "lo");
            c.objective.box.hi = rd.vec(o.at("box"), "objective.box", "hi");
        } else {
            rd.fail("objective.box", "missing required table with lo/hi arrays");
        }
    } else {
        rd.fail("objective", "missing required table");
    }

    if (j.contains("quasi_distance") && j.at("quasi_distance").is_object()) {
        const auto& o = j.at("quasi_distance");
        c.quasi_distance.kind = rd.str(o, "quasi_distance", "kind", c.quasi_distance.kind);
        if (c.quasi_distance.kind == "asym_l1") {
            c.quasi_distance.h_plus = rd.vec(o, "quasi_distance", "h_plus");
            c.quasi_distance.h_minus = rd.vec(o, "quasi_distance", "h_minus");
        } else {
            c.quasi_distance.scale = rd.num(o, "quasi_distance", "scale", c.quasi_distance.scale);
        }
    } else {
        rd.fail("quasi_distance", "missing required table");
    }

    if (j.contains("gamma") && j.at("gamma").is_object()) {
        const auto& o = j.at("gamma");
        c.gamma.kind = rd.str(o, "gamma", "kind", c.gamma.kind);
        c.gamma.alpha = rd.num(o, "gamma", "alpha", c.gamma.alpha);
        c.gamma.q_bar = rd.num(o, "gamma", "q_bar", c.gamma.q_bar);
        c.gamma.r = rd.num(o, "gamma", "r", c.gamma.r);
    } else {
        rd.fail("gamma", "missing required table");
    }

    if (j.contains("solver") && j.at("solver").is_object()) {
        const auto& o = j.at("solver");
        auto& sv = c.solver;
        sv.regime = rd.str(o, "solver", "regime", sv.regime);
        sv.lambda_lo = rd.num(o, "solver", "lambda_lo", sv.lambda_lo);
        sv.lambda_hi = rd.num(o, "solver", "lambda_hi", sv.lambda_hi);
        sv.sigma = rd.num(o, "solver", "sigma", sv.sigma);
        sv.b = rd.num(o, "solver", "b", sv.b);
        sv.max_iters = rd.index(o, "solver", "max_iters", sv.max_iters);
        sv.step_tol = rd.num(o, "solver", "step_tol", sv.step_tol);
        sv.residual_tol = rd.num(o, "solver", "residual_tol", sv.residual_tol);
        if (o.contains("lambda_schedule") && o.at("lambda_schedule").is_object()) {
            const auto& s = o.at("lambda_schedule");
            sv.lambda_schedule.kind = rd.str(s, "solver.lambda_schedule", "kind", "constant");
            sv.lambda_schedule.value =
                rd.num(s, "solver.lambda_schedule", "value", sv.lambda_lo);
            sv.lambda_schedule.values = rd.vec(s, "solver.lambda_schedule", "values");
        } else {
            sv.lambda_schedule.kind = "constant";
            sv.lambda_schedule.value = sv.lambda_lo;
        }
        if (o.contains("epsilon") && o.at("epsilon").is_object()) {
            const auto& s = o.at("epsilon");
            sv.epsilon.kind = rd.str(s, "solver.epsilon", "kind", sv.epsilon.kind);
            sv.epsilon.value = rd.num(s, "solver.epsilon", "value", sv.epsilon.value);
            sv.epsilon.ratio = rd.num(s, "solver.epsilon", "ratio", sv.epsilon.ratio);
        }
        if (o.contains("inner") && o.at("inner").is_object()) {
            const auto& s = o.at("inner");
            sv.inner.grid = rd.index(s, "solver.inner", "grid", sv.inner.grid);
            sv.inner.sweeps = rd.index(s, "solver.inner", "sweeps", sv.inner.sweeps);
            sv.inner.retries = rd.index(s, "solver.inner", "retries", sv.inner.retries);
        }
    } else {
        rd.fail("solver", "missing required table");
    }

    c.x0 = rd.vec(j, "", "x0");
    c.out_dir = rd.str(j, "", "out_dir", c.out_dir);

    if (j.contains("certify") && j.at("certify").is_object()) {
        const auto& o = j.at("certify");
        c.certify.samples = rd.index(o, "certify", "samples", c.certify.samples);
        c.certify.radii = rd.vec(o, "certify", "radii", c.certify.radii);
        c.certify.lambda_star_factor =
            rd.num(o, "certify", "lambda_star_factor", c.certify.lambda_star_factor);
    }

    if (j.contains("kl") && j.at("kl").is_object()) {
        const auto& o = j.at("kl");
        KLSpec kl;
        kl.theta = rd.num(o, "kl", "theta", kl.theta);
        kl.c = rd.num(o, "kl", "c", kl.c);
        kl.eta = rd.num(o, "kl", "eta", kl.eta);
        c.kl = kl;
    }

    if (j.contains("sweep") && j.at("sweep").is_object()) {
        const auto& o = j.at("sweep");
        SweepSpec sw;
        sw.alphas = rd.vec(o, "sweep", "alpha");
        sw.sigmas = rd.vec(o, "sweep", "sigma");
        sw.lambdas = rd.vec(o, "sweep", "lambda");
        sw.max_runs = rd.index(o, "sweep", "max_runs", sw.max_runs);
        if (o.contains("x0")) {
            if (!o.at("x0").is_array()) {
                rd.fail("sweep.x0", "expected an array of coordinate arrays");
            } else {
                for (const auto& e : o.at("x0")) {
                    if (!e.is_array()) {
                        rd.fail("sweep.x0", "expected an array of coordinate arrays");
                        break;
                    }
                    Point p;
                    for (const auto& v : e) p.push_back(v.get<double>());
                    sw.x0s.push_back(std::move(p));
                }
            }
        }
        c.sweep = sw;
    }

    cfg_detail::validate_semantics(c, result.errors);
    if (result.errors.empty()) result.config = c;
    return result;
}

inline std::string print_config(const ScenarioConfig& c) {
    using nlohmann::json;
    json j;
    j["seed"] = c.seed;
    json o;
    o["kind"] = c.objective.kind;
    if (!c.objective.weights.empty()) o["weights"] = c.objective.weights;
    if (!c.objective.center.empty()) o["center"] = c.objective.center;
    if (!c.objective.l1_weights.empty()) o["l1_weights"] = c.objective.l1_weights;
    if (c.objective.kind == "entrepreneur") {
        o["price"] = c.objective.price;
        o["wages"] = c.objective.wages;
        o["gbar_grid"] = c.objective.gbar_grid;
    }
    o["box"] = {{"lo", c.objective.box.lo}, {"hi", c.objective.box.hi}};
    j["objective"] = o;

    json q;
    q["kind"] = c.quasi_distance.kind;
    if (c.quasi_distance.kind == "asym_l1") {
        q["h_plus"] = c.quasi_distance.h_plus;
        q["h_minus"] = c.quasi_distance.h_minus;
    } else {
        q["scale"] = c.quasi_distance.scale;
    }
    j["quasi_distance"] = q;

    j["gamma"] = {{"kind", c.gamma.kind},
                  {"alpha", c.gamma.alpha},
                  {"q_bar", c.gamma.q_bar},
                  {"r", c.gamma.r}};

    json s;
    s["regime"] = c.solver.regime;
    s["lambda_lo"] = c.solver.lambda_lo;
    s["lambda_hi"] = c.solver.lambda_hi;
    json ls;
    ls["kind"] = c.solver.lambda_schedule.kind;
    ls["value"] = c.solver.lambda_schedule.value;
    if (!c.solver.lambda_schedule.values.empty()) ls["values"] = c.solver.lambda_schedule.values;
    s["lambda_schedule"] = ls;
    s["sigma"] = c.solver.sigma;
    s["b"] = c.solver.b;
    s["epsilon"] = {{"kind", c.solver.epsilon.kind},
                    {"value", c.solver.epsilon.value},
                    {"ratio", c.solver.epsilon.ratio}};
    s["max_iters"] = c.solver.max_iters;
    s["step_tol"] = c.solver.step_tol;
    s["residual_tol"] = c.solver.residual_tol;
    s["inner"] = {{"grid", c.solver.inner.grid},
                  {"sweeps", c.solver.inner.sweeps},
                  {"retries", c.solver.inner.retries}};
    j["solver"] = s;

    j["x0"] = c.x0;
    j["out_dir"] = c.out_dir;
    j["certify"] = {{"samples", c.certify.samples},
                    {"radii", c.certify.radii},
                    {"lambda_star_factor", c.certify.lambda_star_factor}};
    if (c.kl) j["kl"] = {{"theta", c.kl->theta}, {"c", c.kl->c}, {"eta", c.kl->eta}};
    if (c.sweep) {
        json sw;
        if (!c.sweep->alphas.empty()) sw["alpha"] = c.sweep->alphas;
        if (!c.sweep->sigmas.empty()) sw["sigma"] = c.sweep->sigmas;
        if (!c.sweep->lambdas.empty()) sw["lambda"] = c.sweep->lambdas;
        if (!c.sweep->x0s.empty()) {
            json xs = json::array();
            for (const auto& p : c.sweep->x0s) xs.push_back(p);
            sw["x0"] = xs;
        }
        sw["max_runs"] = c.sweep->max_runs;
        j["sweep"] = sw;
    }
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Builders: validated spec -> runtime objects
// ---------------------------------------------------------------------------

inline Objective build_objective(const ObjectiveSpec& spec) {
    Box box = spec.box;
    if (spec.kind == "quadratic") return make_quadratic(spec.weights, spec.center, box);
    if (spec.kind == "abs") return make_abs(box);
    if (spec.kind == "double_well") return make_double_well(box);
    if (spec.kind == "l1_quadratic") return make_l1_quadratic(spec.l1_weights, spec.center, box);
    if (spec.kind == "entrepreneur") {
        EntrepreneurScenario s;
        s.skill_types = box.dimension();
        s.price = spec.price;
        s.wages = spec.wages;
        s.box = box;
        s.gbar_grid = spec.gbar_grid;
        return build_entrepreneur(s);
    }
    throw std::invalid_argument("build_objective: unknown kind " + spec.kind);
}

inline std::unique_ptr<QuasiDistance> build_quasi_distance(const QuasiSpec& spec, std::size_t dim) {
    if (spec.kind == "asym_l1")
        return std::make_unique<AsymmetricWeightedL1>(spec.h_plus, spec.h_minus);
    if (spec.kind == "euclidean") return std::make_unique<ScaledEuclidean>(dim, spec.scale);
    throw std::invalid_argument("build_quasi_distance: unknown kind " + spec.kind);
}

inline std::unique_ptr<ResistanceCurve> build_gamma(const GammaSpec& spec) {
    if (spec.kind == "power") return std::make_unique<PowerResistance>(spec.alpha);
    throw std::invalid_argument("build_gamma: unknown kind " + spec.kind);
}

inline SolverConfig build_solver_config(const SolverSpec& spec) {
    SolverConfig cfg;
    cfg.lambda_lo = spec.lambda_lo;
    cfg.lambda_hi = spec.lambda_hi;
    if (spec.lambda_schedule.kind == "constant") {
        cfg.lambda_schedule.kind = LambdaSchedule::Kind::constant;
        cfg.lambda_schedule.value = spec.lambda_schedule.value;
    } else if (spec.lambda_schedule.kind == "periodic") {
        cfg.lambda_schedule.kind = LambdaSchedule::Kind::periodic;
        cfg.lambda_schedule.values = spec.lambda_schedule.values;
    } else {
        cfg.lambda_schedule.kind = LambdaSchedule::Kind::random;
    }
    cfg.sigma = spec.sigma;
    cfg.b = spec.b;
    if (spec.epsilon.kind == "constant")
        cfg.epsilon_schedule.kind = EpsilonSchedule::Kind::constant;
    else if (spec.epsilon.kind == "geometric")
        cfg.epsilon_schedule.kind = EpsilonSchedule::Kind::geometric;
    else
        cfg.epsilon_schedule.kind = EpsilonSchedule::Kind::summable;
    cfg.epsilon_schedule.value = spec.epsilon.value;
    cfg.epsilon_schedule.ratio = spec.epsilon.ratio;
    cfg.max_iters = spec.max_iters;
    cfg.step_tol = spec.step_tol;
    cfg.residual_tol = spec.residual_tol;
    cfg.inner.grid_per_axis = spec.inner.grid;
    cfg.inner.max_sweeps = spec.inner.sweeps;
    cfg.inner.retries = spec.inner.retries;
    return cfg;
}

inline Regime parse_regime(const std::string& name) {
    if (name == "exact") return Regime::exact;
    if (name == "eps_inexact") return Regime::eps_inexact;
    if (name == "algorithm1") return Regime::algorithm1;
    if (name == "algorithm2") return Regime::algorithm2;
    throw std::invalid_argument("parse_regime: unknown regime " + name);
}

}  // namespace qprox
