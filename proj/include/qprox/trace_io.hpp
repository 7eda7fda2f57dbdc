#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qprox/solver.hpp"
#include "qprox/traps.hpp"

namespace qprox {

/// Shortest round-trippable decimal; fixed format keeps outputs byte-stable
/// across runs with the same seed.
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_point(const Point& p, char sep = ' ') {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += sep;
        out += fmt_double(p[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trace CSV
// ---------------------------------------------------------------------------

inline std::string trace_csv(const Trace& trace, std::size_t dimension) {
    std::string out = "k";
    for (std::size_t j = 0; j < dimension; ++j) out += ",x" + std::to_string(j);
    out += ",f,q_step,w_norm,v_norm,descent_ok,stop_rule_ok,global_slack,lambda_k\n";
    for (const auto& rec : trace.records) {
        out += std::to_string(rec.k);
        for (std::size_t j = 0; j < dimension; ++j) out += "," + fmt_double(rec.x_next[j]);
        out += "," + fmt_double(rec.f_next);
        out += "," + fmt_double(rec.q_step);
        out += "," + fmt_double(rec.w_norm);
        out += "," + fmt_double(rec.v_norm);
        out += rec.descent_ok ? ",1" : ",0";
        out += rec.stop_rule_ok ? ",1" : ",0";
        out += "," + fmt_double(rec.global_slack);
        out += "," + fmt_double(rec.lambda_k);
        out += "\n";
    }
    return out;
}

/// Final iterate from a trace CSV previously written by trace_csv.
inline Point read_trace_final_point(const std::string& csv_text, std::size_t dimension) {
    std::istringstream in(csv_text);
    std::string line, last;
    std::getline(in, line);  // header
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    if (last.empty()) throw std::runtime_error("read_trace_final_point: trace has no records");
    std::istringstream row(last);
    std::string cell;
    std::getline(row, cell, ',');  // k
    Point x(dimension);
    for (std::size_t j = 0; j < dimension; ++j) {
        if (!std::getline(row, cell, ','))
            throw std::runtime_error("read_trace_final_point: malformed row");
        x[j] = std::stod(cell);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Summary / certificate / habituation records (structured text)
// ---------------------------------------------------------------------------

inline std::string summary_text(const Trace& trace, const ResistanceCurve& gamma,
                                const Point& x0, double f0) {
    std::string out;
    out += "status: " + std::string(to_string(trace.status)) + "\n";
    out += "iterations: " + std::to_string(trace.records.size()) + "\n";
    out += "x0: " + fmt_point(x0) + "\n";
    out += "f0: " + fmt_double(f0) + "\n";
    out += "final_point: " + fmt_point(trace.final_point) + "\n";
    if (!trace.records.empty()) {
        out += "final_f: " + fmt_double(trace.records.back().f_next) + "\n";
        out += "final_q_step: " + fmt_double(trace.records.back().q_step) + "\n";
    }
    out += "final_residual: " + fmt_double(trace.final_residual) + "\n";
    out += "sum_gamma_qstep: " + fmt_double(sum_gamma_qstep(trace, gamma)) + "\n";
    out += "lambda_infinity: " + fmt_double(trace.lambda_infinity()) + "\n";
    if (!trace.failure_reason.empty()) out += "failure_reason: " + trace.failure_reason + "\n";
    return out;
}

inline std::string certificate_text(const TrapCertificate& cert) {
    std::string out;
    out += "kind: " + std::string(to_string(cert.kind)) + "\n";
    out += "lambda_star: " + fmt_double(cert.lambda_star) + "\n";
    out += "samples: " + std::to_string(cert.samples) + "\n";
    out += "worst_violation: " + fmt_double(cert.worst_violation) + "\n";
    out += "point: " + fmt_point(cert.point) + "\n";
    out += "witness: " + (cert.witness ? fmt_point(*cert.witness) : std::string("none")) + "\n";
    return out;
}

inline std::string habituation_text(const HabituationProfile& prof, double step_tol) {
    std::string out;
    out += "classification: " + std::string(to_string(prof.classification)) + "\n";
    out += "tail_max: " + fmt_double(prof.tail_max) + "\n";
    out += "step_tol: " + fmt_double(step_tol) + "\n";
    out += "monotone_f: " + std::string(prof.monotone_f ? "1" : "0") + "\n";
    out += "q_steps:";
    for (double q : prof.q_steps) out += " " + fmt_double(q);
    out += "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Empirical rate data
// ---------------------------------------------------------------------------

struct RateData {
    struct Row {
        std::size_t k;
        double f_gap;      // f(x_k) - f(final)
        double log_f_gap;  // natural log; -inf once the gap hits zero
        double q_step;
    };
    std::vector<Row> rows;
    double tail_slope = 0.0;  // least-squares slope of log(f_gap) per iteration
    bool conclusive = false;
};

/// Per-iteration payoff gaps and the fitted tail decay rate. The fit is an
/// empirical diagnostic only; it skips exhausted gaps and the last two
/// records (contaminated by the finite trace end) and needs at least five
/// usable points to report a slope.
inline RateData emit_rate_data(const Trace& trace) {
    RateData data;
    if (trace.records.empty()) return data;
    const double f_final = trace.records.back().f_next;
    for (const auto& rec : trace.records) {
        RateData::Row row;
        row.k = rec.k;
        row.f_gap = rec.f_k - f_final;
        row.log_f_gap = row.f_gap > 0.0 ? std::log(row.f_gap)
                                        : -std::numeric_limits<double>::infinity();
        row.q_step = rec.q_step;
        data.rows.push_back(row);
    }
    std::vector<std::size_t> usable;
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() *
                         (1.0 + std::abs(trace.records.front().f_k));
    for (std::size_t i = 0; i < data.rows.size(); ++i)
        if (data.rows[i].f_gap > floor) usable.push_back(i);
    if (usable.size() >= 2) usable.resize(usable.size() - 2);
    if (usable.size() > 12) usable.erase(usable.begin(), usable.end() - 12);
    if (usable.size() < 5) return data;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i : usable) {
        const double x = static_cast<double>(data.rows[i].k);
        const double y = data.rows[i].log_f_gap;
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(usable.size());
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) return data;
    data.tail_slope = (n * sxy - sx * sy) / denom;
    data.conclusive = true;
    return data;
}

inline std::string rate_csv(const RateData& data) {
    std::string out = "# empirical_tail_slope: ";
    out += data.conclusive ? fmt_double(data.tail_slope) : std::string("inconclusive");
    out += " (least-squares fit on the trace tail; empirical, no rate theorem claimed)\n";
    out += "k,f_gap,log_f_gap,q_step\n";
    for (const auto& row : data.rows) {
        out += std::to_string(row.k);
        out += "," + fmt_double(row.f_gap);
        out += "," + fmt_double(row.log_f_gap);
        out += "," + fmt_double(row.q_step);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qprox
