#pragma once

#include "torcount/archimedean.hpp"
#include "torcount/counting.hpp"
#include "torcount/invariants.hpp"
#include "torcount/local_densities.hpp"

#include <optional>
#include <vector>

namespace torcount {

struct PredictOptions {
    QuadOptions quad;
    long initial_truncation = 64;
    long max_truncation = 1L << 21;
    double tail_rel = 1e-3;      // required tail bound relative to the partial sum
    double tail_safety = 4.0;    // multiplies the analytic tail estimate
};

struct Prediction {
    InvariantBundle inv;
    bool supported = true; // false for DW with l1 = 2*l2 (no proved asymptotic)
    std::optional<QuadratureReport> omega; // rigid/trivial route
    std::optional<double> fiber_sum;       // moving route: sum of fiber constants
    std::optional<long> truncation_M;
    std::optional<double> tail_bound;
    double euler = 0.0; // 6/pi^2
    double c = 0.0;     // leading constant of c * B^a (log B)^(b-1)
};

// Leading constant: (alpha/a) * omega_inf * 6/pi^2 for rigid/trivial setups,
// the truncated sum of fiber constants for moving ones.
Prediction leading_constant(const Setup& s, const PredictOptions& opt = {});

// c * B^a * (log B)^(b-1), natural log; requires B >= 2 and a supported setup.
double predicted_count(const Prediction& pred, const Setup& s, double B);
double predicted_count(const Setup& s, double B, const PredictOptions& opt = {});

struct CompareRow {
    Int B;
    Int exact;
    double predicted = 0.0;
    double ratio = 0.0; // exact / predicted
    bool supported = true;
};

// One row per B (ascending, each >= 2). Unsupported setups yield rows with
// supported = false so sweeps keep going.
std::vector<CompareRow> compare(const Setup& s, const std::vector<Int>& Bs,
                                const PredictOptions& popt = {},
                                const CountOptions& copt = {});

struct FiberRow {
    FiberKey t;
    Int exact;
    double predicted = 0.0;
    double ratio = 0.0;
};

// Pairs fiber_count with fiber_constant * B^(1/l2) for each key (moving setups).
std::vector<FiberRow> fiber_report(const Setup& s, const std::vector<FiberKey>& ts,
                                   const Int& B);

// Truncated moving-case sum over fiber keys with all of |a|,|c|,|z| <= M,
// and the analytic bound (with safety factor) on everything beyond. Exposed
// for the stabilization tests.
double fiber_sum_truncated(const Setup& s, long M);
double fiber_tail_bound(const Setup& s, long M, double safety = 4.0);

} // namespace torcount
