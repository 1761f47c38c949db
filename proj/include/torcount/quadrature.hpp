#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace torcount {

enum class QuadMethod { ADAPTIVE, MONTE_CARLO };

struct QuadratureReport {
    double value = 0.0;
    double est_error = 0.0; // absolute; one standard error for Monte Carlo
    QuadMethod method = QuadMethod::ADAPTIVE;
    long long cells_or_samples = 0;
    std::optional<std::uint64_t> seed; // present for Monte Carlo only
};

struct QuadOptions {
    QuadMethod method = QuadMethod::ADAPTIVE;
    double rel_tol = 1e-3;
    double abs_tol = 0.0;
    long long max_evals = 20'000'000;  // adaptive evaluation cap
    long long mc_samples = 10'000'000;
    std::uint64_t seed = 12345;
    int threads = 1;
};

// Integrand over the open unit cube (0,1)^dim; all domain maps and jacobians
// are folded in by the caller. Must return a finite value at interior points
// (non-finite evaluations are treated as 0).
struct CubeIntegrand {
    int dim = 1;
    std::function<double(const double*)> f;
};

// Gauss-Kronrod 7/15 bisection for dim 1, Genz-Malik degree-7 subdivision for
// dim 2..4. Deterministic; never evaluates on the cube boundary.
QuadratureReport integrate_adaptive(const CubeIntegrand& g, const QuadOptions& opt);

// Plain Monte Carlo with a counter-based generator: sample i of the run is a
// pure function of (seed, i), batches are combined in index order, so the
// result is bit-identical for any thread count.
QuadratureReport integrate_monte_carlo(const CubeIntegrand& g, const QuadOptions& opt);

QuadratureReport integrate(const CubeIntegrand& g, const QuadOptions& opt);

// t in (0,1) -> (0,inf), jacobian multiplied onto *jac.
double map_halfline(double t, double* jac);

// t in (0,1) -> R via s/(1-|s|), s = 2t-1; jacobian multiplied onto *jac.
double map_fullline(double t, double* jac);

} // namespace torcount
