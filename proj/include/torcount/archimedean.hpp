#pragma once

#include "torcount/quadrature.hpp"
#include "torcount/setup.hpp"

#include <vector>

namespace torcount {

// Archimedean density of the adjoint-rigid height-one domain, integrated in
// chart coordinates with the |w0|^(e-1) factor absorbed by the substitution
// u = |w0|^e. Defined when the measure is finite: DW needs l1 < 2*l2, DW_DZ
// needs l1 <= l2.
QuadratureReport omega_inf(const Setup& s, const QuadOptions& opt = {});

// Height-one volume route: B^a/2 times the DW cell integral of da db dc dz/|a|
// over {H <= 1} (b integrated in closed form), B^a times the DW_DZ analogue,
// and (2 B^a log B)/(l1 (n+1)) times the height-one (b,c)-area when l1 = l2.
QuadratureReport w_volume(const Setup& s, double B, const QuadOptions& opt = {});

// Checks w_volume(B) / (B^a (log B)^(b-1)) against alpha * omega_inf / a.
struct CrosscheckReport {
    bool pass = false;
    double predicted = 0.0;        // alpha * omega_inf / a
    double rel_tol = 5e-3;
    std::vector<double> B_values;
    std::vector<double> scaled_w;  // one entry per B
    double worst_rel_diff = 0.0;
    QuadratureReport omega;
    QuadratureReport w_at_last_B;
};

CrosscheckReport omega_inf_crosscheck(const Setup& s, const QuadOptions& opt = {});

} // namespace torcount
