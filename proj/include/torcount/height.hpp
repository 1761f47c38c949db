#pragma once

#include "torcount/setup.hpp"

namespace torcount {

// Cox coordinates of a candidate point on the universal torsor.
struct CoxTuple {
    Int a, b, c, d, z, w;
};

struct RealCoxTuple {
    double a, b, c, d, z, w;
};

// Smallest k >= 1 with k*l1 and k*l2 both integers. H_{kL} = (H_L)^k, so height
// comparisons against B reduce to integer comparisons of k-th powers.
long height_scale_k(const Setup& s);

// Torsor equation a*d - b*c = z^(n+1)*w, primitivity gcd(a,c,z) = gcd(b,d,w) = 1,
// and the boundary units: w = ±1 (DW), or w = ±1 and z = ±1 (DW_DZ).
bool is_integral_point(const Setup& s, const CoxTuple& x);

// Exact test H_L(x) <= B via k-th powers, entirely in integer arithmetic.
bool height_leq(const Setup& s, const CoxTuple& x, const Int& B);

// Floating-point height, for integrands.
double height_real(const Setup& s, const RealCoxTuple& x);

// Largest admissible M = max{|a|,|c|,|z|}: floor(B^(1/(l1+n*l2))), exactly.
Int coord_bound(const Setup& s, const Int& B);

// Largest admissible max{|b|,|d|} at fixed M >= 1 and w = ±1:
// floor((B/M^l1)^(1/l2)), exactly.
Int bd_bound(const Setup& s, const Int& B, const Int& M);

} // namespace torcount
