#pragma once

#include "torcount/rational.hpp"

namespace torcount {

// Boundary divisor removed from the threefold to form the open variety U.
// DW removes the {w=0} divisor; DW_DZ removes {w=0} + {z=0}.
enum class Boundary { DW, DW_DZ };

// Polarization L = l1*(1,0) + l2*(n,1) of the rank-2 grading; both weights > 0.
struct Polarization {
    Rat l1, l2;
};

// One member of the family: the degree parameter n >= 2 (the torsor equation is
// a*d - b*c = z^(n+1)*w), a boundary choice, and a polarization.
struct Setup {
    long n;
    Boundary boundary;
    Polarization pol;

    Setup(long n_, Boundary boundary_, const Rat& l1_, const Rat& l2_);

    const Rat& l1() const { return pol.l1; }
    const Rat& l2() const { return pol.l2; }

    // First coordinate of L in the Picard basis: l1 + n*l2.
    Rat deg1() const { return pol.l1 + Rat(n) * pol.l2; }
};

std::string boundary_str(Boundary b);
Boundary parse_boundary(const std::string& text); // "w" or "wz"

} // namespace torcount
