#pragma once

#include "torcount/setup.hpp"

#include <optional>

namespace torcount {

// Divisor class in Pic(X) = Z^2, coordinates in the basis ([{a=0}], [{w=0}]) so
// that deg a = deg c = deg z = (1,0), deg b = deg d = (n,1), deg w = (0,1).
struct PicClass {
    Rat d1, d2;
    bool operator==(const PicClass&) const = default;
};

enum class AdjointType { RIGID, MOVING, TRIVIAL };

struct InvariantBundle {
    Rat a;
    std::optional<Rat> e;     // absent exactly when adjoint_type == MOVING
    int b = 1;                // power of log B in the expected main term
    std::optional<Rat> alpha; // absent exactly when adjoint_type == MOVING
    PicClass adjoint;
    AdjointType adjoint_type = AdjointType::RIGID;
    std::optional<Rat> delta; // power saving in the error term, when one is proved
};

// Growth exponent: predicted count grows like B^a (log B)^(b-1).
Rat a_invariant(const Setup& s);

// Class of K_X + D + a(X)*L, evaluated case by case.
PicClass adjoint_class(const Setup& s);

AdjointType adjoint_type(const Setup& s);

// Coefficient of [{w=0}] in the adjoint class. Undefined for MOVING setups.
Rat e_invariant(const Setup& s);

int b_invariant(const Setup& s);

// Volume constant of the height-one domain in the scaling variables.
// Undefined for MOVING setups.
Rat alpha_invariant(const Setup& s);

std::optional<Rat> delta_saving(const Setup& s);

InvariantBundle invariant_bundle(const Setup& s);

std::string adjoint_type_str(AdjointType t);

} // namespace torcount
