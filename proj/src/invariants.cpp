#include "torcount/invariants.hpp"

#include <algorithm>

namespace torcount {

Rat a_invariant(const Setup& s) {
    // max{1/l2, (n+2)/(l1+n*l2)}; the n+2 drops to n+1 when {z=0} joins the boundary
    Rat inv_l2 = 1 / s.l2();
    long num = (s.boundary == Boundary::DW) ? s.n + 2 : s.n + 1;
    Rat other = Rat(num) / s.deg1();
    return std::max(inv_l2, other);
}

PicClass adjoint_class(const Setup& s) {
    const Rat &l1 = s.l1(), &l2 = s.l2();
    if (s.boundary == Boundary::DW) {
        if (l1 > 2 * l2) return {l1 / l2 - 2, Rat(0)};
        return {Rat(0), (2 * l2 - l1) / s.deg1()};
    }
    if (l1 > l2) return {l1 / l2 - 1, Rat(0)};
    return {Rat(0), (l2 - l1) / s.deg1()};
}

AdjointType adjoint_type(const Setup& s) {
    PicClass E = adjoint_class(s);
    if (E.d1 == 0 && E.d2 == 0) return AdjointType::TRIVIAL;
    if (E.d1 > 0) return AdjointType::MOVING;
    return AdjointType::RIGID;
}

Rat e_invariant(const Setup& s) {
    if (adjoint_type(s) == AdjointType::MOVING)
        throw std::invalid_argument("e invariant undefined: adjoint class is moving");
    return adjoint_class(s).d2;
}

int b_invariant(const Setup& s) {
    return adjoint_type(s) == AdjointType::TRIVIAL ? 2 : 1;
}

Rat alpha_invariant(const Setup& s) {
    switch (adjoint_type(s)) {
    case AdjointType::MOVING:
        throw std::invalid_argument("alpha undefined: adjoint class is moving");
    case AdjointType::TRIVIAL:
        return 1 / (s.deg1() * s.l2());
    case AdjointType::RIGID:
        return 1 / s.deg1();
    }
    throw std::logic_error("unreachable");
}

std::optional<Rat> delta_saving(const Setup& s) {
    const Rat &l1 = s.l1(), &l2 = s.l2();
    switch (adjoint_type(s)) {
    case AdjointType::MOVING:
        if (s.boundary == Boundary::DW) return (l1 / l2 - 2) / s.deg1();
        return (l1 / l2 - 1) / s.deg1();
    case AdjointType::RIGID:
        if (s.boundary == Boundary::DW && l1 < 2 * l2)
            return std::min(l1, Rat(2 * l2 - l1)) / (l2 * s.deg1());
        return std::nullopt;
    case AdjointType::TRIVIAL:
        return std::nullopt;
    }
    throw std::logic_error("unreachable");
}

InvariantBundle invariant_bundle(const Setup& s) {
    InvariantBundle bundle;
    bundle.a = a_invariant(s);
    bundle.adjoint = adjoint_class(s);
    bundle.adjoint_type = adjoint_type(s);
    bundle.b = b_invariant(s);
    if (bundle.adjoint_type != AdjointType::MOVING) {
        bundle.e = e_invariant(s);
        bundle.alpha = alpha_invariant(s);
    }
    bundle.delta = delta_saving(s);
    return bundle;
}

std::string adjoint_type_str(AdjointType t) {
    switch (t) {
    case AdjointType::RIGID: return "RIGID";
    case AdjointType::MOVING: return "MOVING";
    case AdjointType::TRIVIAL: return "TRIVIAL";
    }
    return "?";
}

} // namespace torcount
