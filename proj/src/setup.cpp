#include "torcount/setup.hpp"

namespace torcount {

Setup::Setup(long n_, Boundary boundary_, const Rat& l1_, const Rat& l2_)
    : n(n_), boundary(boundary_), pol{l1_, l2_} {
    if (n < 2) throw std::invalid_argument("family parameter n must be >= 2");
    if (l1_ <= 0 || l2_ <= 0)
        throw std::invalid_argument("polarization weights must be positive");
}

std::string boundary_str(Boundary b) {
    return b == Boundary::DW ? "w" : "wz";
}

Boundary parse_boundary(const std::string& text) {
    if (text == "w") return Boundary::DW;
    if (text == "wz") return Boundary::DW_DZ;
    throw std::invalid_argument("boundary must be \"w\" or \"wz\": \"" + text + "\"");
}

} // namespace torcount
