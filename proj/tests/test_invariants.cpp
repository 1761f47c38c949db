#include "doctest.h"

#include "torcount/invariants.hpp"

#include <vector>

using namespace torcount;

namespace {

Setup mk(long n, Boundary b, long l1, long l2) {
    return Setup(n, b, make_rat(l1), make_rat(l2));
}

// K_X in the ([{a=0}], [{w=0}]) basis
PicClass canonical_class(long n) {
    return PicClass{make_rat(-(n + 2)), make_rat(-2)};
}

PicClass boundary_class(Boundary b) {
    if (b == Boundary::DW) return PicClass{make_rat(0), make_rat(1)};
    return PicClass{make_rat(1), make_rat(1)};
}

} // namespace

TEST_CASE("adjoint class equals K + D + a*L on a grid of setups") {
    std::vector<std::pair<long, long>> pols = {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {5, 2}};
    for (long n : {2L, 3L, 4L}) {
        for (Boundary b : {Boundary::DW, Boundary::DW_DZ}) {
            for (auto [l1, l2] : pols) {
                Setup s = mk(n, b, l1, l2);
                Rat a = a_invariant(s);
                PicClass K = canonical_class(n);
                PicClass D = boundary_class(b);
                PicClass E = adjoint_class(s);
                CHECK(E.d1 == K.d1 + D.d1 + a * s.deg1());
                CHECK(E.d2 == K.d2 + D.d2 + a * s.l2());
            }
        }
    }
}

TEST_CASE("growth exponent values") {
    CHECK(a_invariant(mk(2, Boundary::DW_DZ, 1, 1)) == make_rat(1));
    CHECK(a_invariant(mk(2, Boundary::DW, 1, 1)) == make_rat(4, 3));
    CHECK(a_invariant(mk(3, Boundary::DW, 1, 1)) == make_rat(5, 4));
    CHECK(a_invariant(mk(2, Boundary::DW_DZ, 1, 2)) == make_rat(3, 5));
    CHECK(a_invariant(mk(2, Boundary::DW_DZ, 2, 1)) == make_rat(1));
    CHECK(a_invariant(mk(2, Boundary::DW, 3, 1)) == make_rat(1));
}

TEST_CASE("adjoint classification and log exponent") {
    Setup triv = mk(2, Boundary::DW_DZ, 1, 1);
    CHECK(adjoint_type(triv) == AdjointType::TRIVIAL);
    CHECK(adjoint_class(triv) == PicClass{make_rat(0), make_rat(0)});
    CHECK(b_invariant(triv) == 2);

    Setup rigid = mk(2, Boundary::DW_DZ, 1, 2);
    CHECK(adjoint_type(rigid) == AdjointType::RIGID);
    CHECK(adjoint_class(rigid) == PicClass{make_rat(0), make_rat(1, 5)});
    CHECK(b_invariant(rigid) == 1);

    Setup rigid_w = mk(2, Boundary::DW, 1, 1);
    CHECK(adjoint_type(rigid_w) == AdjointType::RIGID);
    CHECK(adjoint_class(rigid_w) == PicClass{make_rat(0), make_rat(1, 3)});

    Setup mov = mk(2, Boundary::DW_DZ, 2, 1);
    CHECK(adjoint_type(mov) == AdjointType::MOVING);
    CHECK(adjoint_class(mov).d1 > 0);
    CHECK(b_invariant(mov) == 1);

    Setup mov_w = mk(2, Boundary::DW, 3, 1);
    CHECK(adjoint_type(mov_w) == AdjointType::MOVING);

    // borderline DW polarization with vanishing adjoint class
    Setup border = mk(2, Boundary::DW, 2, 1);
    CHECK(adjoint_type(border) == AdjointType::TRIVIAL);
    CHECK(b_invariant(border) == 2);
}

TEST_CASE("boundary component weight of the adjoint class") {
    CHECK(e_invariant(mk(2, Boundary::DW_DZ, 1, 2)) == make_rat(1, 5));
    CHECK(e_invariant(mk(3, Boundary::DW_DZ, 1, 2)) == make_rat(1, 7));
    CHECK(e_invariant(mk(2, Boundary::DW, 1, 1)) == make_rat(1, 3));
}

TEST_CASE("alpha values") {
    CHECK(alpha_invariant(mk(2, Boundary::DW_DZ, 1, 1)) == make_rat(1, 3));
    CHECK(alpha_invariant(mk(2, Boundary::DW, 2, 1)) == make_rat(1, 4));
    CHECK(alpha_invariant(mk(2, Boundary::DW_DZ, 1, 2)) == make_rat(1, 5));
    CHECK(alpha_invariant(mk(2, Boundary::DW, 1, 1)) == make_rat(1, 3));
}

TEST_CASE("moving setups carry no e, alpha") {
    InvariantBundle inv = invariant_bundle(mk(2, Boundary::DW_DZ, 2, 1));
    CHECK(inv.adjoint_type == AdjointType::MOVING);
    CHECK_FALSE(inv.e.has_value());
    CHECK_FALSE(inv.alpha.has_value());
    CHECK(inv.delta.has_value());
    CHECK(*inv.delta == make_rat(1, 4));
}

TEST_CASE("invariants scale correctly under L -> k*L") {
    std::vector<std::pair<long, long>> pols = {{1, 1}, {2, 1}, {1, 2}};
    for (long n : {2L, 3L}) {
        for (Boundary b : {Boundary::DW, Boundary::DW_DZ}) {
            for (auto [l1, l2] : pols) {
                Setup s = mk(n, b, l1, l2);
                for (long k : {2L, 3L}) {
                    Setup sk(n, b, make_rat(k * l1), make_rat(k * l2));
                    CHECK(a_invariant(sk) == a_invariant(s) / k);
                    CHECK(adjoint_class(sk) == adjoint_class(s));
                    CHECK(adjoint_type(sk) == adjoint_type(s));
                    CHECK(b_invariant(sk) == b_invariant(s));
                }
            }
        }
    }
}

TEST_CASE("bundle is internally consistent") {
    for (long n : {2L, 3L}) {
        for (Boundary b : {Boundary::DW, Boundary::DW_DZ}) {
            for (auto [l1, l2] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}, {3, 1}}) {
                Setup s = mk(n, b, l1, l2);
                InvariantBundle inv = invariant_bundle(s);
                CHECK(inv.a == a_invariant(s));
                CHECK(inv.adjoint == adjoint_class(s));
                CHECK(inv.b == ((inv.adjoint_type == AdjointType::TRIVIAL) ? 2 : 1));
                CHECK(inv.e.has_value() == (inv.adjoint_type != AdjointType::MOVING));
                CHECK(inv.alpha.has_value() == (inv.adjoint_type != AdjointType::MOVING));
                if (inv.e) CHECK(*inv.e == inv.adjoint.d2);
            }
        }
    }
}
