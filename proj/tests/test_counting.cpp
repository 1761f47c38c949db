#include "doctest.h"

#include "torcount/counting.hpp"

#include <map>
#include <random>

using namespace torcount;

namespace {

Setup mk(long n, Boundary b, long l1, long l2) {
    return Setup(n, b, make_rat(l1), make_rat(l2));
}

const std::vector<std::pair<long, long>> kPols = {{1, 1}, {2, 1}, {1, 2}, {3, 1}};

} // namespace

TEST_CASE("anchor counts at B = 1") {
    CountResult wz = naive_count(mk(2, Boundary::DW_DZ, 1, 1), Int(1));
    CHECK(wz.count == 20);
    CHECK(wz.raw_tuple_count == 20);
    CHECK(enumerate_count(mk(2, Boundary::DW_DZ, 1, 1), Int(1)).count == 20);

    CountResult w = naive_count(mk(2, Boundary::DW, 1, 1), Int(1));
    CHECK(w.count == 32);
    CHECK(w.raw_tuple_count == 64);
    CHECK(enumerate_count(mk(2, Boundary::DW, 1, 1), Int(1)).count == 32);
}

TEST_CASE("hand-checked value at B = 10") {
    // 8 unit cells contribute 4*21 + 4*20, the 8 coprime cells at
    // max(|a|,|c|) = 2 contribute 6 each
    CHECK(enumerate_count(mk(2, Boundary::DW_DZ, 1, 1), Int(10)).count == 212);
}

TEST_CASE("closed-form cell enumeration matches the direct scan") {
    for (long n : {2L, 3L}) {
        for (Boundary b : {Boundary::DW, Boundary::DW_DZ}) {
            for (auto [l1, l2] : kPols) {
                Setup s = mk(n, b, l1, l2);
                for (long B : {1L, 10L, 100L}) {
                    CountResult fast = enumerate_count(s, Int(B));
                    CountResult slow = naive_count(s, Int(B));
                    CAPTURE(n);
                    CAPTURE(l1);
                    CAPTURE(l2);
                    CAPTURE(B);
                    CHECK(fast.count == slow.count);
                    CHECK(fast.raw_tuple_count == slow.raw_tuple_count);
                }
            }
        }
    }
}

TEST_CASE("raw tuple counts fold by the sign involution") {
    for (long B : {1L, 10L, 100L, 1000L}) {
        CountResult w = enumerate_count(mk(2, Boundary::DW, 1, 1), Int(B));
        CHECK(w.raw_tuple_count == 2 * w.count);
        CountResult wz = enumerate_count(mk(2, Boundary::DW_DZ, 1, 1), Int(B));
        CHECK(wz.raw_tuple_count == wz.count);
    }
}

TEST_CASE("counts are monotone in B") {
    Setup s = mk(2, Boundary::DW, 2, 1);
    Int prev = -1;
    for (long B : {1L, 2L, 5L, 10L, 20L, 50L, 100L, 500L}) {
        Int c = enumerate_count(s, Int(B)).count;
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("scaling the polarization rescales the height bound") {
    // H_{2L} = H_L^2, so counts at B^2 under 2L match counts at B under L
    Setup s = mk(2, Boundary::DW_DZ, 1, 1);
    Setup s2 = mk(2, Boundary::DW_DZ, 2, 2);
    Setup shalf(2, Boundary::DW_DZ, make_rat(1, 2), make_rat(1, 2));
    for (long B : {2L, 7L, 30L}) {
        Int base = enumerate_count(s, Int(B)).count;
        CHECK(enumerate_count(s2, Int(B) * B).count == base);
        CHECK(enumerate_count(shalf, Int(B)).count == enumerate_count(s, Int(B) * B).count);
    }
}

TEST_CASE("thread count does not change the result") {
    Setup s = mk(2, Boundary::DW, 1, 1);
    CountOptions one, eight;
    one.threads = 1;
    eight.threads = 8;
    CHECK(enumerate_count(s, Int(5000), one).count == enumerate_count(s, Int(5000), eight).count);
}

TEST_CASE("naive scan honors its work budget") {
    CountOptions opt;
    opt.work_budget = 10;
    CHECK_THROWS_AS(naive_count(mk(2, Boundary::DW, 1, 1), Int(50), opt), WorkBudgetError);
}

TEST_CASE("fiber keys normalize to primitive, sign-fixed representatives") {
    CHECK(FiberKey::normalized(Int(2), Int(4), Int(6)) == FiberKey{1, 2, 3});
    CHECK(FiberKey::normalized(Int(-1), Int(2), Int(-3)) == FiberKey{1, -2, 3});
    CHECK(FiberKey::normalized(Int(0), Int(-2), Int(4)) == FiberKey{0, 1, -2});
    CHECK(FiberKey::normalized(Int(0), Int(0), Int(-5)) == FiberKey{0, 0, 1});
    CHECK_THROWS_AS(FiberKey::normalized(Int(0), Int(0), Int(0)), std::invalid_argument);
    CHECK(FiberKey{1, 2, 3}.str() == "1:2:3");
    CHECK(FiberKey{1, -2, 3} < FiberKey{1, 2, 3});
}

TEST_CASE("fiber counts partition the total") {
    SUBCASE("moving boundary-w setup") {
        Setup s = mk(2, Boundary::DW, 3, 1);
        for (long B : {50L, 100L, 400L}) {
            long limit = static_cast<long>(coord_bound(s, Int(B)).get_si());
            Int total = 0;
            for (const FiberKey& t : fiber_keys_upto(s, limit)) {
                total += fiber_count(s, t, Int(B));
            }
            CHECK(total == enumerate_count(s, Int(B)).count);
        }
    }
    SUBCASE("moving boundary-wz setup") {
        Setup s = mk(2, Boundary::DW_DZ, 2, 1);
        for (long B : {50L, 200L}) {
            long limit = static_cast<long>(coord_bound(s, Int(B)).get_si());
            Int total = 0;
            for (const FiberKey& t : fiber_keys_upto(s, limit)) {
                total += fiber_count(s, t, Int(B));
            }
            CHECK(total == enumerate_count(s, Int(B)).count);
        }
    }
}

TEST_CASE("fiber over (1:0:1) has a linear closed form") {
    Setup s = mk(2, Boundary::DW, 3, 1);
    FiberKey t{1, 0, 1};
    for (long B : {1L, 10L, 100L, 10000L}) {
        CHECK(fiber_count(s, t, Int(B)) == 2 * Int(B) + 1);
    }
}

TEST_CASE("empty fibers are rejected") {
    Setup s = mk(2, Boundary::DW, 3, 1);
    CHECK_THROWS_AS(fiber_count(s, FiberKey{2, 2, 1}, Int(100)), std::invalid_argument);
    Setup swz = mk(2, Boundary::DW_DZ, 2, 1);
    CHECK_THROWS_AS(fiber_count(swz, FiberKey{1, 2, 2}, Int(100)), std::invalid_argument);
    // z = -1 stays a valid unit after normalization
    CHECK(fiber_count(swz, FiberKey::normalized(Int(0), Int(1), Int(-1)), Int(100)) > 0);
}

TEST_CASE("fiber keys below the coordinate bound cover every point") {
    // keys above the bound contribute nothing
    Setup s = mk(2, Boundary::DW_DZ, 2, 1);
    CHECK(fiber_count(s, FiberKey{11, 1, 1}, Int(100)) == 0);
}

TEST_CASE("cell volume approximates the lattice cell count") {
    Setup s = mk(2, Boundary::DW, 1, 1);
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> coord(-12, 12);
    int checked = 0;
    for (int i = 0; i < 2000 && checked < 250; ++i) {
        long a = coord(rng), c = coord(rng), z = coord(rng);
        if (a == 0 || c == 0) continue;
        Int g = gcd(Int(a), Int(c));
        if (g != 1) continue;
        long B = 500 + 100 * (i % 7);
        long m = std::max(std::labs(a), std::max(std::labs(c), std::labs(z)));
        if (ipow(Int(m), 3) > B) continue;
        ++checked;
        FiberKey t = FiberKey::normalized(Int(a), Int(c), Int(z));
        double exact = fiber_count(s, t, Int(B)).get_d();
        double vol = volume_V(s, double(a), double(c), double(z), double(B));
        CHECK(std::fabs(exact - vol) <= 4.0);
    }
    CHECK(checked == 250);
}

TEST_CASE("leading fiber coefficient bounds the volume defect") {
    Setup s = mk(2, Boundary::DW, 3, 1);
    // V(B) - V'*B tends to a bounded defect as B grows
    for (auto [a, c, z] : std::vector<std::array<long, 3>>{{1, 1, 1}, {2, 1, 1}, {1, 3, 2}}) {
        double vp = volume_Vprime(s, double(a), double(c), double(z));
        double prev = 1e300;
        for (double B : {1e6, 1e8, 1e10}) {
            double diff = std::fabs(volume_V(s, double(a), double(c), double(z), B) - vp * B);
            CHECK(diff <= prev + 1e-9);
            prev = diff;
            CHECK(diff <= 16.0);
        }
    }
}
