#include "doctest.h"

#include "torcount/predict.hpp"

#include <cmath>
#include <numbers>

using namespace torcount;

namespace {

Setup mk(long n, Boundary b, long l1, long l2) {
    return Setup(n, b, make_rat(l1), make_rat(l2));
}

constexpr double kPi = std::numbers::pi;

} // namespace

TEST_CASE("leading constant for the log-power-two setup") {
    Prediction pred = leading_constant(mk(2, Boundary::DW_DZ, 1, 1));
    CHECK(pred.supported);
    CHECK(pred.inv.b == 2);
    REQUIRE(pred.omega.has_value());
    CHECK(pred.omega->value == doctest::Approx(16.0).epsilon(1e-3));
    CHECK(pred.euler == doctest::Approx(6.0 / (kPi * kPi)).epsilon(1e-12));
    // (1/3) * 16 * 6/pi^2
    CHECK(pred.c == doctest::Approx(32.0 / (kPi * kPi)).epsilon(1e-3));
}

TEST_CASE("leading constant for a rigid setup") {
    Prediction pred = leading_constant(mk(2, Boundary::DW_DZ, 1, 2));
    CHECK(pred.supported);
    CHECK(pred.inv.b == 1);
    CHECK(pred.c == doctest::Approx(192.0 / (kPi * kPi)).epsilon(2e-3));
}

TEST_CASE("moving-case sum matches the zeta-function value") {
    // sum over fibers collapses to 16 * sum phi(m) m^-3 = 16 zeta(2)/zeta(3)
    Setup s = mk(2, Boundary::DW_DZ, 2, 1);
    Prediction pred = leading_constant(s);
    CHECK(pred.supported);
    REQUIRE(pred.fiber_sum.has_value());
    REQUIRE(pred.tail_bound.has_value());
    double zeta2 = kPi * kPi / 6.0;
    double zeta3 = 1.2020569031595943;
    double target = 16.0 * zeta2 / zeta3;
    CHECK(std::fabs(*pred.fiber_sum - target) <= *pred.tail_bound + 1e-9);
    CHECK(pred.c == *pred.fiber_sum);
    CHECK_FALSE(pred.omega.has_value());
}

TEST_CASE("truncated sums stabilize under doubling") {
    Setup s = mk(2, Boundary::DW_DZ, 2, 1);
    for (long M : {64L, 128L, 256L, 512L}) {
        double sM = fiber_sum_truncated(s, M);
        double s2M = fiber_sum_truncated(s, 2 * M);
        double tail = fiber_tail_bound(s, M);
        CHECK(s2M >= sM);
        CHECK(s2M - sM <= tail);
        CHECK(fiber_tail_bound(s, 2 * M) < tail);
    }

    Setup w = mk(2, Boundary::DW, 3, 1);
    for (long M : {64L, 256L}) {
        CHECK(fiber_sum_truncated(w, 2 * M) - fiber_sum_truncated(w, M) <=
              fiber_tail_bound(w, M));
    }
}

TEST_CASE("borderline boundary-w polarization has no supported prediction") {
    Prediction pred = leading_constant(mk(2, Boundary::DW, 2, 1));
    CHECK_FALSE(pred.supported);
    CHECK_THROWS_AS(predicted_count(pred, mk(2, Boundary::DW, 2, 1), 100.0),
                    std::invalid_argument);
}

TEST_CASE("predicted counts require B >= 2") {
    Setup s = mk(2, Boundary::DW_DZ, 1, 1);
    Prediction pred = leading_constant(s);
    CHECK_THROWS_AS(predicted_count(pred, s, 1.0), std::invalid_argument);
    double c = pred.c;
    CHECK(predicted_count(pred, s, 100.0) ==
          doctest::Approx(c * 100.0 * std::log(100.0)).epsilon(1e-12));
}

TEST_CASE("comparison rows pair exact counts with predictions") {
    Setup s = mk(2, Boundary::DW_DZ, 2, 1);
    auto rows = compare(s, {Int(100), Int(10000)});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].B == 100);
    CHECK(rows[1].B == 10000);
    for (const auto& r : rows) {
        CHECK(r.supported);
        CHECK(r.exact > 0);
        CHECK(r.ratio == doctest::Approx(r.exact.get_d() / r.predicted).epsilon(1e-12));
    }
    // convergence toward the prediction as B grows
    CHECK(std::fabs(rows[1].ratio - 1.0) < std::fabs(rows[0].ratio - 1.0));
}

TEST_CASE("borderline rows keep sweeps alive") {
    auto rows = compare(mk(2, Boundary::DW, 2, 1), {Int(100)});
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].supported);
    CHECK(rows[0].exact > 0);
}

TEST_CASE("fiber reports pair counts with their leading terms") {
    Setup s = mk(2, Boundary::DW, 3, 1);
    FiberKey t{1, 0, 1};
    auto rows = fiber_report(s, {t}, Int(10000));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].exact == 20001);
    CHECK(rows[0].predicted == doctest::Approx(20000.0).epsilon(1e-12));
    CHECK(std::fabs(rows[0].ratio - 1.0) <= 0.01);
}

TEST_CASE("fiber constants need a moving adjoint class") {
    CHECK_THROWS_AS(fiber_constant(mk(2, Boundary::DW_DZ, 1, 1), FiberKey{1, 0, 1}),
                    std::invalid_argument);
}
