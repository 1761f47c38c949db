#include "torcount/predict.hpp"

#include <cmath>

namespace torcount {

namespace {

std::vector<long> totients_upto(long M) {
    std::vector<long> phi(static_cast<std::size_t>(M) + 1);
    for (long i = 0; i <= M; ++i) phi[static_cast<std::size_t>(i)] = i;
    for (long i = 2; i <= M; ++i) {
        if (phi[static_cast<std::size_t>(i)] != i) continue; // not prime
        for (long j = i; j <= M; j += i)
            phi[static_cast<std::size_t>(j)] -= phi[static_cast<std::size_t>(j)] / i;
    }
    return phi;
}

void check_moving(const Setup& s) {
    if (adjoint_type(s) != AdjointType::MOVING)
        throw std::invalid_argument("fiber sums apply to moving adjoint classes only");
}

} // namespace

double fiber_sum_truncated(const Setup& s, long M) {
    check_moving(s);
    if (M < 1) throw std::invalid_argument("truncation must be >= 1");
    double r = rat_d(s.l1()) / rat_d(s.l2());
    std::vector<long> phi = totients_upto(M);

    if (s.boundary == Boundary::DW_DZ) {
        // 8 phi(m) primitive (a,c) pairs on the shell max(|a|,|c|) = m, each
        // fiber constant 2 m^-(1+r)
        double S = 0;
        for (long m = 1; m <= M; ++m)
            S += 8.0 * phi[static_cast<std::size_t>(m)] * 2.0 * std::pow(m, -(1.0 + r));
        return S;
    }

    // DW: same shells in (a,c), z summed over |z| <= M through the prefix sums
    // H(x) = sum_{j<=x} j^-r
    std::vector<double> H(static_cast<std::size_t>(M) + 1, 0.0);
    for (long j = 1; j <= M; ++j)
        H[static_cast<std::size_t>(j)] = H[static_cast<std::size_t>(j - 1)] + std::pow(j, -r);
    double S = 0;
    for (long m = 1; m <= M; ++m) {
        double inner = (2.0 * m + 1.0) * std::pow(m, -r) +
                       2.0 * (H[static_cast<std::size_t>(M)] - H[static_cast<std::size_t>(m)]);
        S += 8.0 * phi[static_cast<std::size_t>(m)] / static_cast<double>(m) * inner;
    }
    return S;
}

double fiber_tail_bound(const Setup& s, long M, double safety) {
    check_moving(s);
    if (M < 1) throw std::invalid_argument("truncation must be >= 1");
    double r = rat_d(s.l1()) / rat_d(s.l2());
    double Md = static_cast<double>(M);
    if (s.boundary == Boundary::DW_DZ)
        return safety * 16.0 * std::pow(Md, 1.0 - r) / (r - 1.0);
    double t1 = 8.0 * (3.0 + 2.0 / (r - 1.0)) * std::pow(Md, 2.0 - r) / (r - 2.0);
    double t2 = 16.0 * std::pow(Md, 2.0 - r) / (r - 1.0);
    return safety * (t1 + t2);
}

Prediction leading_constant(const Setup& s, const PredictOptions& opt) {
    Prediction pred;
    pred.inv = invariant_bundle(s);

    if (pred.inv.adjoint_type == AdjointType::MOVING) {
        long M = opt.initial_truncation;
        double S = fiber_sum_truncated(s, M);
        double tail = fiber_tail_bound(s, M, opt.tail_safety);
        while (tail > opt.tail_rel * S) {
            if (2 * M > opt.max_truncation)
                throw WorkBudgetError("fiber sum needs a truncation beyond the cap");
            M *= 2;
            S = fiber_sum_truncated(s, M);
            tail = fiber_tail_bound(s, M, opt.tail_safety);
        }
        double S2 = fiber_sum_truncated(s, 2 * M);
        if (std::fabs(S2 - S) > tail)
            throw InternalError("fiber sum moved more than its tail bound under doubling");
        pred.fiber_sum = S2;
        pred.truncation_M = 2 * M;
        pred.tail_bound = fiber_tail_bound(s, 2 * M, opt.tail_safety);
        pred.c = S2;
        return pred;
    }

    if (s.boundary == Boundary::DW && s.l1() == 2 * s.l2()) {
        pred.supported = false;
        return pred;
    }

    pred.omega = omega_inf(s, opt.quad);
    pred.euler = euler_product_limit();
    double a = rat_d(pred.inv.a);
    double alpha = rat_d(*pred.inv.alpha);
    pred.c = alpha / a * pred.omega->value * pred.euler;
    return pred;
}

double predicted_count(const Prediction& pred, const Setup&, double B) {
    if (!(B >= 2))
        throw std::invalid_argument("predicted counts need B >= 2");
    if (!pred.supported)
        throw std::invalid_argument("no proved asymptotic for this setup");
    double a = rat_d(pred.inv.a);
    double v = pred.c * std::pow(B, a);
    if (pred.inv.b == 2) v *= std::log(B);
    return v;
}

double predicted_count(const Setup& s, double B, const PredictOptions& opt) {
    return predicted_count(leading_constant(s, opt), s, B);
}

std::vector<CompareRow> compare(const Setup& s, const std::vector<Int>& Bs,
                                const PredictOptions& popt, const CountOptions& copt) {
    Prediction pred = leading_constant(s, popt);
    std::vector<CompareRow> rows;
    for (const Int& B : Bs) {
        CompareRow row;
        row.B = B;
        row.exact = enumerate_count(s, B, copt).count;
        row.supported = pred.supported;
        if (pred.supported) {
            row.predicted = predicted_count(pred, s, B.get_d());
            if (row.predicted > 0) row.ratio = row.exact.get_d() / row.predicted;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<FiberRow> fiber_report(const Setup& s, const std::vector<FiberKey>& ts,
                                   const Int& B) {
    std::vector<FiberRow> rows;
    double inv_l2 = 1.0 / rat_d(s.l2());
    for (const FiberKey& t : ts) {
        FiberRow row;
        row.t = FiberKey::normalized(t.a, t.c, t.z);
        row.exact = fiber_count(s, row.t, B);
        row.predicted = fiber_constant(s, row.t) * std::pow(B.get_d(), inv_l2);
        if (row.predicted > 0) row.ratio = row.exact.get_d() / row.predicted;
        rows.push_back(row);
    }
    return rows;
}

} // namespace torcount
