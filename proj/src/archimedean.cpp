#include "torcount/archimedean.hpp"

#include "torcount/counting.hpp"
#include "torcount/height.hpp"
#include "torcount/invariants.hpp"

#include <cmath>

namespace torcount {

namespace {

void check_finite_measure(const Setup& s) {
    if (s.boundary == Boundary::DW) {
        if (!(s.l1() < 2 * s.l2()))
            throw std::invalid_argument(
                "archimedean density diverges for this boundary unless l1 < 2*l2");
    } else {
        if (!(s.l1() <= s.l2()))
            throw std::invalid_argument(
                "archimedean density diverges for this boundary unless l1 <= l2");
    }
}

QuadratureReport scale_report(QuadratureReport r, double factor) {
    r.value *= factor;
    r.est_error *= std::fabs(factor);
    return r;
}

double pow_li(double x, long e) {
    double r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

} // namespace

QuadratureReport omega_inf(const Setup& s, const QuadOptions& opt) {
    check_finite_measure(s);
    InvariantBundle inv = invariant_bundle(s);
    double a = rat_d(inv.a);

    if (s.boundary == Boundary::DW_DZ && s.l1() == s.l2()) {
        // density on the z = w = 0 stratum, one chart coordinate
        CubeIntegrand g;
        g.dim = 1;
        g.f = [&s, a](const double* t) {
            double jac = 1.0;
            double c0 = map_halfline(t[0], &jac);
            RealCoxTuple x{1, 1, c0, c0, 0, 0};
            return 8.0 * std::pow(height_real(s, x), -a) * jac;
        };
        return integrate(g, opt);
    }

    double e = rat_d(*inv.e);
    if (s.boundary == Boundary::DW_DZ) {
        // density on the z = 0 stratum, d = bc/a there
        CubeIntegrand g;
        g.dim = 2;
        g.f = [&s, a, e](const double* t) {
            double jac = 1.0;
            double c0 = map_halfline(t[0], &jac);
            double u = map_halfline(t[1], &jac);
            double w0 = std::pow(u, 1.0 / e);
            RealCoxTuple x{1, 1, c0, c0, 0, w0};
            return (8.0 / e) * std::pow(height_real(s, x), -a) * jac;
        };
        return integrate(g, opt);
    }

    long n = s.n;
    CubeIntegrand g;
    g.dim = 3;
    g.f = [&s, a, e, n](const double* t) {
        double jac = 1.0;
        double c0 = map_fullline(t[0], &jac);
        double z0 = map_fullline(t[1], &jac);
        double u = map_halfline(t[2], &jac);
        double w0 = std::pow(u, 1.0 / e);
        double zp = pow_li(z0, n + 1);
        RealCoxTuple xp{1, 1, c0, c0 + zp * w0, z0, w0};
        RealCoxTuple xm{1, 1, c0, c0 - zp * w0, z0, -w0};
        double gp = std::pow(height_real(s, xp), -a);
        double gm = std::pow(height_real(s, xm), -a);
        return (1.0 / e) * (gp + gm) * jac;
    };
    return integrate(g, opt);
}

QuadratureReport w_volume(const Setup& s, double B, const QuadOptions& opt) {
    if (!(B >= 2))
        throw std::invalid_argument("w_volume needs B >= 2");
    check_finite_measure(s);
    InvariantBundle inv = invariant_bundle(s);
    double a = rat_d(inv.a);
    double r = rat_d(s.l1()) / rat_d(s.l2());

    if (s.boundary == Boundary::DW) {
        // cell volume over the height-one box; the power substitution flattens
        // the max(|a|,|c|)^-(1+r) blowup at the origin
        double q = 3.0 / (2.0 - r) + 1.0;
        CubeIntegrand g;
        g.dim = 3;
        g.f = [&s, q](const double* t) {
            double xa = std::pow(t[0], q);
            double xc = std::pow(t[1], q);
            double xz = std::pow(t[2], q);
            double jac = q * q * q * std::pow(t[0] * t[1] * t[2], q - 1.0);
            return volume_V(s, xa, xc, xz, 1.0) * jac;
        };
        return scale_report(integrate(g, opt), 4.0 * std::pow(B, a));
    }

    if (s.l1() < s.l2()) {
        double q = 2.0 / (1.0 - r) + 1.0;
        CubeIntegrand g;
        g.dim = 2;
        g.f = [r, q](const double* t) {
            double xa = std::pow(t[0], q);
            double xc = std::pow(t[1], q);
            double jac = q * q * std::pow(t[0] * t[1], q - 1.0);
            return std::pow(std::max(xa, xc), -(1.0 + r)) * jac;
        };
        return scale_report(integrate(g, opt), 8.0 * std::pow(B, a));
    }

    // l1 = l2: log range of shells, constant shell integral
    CubeIntegrand g;
    g.dim = 1;
    g.f = [r](const double* t) {
        double jac = 1.0;
        double c0 = map_halfline(t[0], &jac);
        return 4.0 * std::pow(std::max(1.0, c0), -(1.0 + r)) * jac;
    };
    double l1 = rat_d(s.l1());
    double factor = 2.0 * std::pow(B, a) * std::log(B) / (l1 * static_cast<double>(s.n + 1));
    return scale_report(integrate(g, opt), factor);
}

CrosscheckReport omega_inf_crosscheck(const Setup& s, const QuadOptions& opt) {
    CrosscheckReport rep;
    rep.omega = omega_inf(s, opt); // also rejects the divergent ranges
    InvariantBundle inv = invariant_bundle(s);
    double a = rat_d(inv.a);
    double alpha = rat_d(*inv.alpha);
    rep.predicted = alpha / a * rep.omega.value;

    bool log_case = inv.b == 2;
    rep.B_values = log_case ? std::vector<double>{1e4, 1e8} : std::vector<double>{1e4};
    for (double B : rep.B_values) {
        rep.w_at_last_B = w_volume(s, B, opt);
        double scale = std::pow(B, a) * (log_case ? std::log(B) : 1.0);
        rep.scaled_w.push_back(rep.w_at_last_B.value / scale);
    }
    for (double w : rep.scaled_w) {
        double d = std::fabs(w - rep.predicted) / std::fabs(rep.predicted);
        rep.worst_rel_diff = std::max(rep.worst_rel_diff, d);
    }
    rep.pass = rep.worst_rel_diff <= rep.rel_tol;
    return rep;
}

} // namespace torcount
