#include "torcount/height.hpp"

#include <algorithm>
#include <cmath>

namespace torcount {

namespace {

// k*l1, k*l2, k*(l1+n*l2) as plain integers (k = height_scale_k).
struct ScaledExponents {
    long k, e1, e2, e3;
};

long rat_to_long(const Rat& r, const char* what) {
    if (r.get_den() != 1) throw std::logic_error(std::string(what) + ": not an integer");
    if (!r.get_num().fits_slong_p())
        throw std::invalid_argument(std::string(what) + ": exponent out of range");
    return r.get_num().get_si();
}

ScaledExponents scaled_exponents(const Setup& s) {
    Int k;
    mpz_lcm(k.get_mpz_t(), s.l1().get_den().get_mpz_t(), s.l2().get_den().get_mpz_t());
    if (!k.fits_slong_p())
        throw std::invalid_argument("polarization denominators too large");
    ScaledExponents e;
    e.k = k.get_si();
    e.e1 = rat_to_long(Rat(k) * s.l1(), "k*l1");
    e.e2 = rat_to_long(Rat(k) * s.l2(), "k*l2");
    e.e3 = e.e1 + s.n * e.e2;
    return e;
}

Int abs_i(const Int& v) { return v < 0 ? Int(-v) : v; }

} // namespace

long height_scale_k(const Setup& s) { return scaled_exponents(s).k; }

bool is_integral_point(const Setup& s, const CoxTuple& x) {
    if (abs_i(x.w) != 1) return false;
    if (s.boundary == Boundary::DW_DZ && abs_i(x.z) != 1) return false;
    Int zpow = ipow(x.z, static_cast<unsigned long>(s.n + 1));
    if (x.a * x.d - x.b * x.c != zpow * x.w) return false;
    Int g1, g2;
    mpz_gcd(g1.get_mpz_t(), x.a.get_mpz_t(), x.c.get_mpz_t());
    mpz_gcd(g1.get_mpz_t(), g1.get_mpz_t(), x.z.get_mpz_t());
    if (g1 != 1) return false;
    mpz_gcd(g2.get_mpz_t(), x.b.get_mpz_t(), x.d.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), x.w.get_mpz_t());
    return g2 == 1;
}

bool height_leq(const Setup& s, const CoxTuple& x, const Int& B) {
    if (B < 0) return false;
    ScaledExponents e = scaled_exponents(s);
    Int M = std::max({abs_i(x.a), abs_i(x.c), abs_i(x.z)});
    Int N = std::max(abs_i(x.b), abs_i(x.d));
    Int W = abs_i(x.w);
    Int Bk = ipow(B, static_cast<unsigned long>(e.k));
    Int t1 = ipow(M, static_cast<unsigned long>(e.e1)) * ipow(N, static_cast<unsigned long>(e.e2));
    if (t1 > Bk) return false;
    Int t2 = ipow(M, static_cast<unsigned long>(e.e3)) * ipow(W, static_cast<unsigned long>(e.e2));
    return t2 <= Bk;
}

double height_real(const Setup& s, const RealCoxTuple& x) {
    double l1 = rat_d(s.l1()), l2 = rat_d(s.l2());
    double M = std::max({std::fabs(x.a), std::fabs(x.c), std::fabs(x.z)});
    double N = std::max(std::fabs(x.b), std::fabs(x.d));
    double t1 = std::pow(M, l1) * std::pow(N, l2);
    double t2 = std::pow(M, l1 + s.n * l2) * std::pow(std::fabs(x.w), l2);
    return std::max(t1, t2);
}

Int coord_bound(const Setup& s, const Int& B) {
    if (B < 1) return 0;
    ScaledExponents e = scaled_exponents(s);
    Int Bk = ipow(B, static_cast<unsigned long>(e.k));
    return iroot_floor(Bk, static_cast<unsigned long>(e.e3));
}

Int bd_bound(const Setup& s, const Int& B, const Int& M) {
    if (M < 1) throw std::invalid_argument("bd_bound needs M >= 1");
    if (B < 1) throw std::invalid_argument("bd_bound needs B >= 1");
    ScaledExponents e = scaled_exponents(s);
    Int Bk = ipow(B, static_cast<unsigned long>(e.k));
    Int Me1 = ipow(M, static_cast<unsigned long>(e.e1));
    // N^e2 <= Bk / Me1 as rationals iff N^e2 <= floor(Bk / Me1)
    Int q = Bk / Me1;
    return iroot_floor(q, static_cast<unsigned long>(e.e2));
}

} // namespace torcount
