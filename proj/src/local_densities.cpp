#include "torcount/local_densities.hpp"

#include <cmath>
#include <numbers>

namespace torcount {

namespace {

void check_fp_args(long n, long p, bool need_cap) {
    if (n < 2) throw std::invalid_argument("family parameter n must be >= 2");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (need_cap && p > fp_bruteforce_cap())
        throw std::invalid_argument("p exceeds the brute-force cap");
}

long powmod(long base, long exp, long p) {
    long r = 1, b = ((base % p) + p) % p;
    for (long i = 0; i < exp; ++i) r = r * b % p;
    return r;
}

// Solutions (b,d) of a*d - b*c = r over F_p; the pair (0,0) is dropped when
// exclude_origin is set (it solves the equation exactly when r = 0).
long long bd_solutions(long p, long a, long c, long r, bool exclude_origin) {
    long long cnt;
    if (a != 0 || c != 0)
        cnt = p;
    else
        cnt = (r == 0) ? static_cast<long long>(p) * p : 0;
    if (exclude_origin && r == 0) cnt -= 1;
    return cnt;
}

// Torsor points with w in [w_lo, p) and z in [z_lo, p), grouped by (a,c,z,w).
long long torsor_subset_acz(long n, long p, long w_lo, long z_lo) {
    long long total = 0;
    for (long z = z_lo; z < p; ++z) {
        long zp = powmod(z, n + 1, p);
        for (long w = w_lo; w < p; ++w) {
            long r = static_cast<long>(static_cast<long long>(zp) * w % p);
            for (long a = 0; a < p; ++a)
                for (long c = 0; c < p; ++c) {
                    if (a == 0 && c == 0 && z == 0) continue;
                    total += bd_solutions(p, a, c, r, w == 0);
                }
        }
    }
    return total;
}

// Same subset, grouped by (b,d,z,w) and solved in (a,c). Only valid off
// w = 0, where the (b,d,w) != 0 exclusion is automatic.
long long torsor_subset_bdz(long n, long p, long z_lo) {
    long long total = 0;
    for (long z = z_lo; z < p; ++z) {
        long zp = powmod(z, n + 1, p);
        for (long w = 1; w < p; ++w) {
            long r = static_cast<long>(static_cast<long long>(zp) * w % p);
            for (long b = 0; b < p; ++b)
                for (long d = 0; d < p; ++d) {
                    long long cnt;
                    if (b != 0 || d != 0)
                        cnt = p;
                    else
                        cnt = (r == 0) ? static_cast<long long>(p) * p : 0;
                    if (z == 0 && r == 0) cnt -= 1; // drop (a,c,z) = (0,0,0)
                    total += cnt;
                }
        }
    }
    return total;
}

Int exact_quotient(long long num, long long den, const char* what) {
    if (num % den != 0)
        throw InternalError(std::string(what) + " not divisible by the torus order");
    return Int(static_cast<long>(num / den));
}

} // namespace

long fp_bruteforce_cap() { return 97; }

Int torsor_count_fp(long n, long p) {
    check_fp_args(n, p, true);
    return Int(static_cast<long>(torsor_subset_acz(n, p, 0, 0)));
}

Int x_count_fp(long n, long p) {
    check_fp_args(n, p, false);
    Int pp(p);
    if (p > fp_bruteforce_cap())
        return pp * pp * pp + 2 * pp * pp + 2 * pp + 1;
    long long den = static_cast<long long>(p - 1) * (p - 1);
    return exact_quotient(torsor_subset_acz(n, p, 0, 0), den, "point count");
}

Int u_count_fp(long n, Boundary b, long p) {
    check_fp_args(n, p, false);
    Int pp(p);
    if (p > fp_bruteforce_cap())
        return b == Boundary::DW ? Int(pp * pp * pp + pp * pp) : Int(pp * pp * pp - pp);
    long z_lo = (b == Boundary::DW_DZ) ? 1 : 0;
    long long route_a = torsor_subset_acz(n, p, 1, z_lo);
    long long route_b = torsor_subset_bdz(n, p, z_lo);
    if (route_a != route_b)
        throw InternalError("torsor subset counts disagree between groupings");
    long long den = static_cast<long long>(p - 1) * (p - 1);
    return exact_quotient(route_a, den, "point count");
}

int lambda_exponent(Boundary b) {
    // rank of the Picard group of the open part: 1 with only {w=0} removed,
    // 0 once {z=0} joins the boundary
    return b == Boundary::DW ? 1 : 0;
}

Rat omega_p(long n, Boundary b, long p) {
    Int u = u_count_fp(n, b, p);
    Rat w(u);
    w /= Rat(ipow(Int(p), 3));
    if (lambda_exponent(b) == 1) w *= make_rat(p - 1, p);
    return w;
}

LocalDensity local_density(long n, Boundary b, long p) {
    LocalDensity d;
    d.p = p;
    d.x_count = x_count_fp(n, p);
    d.u_count = u_count_fp(n, b, p);
    d.lambda_exponent = lambda_exponent(b);
    d.omega = omega_p(n, b, p);
    return d;
}

double euler_product_limit() { return 6.0 / (std::numbers::pi * std::numbers::pi); }

double truncated_euler(long P) {
    double prod = 1.0;
    for (long p : primes_upto(P))
        prod *= 1.0 - 1.0 / (static_cast<double>(p) * p);
    return prod;
}

std::vector<long> primes_upto(long P) {
    std::vector<long> out;
    if (P < 2) return out;
    std::vector<char> composite(static_cast<std::size_t>(P) + 1, 0);
    for (long i = 2; i <= P; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= P; j += i) composite[static_cast<std::size_t>(j)] = 1;
    }
    return out;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace torcount
