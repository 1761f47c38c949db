#include "torcount/counting.hpp"

#include "torcount/invariants.hpp"
#include "torcount/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

namespace torcount {

namespace {

Int abs_i(const Int& v) { return v < 0 ? Int(-v) : v; }

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Integers congruent to r (mod m) in [lo, hi], m >= 1, 0 <= r < m.
Int progression_count(const Int& lo, const Int& hi, const Int& r, const Int& m) {
    if (hi < lo) return 0;
    return fdiv(hi - r, m) - fdiv(lo - 1 - r, m);
}

// Cox tuples (a,b,c,d,z,1) of height <= B in the cell over (a,c,z), counted in
// closed form. Requires gcd(a,c) = 1 and max{|a|,|c|,|z|} within coord_bound.
Int cell_count(const Setup& s, const Int& a, const Int& c, const Int& z, const Int& B) {
    Int M = std::max({abs_i(a), abs_i(c), abs_i(z)});
    Int T = bd_bound(s, B, M);
    if (T < 0) return 0;
    Int zpow = ipow(z, static_cast<unsigned long>(s.n + 1));

    if (a == 0) {
        // gcd forces |c| = 1; b is pinned to -c*z^(n+1) and d ranges freely
        Int b = -c * zpow;
        return abs_i(b) <= T ? Int(2 * T + 1) : Int(0);
    }

    Int m = abs_i(a);
    Int lo, hi;
    if (c == 0) {
        // |a| = 1 and d = a*z^(n+1); the d-bound no longer involves b
        if (abs_i(zpow) > T * m) return 0;
        lo = -T;
        hi = T;
    } else {
        // |b*c + z^(n+1)| <= T*|a| cut down to an interval in b
        Int lo_raw = -T * m - zpow, hi_raw = T * m - zpow;
        if (c > 0) {
            lo = cdiv(lo_raw, c);
            hi = fdiv(hi_raw, c);
        } else {
            lo = cdiv(hi_raw, c);
            hi = fdiv(lo_raw, c);
        }
        lo = std::max(lo, Int(-T));
        hi = std::min(hi, Int(T));
        if (lo > hi) return 0;
    }

    if (m == 1) return hi - lo + 1;
    // d integral iff b = -c^(-1) z^(n+1) (mod |a|); c is invertible as gcd(a,c)=1
    Int cinv;
    if (mpz_invert(cinv.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("cell without invertible c");
    Int r = (-cinv * zpow) % m;
    if (r < 0) r += m;
    return progression_count(lo, hi, r, m);
}

long to_long_checked(const Int& v, const char* what) {
    if (!v.fits_slong_p())
        throw std::invalid_argument(std::string(what) + " out of reachable range");
    return v.get_si();
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

} // namespace

FiberKey FiberKey::normalized(const Int& a, const Int& c, const Int& z) {
    if (a == 0 && c == 0 && z == 0)
        throw std::invalid_argument("fiber key (0,0,0)");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    FiberKey t{a / g, c / g, z / g};
    Int lead = t.a != 0 ? t.a : (t.c != 0 ? t.c : t.z);
    if (lead < 0) {
        t.a = -t.a;
        t.c = -t.c;
        t.z = -t.z;
    }
    return t;
}

bool FiberKey::operator<(const FiberKey& o) const {
    if (a != o.a) return a < o.a;
    if (c != o.c) return c < o.c;
    return z < o.z;
}

std::string FiberKey::str() const {
    return a.get_str() + ":" + c.get_str() + ":" + z.get_str();
}

CountResult enumerate_count(const Setup& s, const Int& B, const CountOptions& opt) {
    if (B < 1) throw std::invalid_argument("count needs B >= 1");
    long Mm = to_long_checked(coord_bound(s, B), "coordinate range");

    long n_cols = 2 * Mm + 1;
    std::vector<Int> col_sums(static_cast<std::size_t>(n_cols), Int(0));
    parallel_chunks(n_cols, opt.threads, [&](long long idx) {
        long a = static_cast<long>(idx) - Mm;
        Int sum = 0;
        for (long c = -Mm; c <= Mm; ++c) {
            if (gcd_ll(a, c) != 1) continue;
            if (s.boundary == Boundary::DW_DZ) {
                sum += cell_count(s, Int(a), Int(c), Int(1), B);
            } else {
                for (long z = -Mm; z <= Mm; ++z)
                    sum += cell_count(s, Int(a), Int(c), Int(z), B);
            }
        }
        col_sums[static_cast<std::size_t>(idx)] = sum;
    });

    Int raw = 0;
    for (const Int& v : col_sums) raw += v;

    CountResult res;
    res.raw_tuple_count = raw;
    if (s.boundary == Boundary::DW) {
        if (raw % 2 != 0)
            throw InternalError("DW tuple count must be even (sign involution)");
        res.count = raw / 2;
    } else {
        res.count = raw;
    }
    return res;
}

CountResult naive_count(const Setup& s, const Int& B, const CountOptions& opt) {
    if (B < 1) throw std::invalid_argument("count needs B >= 1");
    long Mm = to_long_checked(coord_bound(s, B), "coordinate range");
    long long Nm = [&] {
        Int t = bd_bound(s, B, Int(1));
        if (!t.fits_slong_p())
            throw std::invalid_argument("b,d range out of reachable range");
        return static_cast<long long>(t.get_si());
    }();

    // all per-iteration arithmetic must fit long long
    {
        double worst = std::pow(static_cast<double>(Mm), s.n + 1) +
                       static_cast<double>(Nm) * Mm;
        if (worst > 4e18) throw std::invalid_argument("scan range too large for direct loop");
    }

    long long budget = opt.work_budget;
    std::atomic<long long> spent{0};
    std::atomic<bool> exhausted{false};

    long z_lo = (s.boundary == Boundary::DW) ? -Mm : 1;
    long z_hi = (s.boundary == Boundary::DW) ? Mm : 1;

    long n_cols = 2 * Mm + 1;
    std::vector<Int> col_raw(static_cast<std::size_t>(n_cols), Int(0));
    parallel_chunks(n_cols, opt.threads, [&](long long idx) {
        long a = static_cast<long>(idx) - Mm;
        long long local_spent = 0;
        Int raw = 0;
        auto tick = [&](long long k) {
            local_spent += k;
            if (local_spent >= 1 << 16) {
                if (spent.fetch_add(local_spent) + local_spent > budget)
                    exhausted.store(true);
                local_spent = 0;
            }
        };
        for (long c = -Mm; c <= Mm && !exhausted.load(std::memory_order_relaxed); ++c) {
            for (long z = z_lo; z <= z_hi; ++z) {
                long long zpow = 1;
                for (int i = 0; i <= s.n; ++i) zpow *= z;
                if (a != 0) {
                    for (long long b = -Nm; b <= Nm; ++b) {
                        tick(1);
                        long long t = b * c + zpow;
                        if (t % a != 0) continue;
                        CoxTuple x{Int(a), Int(static_cast<long>(b)), Int(c),
                                   Int(static_cast<long>(t / a)), Int(z), Int(1)};
                        if (is_integral_point(s, x) && height_leq(s, x, B)) raw += 1;
                    }
                } else {
                    if (c == 0 || zpow % c != 0) continue;
                    long long b0 = -zpow / c;
                    for (long long d = -Nm; d <= Nm; ++d) {
                        tick(1);
                        CoxTuple x{Int(0), Int(static_cast<long>(b0)), Int(c),
                                   Int(static_cast<long>(d)), Int(z), Int(1)};
                        if (is_integral_point(s, x) && height_leq(s, x, B)) raw += 1;
                    }
                }
            }
        }
        spent.fetch_add(local_spent);
        col_raw[static_cast<std::size_t>(idx)] = raw;
    });

    if (exhausted.load() || spent.load() > budget)
        throw WorkBudgetError("naive scan exceeded the work budget");

    Int raw = 0;
    for (const Int& v : col_raw) raw += v;

    CountResult res;
    res.raw_tuple_count = raw;
    if (s.boundary == Boundary::DW) {
        if (raw % 2 != 0)
            throw InternalError("DW tuple count must be even (sign involution)");
        res.count = raw / 2;
    } else {
        res.count = raw;
    }
    return res;
}

Int fiber_count(const Setup& s, const FiberKey& t, const Int& B) {
    if (B < 1) throw std::invalid_argument("count needs B >= 1");
    FiberKey k = FiberKey::normalized(t.a, t.c, t.z);
    Int g;
    mpz_gcd(g.get_mpz_t(), k.a.get_mpz_t(), k.c.get_mpz_t());
    if (g != 1)
        throw std::invalid_argument("empty fiber: gcd(a,c) != 1 at " + k.str());
    if (s.boundary == Boundary::DW_DZ) {
        if (abs_i(k.z) != 1)
            throw std::invalid_argument("empty fiber: z != +-1 at " + k.str());
        if (k.z < 0) {
            k.a = -k.a;
            k.c = -k.c;
            k.z = 1;
        }
    }
    Int Mm = coord_bound(s, B);
    if (std::max({abs_i(k.a), abs_i(k.c), abs_i(k.z)}) > Mm) return 0;
    return cell_count(s, k.a, k.c, k.z, B);
}

namespace {

double l_ratio(const Setup& s) { return rat_d(s.l1()) / rat_d(s.l2()); }

double pow_int_d(double x, long e) {
    double r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

} // namespace

double volume_V(const Setup& s, double a, double c, double z, double B) {
    if (B <= 0) throw std::invalid_argument("volume_V needs B > 0");
    if (a == 0) std::swap(a, c);
    if (a == 0) throw std::invalid_argument("volume_V undefined at a = c = 0");
    double M = std::max({std::fabs(a), std::fabs(c), std::fabs(z)});
    double Z = std::pow(B, 1.0 / rat_d(s.l2())) * std::pow(M, -l_ratio(s));
    double zpow = pow_int_d(z, s.n + 1);
    double am = std::fabs(a);
    if (c == 0) return std::fabs(zpow) <= Z * am ? 2 * Z / am : 0.0;
    double e1 = (-Z * am - zpow) / c, e2 = (Z * am - zpow) / c;
    double lo = std::max(std::min(e1, e2), -Z);
    double hi = std::min(std::max(e1, e2), Z);
    return hi > lo ? (hi - lo) / am : 0.0;
}

double volume_Vprime(const Setup& s, double a, double c, double z) {
    if (a == 0) std::swap(a, c);
    if (a == 0) throw std::invalid_argument("volume_Vprime undefined at a = c = 0");
    double M = std::max({std::fabs(a), std::fabs(c), std::fabs(z)});
    // length{|b| <= Z*, |b c / a| <= Z*}/|a| with Z* = M^(-l1/l2)
    return 2 * std::pow(M, -l_ratio(s)) / std::max(std::fabs(a), std::fabs(c));
}

double fiber_constant(const Setup& s, const FiberKey& t) {
    if (adjoint_type(s) != AdjointType::MOVING)
        throw std::invalid_argument("fiber asymptotics need a moving adjoint class");
    FiberKey k = FiberKey::normalized(t.a, t.c, t.z);
    Int g;
    mpz_gcd(g.get_mpz_t(), k.a.get_mpz_t(), k.c.get_mpz_t());
    if (g != 1)
        throw std::invalid_argument("empty fiber: gcd(a,c) != 1 at " + k.str());
    if (s.boundary == Boundary::DW_DZ && abs_i(k.z) != 1)
        throw std::invalid_argument("empty fiber: z != +-1 at " + k.str());
    return volume_Vprime(s, k.a.get_d(), k.c.get_d(), k.z.get_d());
}

std::vector<FiberKey> fiber_keys_upto(const Setup& s, long limit) {
    if (limit < 1) throw std::invalid_argument("fiber_keys_upto needs limit >= 1");
    std::vector<FiberKey> keys;
    if (s.boundary == Boundary::DW_DZ) {
        for (long a = -limit; a <= limit; ++a)
            for (long c = -limit; c <= limit; ++c) {
                if (gcd_ll(a, c) != 1) continue;
                keys.push_back(FiberKey::normalized(Int(a), Int(c), Int(1)));
            }
    } else {
        for (long a = -limit; a <= limit; ++a)
            for (long c = -limit; c <= limit; ++c) {
                if (gcd_ll(a, c) != 1) continue;
                for (long z = -limit; z <= limit; ++z)
                    keys.push_back(FiberKey::normalized(Int(a), Int(c), Int(z)));
            }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

} // namespace torcount
