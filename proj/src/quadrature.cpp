#include "torcount/quadrature.hpp"

#include "torcount/parallel.hpp"
#include "torcount/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace torcount {

namespace {

double eval_finite(const CubeIntegrand& g, const double* x) {
    double v = g.f(x);
    return std::isfinite(v) ? v : 0.0;
}

// Gauss-Kronrod 7/15 abscissae and weights on [-1,1]. Gauss weights attach to
// every second Kronrod node plus the center.
constexpr std::array<double, 8> gk_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> gk_wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gk_wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo = 0, hi = 0;
    double value = 0, err = 0;
    long long id = 0;
};

Segment gk15(const CubeIntegrand& g, double lo, double hi, long long id) {
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double k = 0, gauss = 0;
    for (int i = 0; i < 8; ++i) {
        double xr = mid + half * gk_x[i];
        double fr = eval_finite(g, &xr);
        if (i == 7) {
            k += gk_wk[i] * fr;
            gauss += gk_wg[3] * fr;
            break;
        }
        double xl = mid - half * gk_x[i];
        double fl = eval_finite(g, &xl);
        k += gk_wk[i] * (fr + fl);
        if (i % 2 == 1) gauss += gk_wg[i / 2] * (fr + fl);
    }
    Segment s;
    s.lo = lo;
    s.hi = hi;
    s.value = half * k;
    s.err = half * std::fabs(k - gauss);
    s.id = id;
    return s;
}

struct Region {
    std::array<double, 4> center{}, halfwidth{};
    double value = 0, err = 0;
    int split_dim = 0;
    long long id = 0;
};

// Genz-Malik degree-7 rule with embedded degree-5 error estimate, dim 2..4.
struct GenzMalik {
    int dim;
    double l2 = std::sqrt(9.0 / 70.0);
    double l4 = std::sqrt(9.0 / 10.0);
    double l5 = std::sqrt(9.0 / 19.0);
    double w1, w2, w3, w4, w5, we1, we2, we3, we4;
    long long evals_per_region;

    explicit GenzMalik(int d) : dim(d) {
        double D = d;
        w1 = (12824.0 - 9120.0 * D + 400.0 * D * D) / 19683.0;
        w2 = 980.0 / 6561.0;
        w3 = (1820.0 - 400.0 * D) / 19683.0;
        w4 = 200.0 / 19683.0;
        w5 = (6859.0 / 19683.0) / std::pow(2.0, D);
        we1 = (729.0 - 950.0 * D + 50.0 * D * D) / 729.0;
        we2 = 245.0 / 486.0;
        we3 = (265.0 - 100.0 * D) / 1458.0;
        we4 = 25.0 / 729.0;
        evals_per_region = 1 + 4 * d + 2LL * d * (d - 1) + (1LL << d);
    }

    void apply(const CubeIntegrand& g, Region& r) const {
        std::array<double, 4> x = r.center;
        double f0 = eval_finite(g, x.data());
        double sum2 = 0, sum3 = 0, sum4 = 0, sum5 = 0;
        std::array<double, 4> diff{};

        for (int i = 0; i < dim; ++i) {
            double ci = r.center[i], hi = r.halfwidth[i];
            x[i] = ci - l2 * hi;
            double a = eval_finite(g, x.data());
            x[i] = ci + l2 * hi;
            double b = eval_finite(g, x.data());
            x[i] = ci - l4 * hi;
            double c = eval_finite(g, x.data());
            x[i] = ci + l4 * hi;
            double d = eval_finite(g, x.data());
            x[i] = ci;
            sum2 += a + b;
            sum3 += c + d;
            // fourth divided difference along axis i, lambda2^2/lambda4^2 = 1/7
            diff[i] = std::fabs(a + b - 2 * f0 - (c + d - 2 * f0) / 7.0);
        }
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        x[i] = r.center[i] + si * l4 * r.halfwidth[i];
                        x[j] = r.center[j] + sj * l4 * r.halfwidth[j];
                        sum4 += eval_finite(g, x.data());
                        x[i] = r.center[i];
                        x[j] = r.center[j];
                    }
        for (int corner = 0; corner < (1 << dim); ++corner) {
            for (int i = 0; i < dim; ++i) {
                int s = (corner >> i) & 1 ? 1 : -1;
                x[i] = r.center[i] + s * l5 * r.halfwidth[i];
            }
            sum5 += eval_finite(g, x.data());
        }

        double vol = 1;
        for (int i = 0; i < dim; ++i) vol *= 2 * r.halfwidth[i];
        double v7 = vol * (w1 * f0 + w2 * sum2 + w3 * sum3 + w4 * sum4 + w5 * sum5);
        double v5 = vol * (we1 * f0 + we2 * sum2 + we3 * sum3 + we4 * sum4);
        r.value = v7;
        r.err = std::fabs(v7 - v5);
        r.split_dim = 0;
        for (int i = 1; i < dim; ++i)
            if (diff[i] > diff[r.split_dim]) r.split_dim = i;
    }
};

template <class Item>
struct WorstFirst {
    // max-heap on error, oldest id first on ties, so the refinement order and
    // hence the result never depend on heap internals
    bool operator()(const Item& a, const Item& b) const {
        if (a.err != b.err) return a.err < b.err;
        return a.id > b.id;
    }
};

QuadratureReport adaptive_1d(const CubeIntegrand& g, const QuadOptions& opt) {
    std::priority_queue<Segment, std::vector<Segment>, WorstFirst<Segment>> heap;
    Segment root = gk15(g, 0.0, 1.0, 0);
    heap.push(root);
    long long next_id = 1, evals = 15;
    double total = root.value, toterr = root.err;

    while (evals + 30 <= opt.max_evals &&
           toterr > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
        Segment w = heap.top();
        heap.pop();
        total -= w.value;
        toterr -= w.err;
        double mid = 0.5 * (w.lo + w.hi);
        Segment a = gk15(g, w.lo, mid, next_id++);
        Segment b = gk15(g, mid, w.hi, next_id++);
        evals += 30;
        total += a.value + b.value;
        toterr += a.err + b.err;
        heap.push(a);
        heap.push(b);
    }

    std::vector<Segment> leaves;
    while (!heap.empty()) {
        leaves.push_back(heap.top());
        heap.pop();
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const Segment& a, const Segment& b) { return a.id < b.id; });
    QuadratureReport rep;
    for (const Segment& s : leaves) {
        rep.value += s.value;
        rep.est_error += s.err;
    }
    rep.method = QuadMethod::ADAPTIVE;
    rep.cells_or_samples = static_cast<long long>(leaves.size());
    return rep;
}

QuadratureReport adaptive_nd(const CubeIntegrand& g, const QuadOptions& opt) {
    GenzMalik rule(g.dim);
    Region root;
    for (int i = 0; i < g.dim; ++i) {
        root.center[i] = 0.5;
        root.halfwidth[i] = 0.5;
    }
    root.id = 0;
    rule.apply(g, root);
    long long next_id = 1, evals = rule.evals_per_region;
    std::priority_queue<Region, std::vector<Region>, WorstFirst<Region>> heap;
    heap.push(root);
    double total = root.value, toterr = root.err;

    while (evals + 2 * rule.evals_per_region <= opt.max_evals &&
           toterr > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
        Region w = heap.top();
        heap.pop();
        total -= w.value;
        toterr -= w.err;

        int sd = w.split_dim;
        Region a = w, b = w;
        a.halfwidth[sd] = b.halfwidth[sd] = 0.5 * w.halfwidth[sd];
        a.center[sd] = w.center[sd] - a.halfwidth[sd];
        b.center[sd] = w.center[sd] + b.halfwidth[sd];
        a.id = next_id++;
        b.id = next_id++;
        rule.apply(g, a);
        rule.apply(g, b);
        evals += 2 * rule.evals_per_region;
        total += a.value + b.value;
        toterr += a.err + b.err;
        heap.push(a);
        heap.push(b);
    }

    std::vector<Region> leaves;
    while (!heap.empty()) {
        leaves.push_back(heap.top());
        heap.pop();
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const Region& a, const Region& b) { return a.id < b.id; });
    QuadratureReport rep;
    for (const Region& r : leaves) {
        rep.value += r.value;
        rep.est_error += r.err;
    }
    rep.method = QuadMethod::ADAPTIVE;
    rep.cells_or_samples = static_cast<long long>(leaves.size());
    return rep;
}

std::uint64_t splitmix_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

QuadratureReport integrate_adaptive(const CubeIntegrand& g, const QuadOptions& opt) {
    if (g.dim < 1 || g.dim > 4)
        throw std::invalid_argument("adaptive cubature supports dim 1..4");
    return g.dim == 1 ? adaptive_1d(g, opt) : adaptive_nd(g, opt);
}

QuadratureReport integrate_monte_carlo(const CubeIntegrand& g, const QuadOptions& opt) {
    if (g.dim < 1 || g.dim > 4)
        throw std::invalid_argument("Monte Carlo sampling supports dim 1..4");
    if (opt.mc_samples < 1)
        throw std::invalid_argument("Monte Carlo needs at least one sample");
    const long long batch = 65536;
    long long n_batches = (opt.mc_samples + batch - 1) / batch;
    std::vector<double> sums(static_cast<std::size_t>(n_batches), 0.0);
    std::vector<double> sqsums(static_cast<std::size_t>(n_batches), 0.0);

    parallel_chunks(n_batches, opt.threads, [&](long long bi) {
        long long lo = bi * batch;
        long long hi = std::min(lo + batch, opt.mc_samples);
        double s = 0, s2 = 0;
        double x[4];
        for (long long i = lo; i < hi; ++i) {
            std::uint64_t state =
                opt.seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(i + 1));
            for (int j = 0; j < g.dim; ++j) {
                std::uint64_t bits = splitmix_next(state);
                x[j] = (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
            }
            double v = eval_finite(g, x);
            s += v;
            s2 += v * v;
        }
        sums[static_cast<std::size_t>(bi)] = s;
        sqsums[static_cast<std::size_t>(bi)] = s2;
    });

    double sum = 0, sq = 0;
    for (long long bi = 0; bi < n_batches; ++bi) {
        sum += sums[static_cast<std::size_t>(bi)];
        sq += sqsums[static_cast<std::size_t>(bi)];
    }
    double n = static_cast<double>(opt.mc_samples);
    double mean = sum / n;
    double var = n > 1 ? std::max(0.0, (sq - n * mean * mean) / (n - 1)) : 0.0;

    QuadratureReport rep;
    rep.value = mean;
    rep.est_error = std::sqrt(var / n);
    rep.method = QuadMethod::MONTE_CARLO;
    rep.cells_or_samples = opt.mc_samples;
    rep.seed = opt.seed;
    return rep;
}

QuadratureReport integrate(const CubeIntegrand& g, const QuadOptions& opt) {
    return opt.method == QuadMethod::ADAPTIVE ? integrate_adaptive(g, opt)
                                              : integrate_monte_carlo(g, opt);
}

double map_halfline(double t, double* jac) {
    double s = 1.0 - t;
    *jac *= 1.0 / (s * s);
    return t / s;
}

double map_fullline(double t, double* jac) {
    double s = 2.0 * t - 1.0;
    double d = 1.0 - std::fabs(s);
    *jac *= 2.0 / (d * d);
    return s / d;
}

} // namespace torcount
