#include "addison/quad.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace addison {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = 0.5 * std::numbers::pi;

double checked(const RealFn& f, double x) {
    double y = f(x);
    if (!std::isfinite(y))
        throw NumericFailure("integrand is not finite at x = " + std::to_string(x), {}, x);
    return y;
}

// Tanh-sinh on [a, b]. Nodes are placed by their distance to the nearer
// endpoint so that points next to an endpoint never round onto it.
Eval tanh_sinh(const RealFn& f, double a, double b, double tol, int max_level = 9) {
    const double c = 0.5 * (a + b), d = 0.5 * (b - a);
    const double t_max = 4.0;

    auto node_sum = [&](double h, int start, int step, double& abs_sum, std::int64_t& evals) {
        double s = 0.0;
        for (int k = start;; k += step) {
            double t = k * h;
            if (t > t_max) break;
            double u = kHalfPi * std::sinh(t);
            double ch = std::cosh(u);
            double w = kHalfPi * std::cosh(t) / (ch * ch);
            double off = 2.0 * d / (1.0 + std::exp(2.0 * u));  // distance to the endpoint
            if (k == 0) {
                double y = checked(f, c);
                s += d * w * y;
                abs_sum += std::abs(d * w * y);
                ++evals;
                continue;
            }
            double xr = b - off, xl = a + off;
            if (off <= 0.0 || xl <= a || xr >= b) break;
            double yl = checked(f, xl), yr = checked(f, xr);
            s += d * w * (yl + yr);
            abs_sum += std::abs(d * w * yl) + std::abs(d * w * yr);
            evals += 2;
        }
        return s;
    };

    double h = 0.5;
    double abs_sum = 0.0;
    std::int64_t evals = 0;
    double raw = node_sum(h, 0, 1, abs_sum, evals);
    double prev = raw * h;
    double err = INFINITY;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        raw += node_sum(h, 1, 2, abs_sum, evals);
        double cur = raw * h;
        err = std::abs(cur - prev);
        prev = cur;
        double floor = 8.0 * kEps * abs_sum * h;
        if (level >= 3 && err <= std::max(tol, floor)) {
            err = std::max(err, floor);
            break;
        }
    }
    return {prev, err, evals};
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1v = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * z * p1v - (k - 1.0) * p0) / k;
                p0 = p1v;
                p1v = p2;
            }
            pp = n * (z * p1v - p0) / (z * z - 1.0);
            double dz = p1v / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

double bernoulli_ratio(int j) {
    // exact B_{2j} for j <= 10, then 2 (-1)^{j+1} zeta(2j) / (2 pi)^{2j}
    static const double b2j[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
                                 -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798,
                                 -174611.0 / 330};
    if (j < 1) throw DomainError("bernoulli_ratio: j must be >= 1");
    if (j <= 10) return b2j[j - 1] / std::tgamma(2.0 * j + 1.0);
    double z = 0.0;
    for (int n = 40; n >= 1; --n) z += std::pow(static_cast<double>(n), -2.0 * j);
    double mag = 2.0 * z * std::exp(-2.0 * j * std::log(2.0 * std::numbers::pi));
    return (j % 2 == 1) ? mag : -mag;
}

Eval integrate_finite(const RealFn& f, double a, double b, const QuadSpec& spec) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integrate_finite: need finite a < b");
    Eval e = tanh_sinh(f, a, b, spec.tol);
    if (e.err_est > spec.tol && e.err_est > 1e3 * kEps * std::abs(e.value))
        throw NumericFailure("integrate_finite: tolerance not reached", e);
    return e;
}

Eval integrate_semi_inf(const RealFn& f, double a, const QuadSpec& spec) {
    if (!std::isfinite(a)) throw DomainError("integrate_semi_inf: a must be finite");
    // exp-sinh: x = a + exp(pi/2 sinh t)
    const double t_lo = -4.5;
    const double t_hi = std::asinh(std::log(1e200) / kHalfPi);
    std::int64_t evals = 0;
    double abs_sum = 0.0;

    auto sum_nodes = [&](double h, double offset) {
        double s = 0.0;
        int zero_run = 0;
        for (double t = t_lo + offset; t <= t_hi; t += 2.0 * h) {
            double e = std::exp(kHalfPi * std::sinh(t));
            double w = kHalfPi * std::cosh(t) * e;
            double x = a + e;
            if (x == a) continue;
            double y = checked(f, x);
            ++evals;
            double term = w * y;
            s += term;
            abs_sum += std::abs(term);
            // the integrand has underflowed for good
            if (y == 0.0 && t > 1.0) {
                if (++zero_run >= 4) break;
            } else {
                zero_run = 0;
            }
        }
        return s;
    };

    double h = 0.25;
    double raw = sum_nodes(h / 2, 0.0);  // level 0 uses every node at spacing h
    double prev = raw * h;
    double err = INFINITY;
    const int max_level = 9;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        raw += sum_nodes(h, h);
        double cur = raw * h;
        err = std::abs(cur - prev);
        prev = cur;
        double floor = 8.0 * kEps * abs_sum * h;
        if (level >= 3 && err <= std::max(spec.tol, floor)) {
            err = std::max(err, floor);
            return {prev, err, evals};
        }
    }
    throw NumericFailure("integrate_semi_inf: tolerance not reached", {prev, err, evals});
}

namespace {

// One cell [lo, hi] with P1(x) = x - n - 1/2.
Eval p1_cell(const RealFn& f, double lo, double hi, double n, bool robust, const QuadSpec& spec) {
    auto g = [&](double x) { return f(x) * (x - n - 0.5); };
    if (robust) return tanh_sinh(g, lo, hi, spec.tol / 16);
    const GaussRule& r = gauss_legendre(spec.nodes_per_interval);
    const double c = 0.5 * (lo + hi), d = 0.5 * (hi - lo);
    double v = 0.0, mag = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        double t = r.w[i] * checked(g, c + d * r.x[i]);
        v += t;
        mag += std::abs(t);
    }
    return {v * d, 4.0 * kEps * mag * d, spec.nodes_per_interval};
}

constexpr int kRobustCells = 4;
constexpr int kMinCells = 8;

}  // namespace

Eval integrate_p1_range(const RealFn& f, double a, double b, const QuadSpec& spec) {
    if (!(a <= b)) throw DomainError("integrate_p1_range: need a <= b");
    Eval acc;
    double lo = a;
    int idx = 0;
    while (lo < b) {
        double n = std::floor(lo);
        double hi = std::min(n + 1.0, b);
        acc += p1_cell(f, lo, hi, n, idx < kRobustCells, spec);
        lo = hi;
        ++idx;
    }
    return acc;
}

Eval integrate_p1(const RealFn& f, double a, const QuadSpec& spec) {
    if (!std::isfinite(a)) throw DomainError("integrate_p1: a must be finite");
    if (spec.tol <= 0 || spec.nodes_per_interval < 4 || spec.max_intervals < kMinCells)
        throw DomainError("integrate_p1: invalid QuadSpec");

    Eval acc;
    double lo = a;
    long cells = 0;
    std::vector<double> checkpoints;  // partial sums for aitken
    double prev_aitken = NAN;
    long next_checkpoint = kMinCells;

    while (cells < spec.max_intervals) {
        double n = std::floor(lo);
        double hi = n + 1.0;
        acc += p1_cell(f, lo, hi, n, cells < kRobustCells, spec);
        lo = hi;
        ++cells;
        if (cells < kMinCells) continue;

        const double N = hi;
        switch (spec.tail_mode) {
            case TailMode::euler_maclaurin: {
                double g[5];
                for (int i = 0; i < 5; ++i) g[i] = checked(f, N + (i - 2));
                acc.work += 5;
                double d4 = g[0] - 4 * g[1] + 6 * g[2] - 4 * g[3] + g[4];
                double d2 = (g[1] - 2 * g[2] + g[3]) - d4 / 12.0;
                double tail = -g[2] / 12.0 + d2 / 720.0 - d4 / 30240.0;
                // next E-M term plus the g^(6)/90 error of the differenced g'', with
                // g^(6) ~ g'''' (g''''/g'') from the same stencil
                double terr = std::abs(d4) / 30240.0;
                if (d2 != 0.0) terr += std::abs(d4 * d4 / d2) / 64800.0;
                if (terr < 0.5 * spec.tol) {
                    acc.value += tail;
                    acc.err_est += terr;
                    acc.work = acc.work;
                    return with_floor(acc);
                }
                break;
            }
            case TailMode::bound_by_abs: {
                if (cells != next_checkpoint) break;
                next_checkpoint *= 2;
                QuadSpec s = spec;
                s.tol = 0.1 * spec.tol;
                Eval m = integrate_semi_inf([&](double x) { return std::abs(f(x)); }, N, s);
                acc.work += m.work;
                double bound = 0.5 * (m.value + m.err_est);
                if (bound < spec.tol) {
                    acc.err_est += bound;
                    return with_floor(acc);
                }
                break;
            }
            case TailMode::aitken: {
                if (cells != next_checkpoint) break;
                next_checkpoint *= 2;
                checkpoints.push_back(acc.value);
                std::size_t m = checkpoints.size();
                if (m < 3) break;
                double s0 = checkpoints[m - 3], s1 = checkpoints[m - 2], s2 = checkpoints[m - 1];
                double d1 = s1 - s0, d2 = s2 - s1;
                double den = d2 - d1;
                double ext = (den != 0.0) ? s2 - d2 * d2 / den : s2;
                if (std::isfinite(prev_aitken) && std::abs(ext - prev_aitken) < spec.tol) {
                    Eval r{ext, acc.err_est + std::abs(ext - prev_aitken), acc.work};
                    return with_floor(r);
                }
                prev_aitken = ext;
                break;
            }
        }
    }
    throw NumericFailure("integrate_p1: tail bound not reached within max_intervals", acc);
}

}  // namespace addison
