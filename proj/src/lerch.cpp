#include "addison/lerch.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "addison/hyper.hpp"
#include "addison/zeta.hpp"

namespace addison {

namespace {

constexpr double kEps = 2.220446049250313e-16;

void check_region(double z, double s, double a, const char* who) {
    if (!(std::abs(z) <= 1.0)) throw DomainError(std::string(who) + ": |z| must be <= 1");
    if (std::abs(z) == 1.0 && !(s > 1.0)) throw DomainError(std::string(who) + ": |z| = 1 needs s > 1");
    if (!(a > 0.0)) throw DomainError(std::string(who) + ": a must be > 0");
}

// P1-integral representation for z in (0, 1], with `lead` the a^{-s} term (dropped for Li_s).
Eval phi_integral(double z, double s, double a, double lead, const QuadSpec& spec) {
    const double lz = std::log(z);
    double head = lead + z / (2.0 * std::pow(a + 1.0, s));
    Eval I1;
    if (z == 1.0) {
        I1 = exact(std::pow(a + 1.0, 1.0 - s) / (s - 1.0));
    } else {
        I1 = integrate_semi_inf([=](double x) { return std::pow(z, x) * std::pow(x + a, -s); }, 1.0, spec);
    }
    Eval I2 = integrate_p1(
        [=](double x) {
            double zx = std::pow(z, x), xa = x + a;
            return zx * (lz * std::pow(xa, -s) - s * std::pow(xa, -s - 1.0));
        },
        1.0, spec);
    return with_floor(exact(head) + I1 + I2, std::abs(head));
}

}  // namespace

Eval lerch_phi(double z, double s, double a, const QuadSpec& spec) {
    check_region(z, s, a, "lerch_phi");
    if (z == 0.0) return exact(std::pow(a, -s));
    if (z > 0.0) return phi_integral(z, s, a, std::pow(a, -s), spec);
    const double c = std::pow(2.0, -s), z2 = z * z;
    Eval even = lerch_phi(z2, s, 0.5 * a, spec);
    Eval odd = lerch_phi(z2, s, 0.5 * (a + 1.0), spec);
    return with_floor(scaled(even, c) + scaled(odd, c * z));
}

Eval lerch_series_oracle(double z, double s, double a, long N) {
    check_region(z, s, a, "lerch_series_oracle");
    if (N < 0) throw DomainError("lerch_series_oracle: N must be >= 0");
    double sum = 0.0, mag = 0.0;
    for (long n = N; n >= 0; --n) {
        double t = std::pow(z, static_cast<double>(n)) * std::pow(n + a, -s);
        sum += t;
        mag += std::abs(t);
    }
    const double M = N + 1 + a;
    double err;
    if (std::abs(z) < 1.0) {
        // |t_{n+1}/t_n| <= r for n > N once the power factor has settled
        double r = std::abs(z) * std::pow((M + 1.0) / M, std::max(0.0, -s));
        double next = std::pow(std::abs(z), static_cast<double>(N + 1)) * std::pow(M, -s);
        err = r < 1.0 ? next / (1.0 - r) : INFINITY;
        if (N == 0 && z == 0.0) err = 0.0;
    } else if (z == 1.0) {
        // Euler-Maclaurin on sum_{n>N} (n + a)^{-s}
        sum += std::pow(M, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(M, -s) + s * std::pow(M, -s - 1.0) / 12.0;
        err = s * (s + 1) * (s + 2) * std::pow(M, -s - 3.0) / 720.0;
    } else {
        // alternating with decreasing terms: average of consecutive partial sums
        double t1 = std::pow(M, -s) * ((N + 1) % 2 ? -1.0 : 1.0);
        sum += 0.5 * t1;
        err = 0.5 * std::abs(std::pow(M, -s) - std::pow(M + 1.0, -s));
    }
    return {sum, err + 4 * kEps * mag, N + 1};
}

Eval polylog(double s, double z, const QuadSpec& spec) {
    check_region(z, s, 1.0, "polylog");
    if (z == 0.0) return exact(0.0);
    if (z > 0.0) return phi_integral(z, s, 0.0, 0.0, spec);
    return scaled(lerch_phi(z, s, 1.0, spec), z);
}

Eval lerch_phi_sderiv(double z, double s, double a, const QuadSpec& spec) {
    if (!(std::abs(z) < 1.0)) throw DomainError("lerch_phi_sderiv: |z| must be < 1");
    check_region(z, s, a, "lerch_phi_sderiv");
    const double la = std::log(a);
    if (z == 0.0) return exact(-la * std::pow(a, -s));
    if (z < 0.0) {
        // d/ds of 2^{-s}[Phi(z^2, s, a/2) + z Phi(z^2, s, (a+1)/2)]
        const double c = std::pow(2.0, -s), z2 = z * z;
        Eval phi = lerch_phi(z, s, a, spec);
        Eval de = lerch_phi_sderiv(z2, s, 0.5 * a, spec);
        Eval dodd = lerch_phi_sderiv(z2, s, 0.5 * (a + 1.0), spec);
        return with_floor(scaled(phi, -std::log(2.0)) + scaled(de, c) + scaled(dodd, c * z));
    }
    const double lz = std::log(z);
    double head = -la * std::pow(a, -s) - 0.5 * z * std::log(a + 1.0) * std::pow(a + 1.0, -s);
    Eval I1 = integrate_semi_inf([=](double x) { return std::pow(z, x) * std::log(x + a) * std::pow(x + a, -s); },
                                 1.0, spec);
    Eval I2 = integrate_p1(
        [=](double x) {
            double zx = std::pow(z, x), xa = x + a, l = std::log(xa);
            return zx * (lz * l * std::pow(xa, -s) + std::pow(xa, -s - 1.0) - s * l * std::pow(xa, -s - 1.0));
        },
        1.0, spec);
    return with_floor(exact(head) - I1 - I2, std::abs(head));
}

Eval polylog_moment(double alpha, int n) {
    if (!(alpha > -1.0)) throw DomainError("polylog_moment: alpha must be > -1");
    if (n < 1) throw DomainError("polylog_moment: n must be >= 1");

    if (std::abs(alpha) < 0.25) {
        // sum_k k^{-n}/(k + alpha) = sum_j (-alpha)^j zeta(n + 1 + j)
        Eval acc;
        double p = 1.0;
        for (int j = 0; j < 60; ++j) {
            Eval z = zeta_at(n + 1 + j);
            acc += scaled(z, p);
            p *= -alpha;
            if (std::abs(p) * 2.0 < 1e-17 * std::abs(acc.value)) break;
        }
        acc.err_est += std::abs(p) * 2.0;
        return with_floor(acc);
    }

    Eval psi = digamma(alpha + 1.0);
    const double g = std::numbers::egamma;
    if (n == 1) return with_floor(scaled(psi + exact(g), 1.0 / alpha));
    if (n == 2) {
        Eval z2 = zeta_at(2);
        return with_floor(scaled(z2, 1.0 / alpha) - scaled(psi + exact(g), 1.0 / (alpha * alpha)));
    }

    const double sgn = (n % 2) ? 1.0 : -1.0;  // (-1)^{n+1}
    // (1/n) 2F1(1, n; n+1; -alpha) in closed form
    double f21 = sgn * std::log1p(alpha) / std::pow(alpha, n);
    for (int j = 1; j <= n - 1; ++j) f21 -= ((j % 2) ? -1.0 : 1.0) / ((n - j) * std::pow(alpha, j));
    Eval acc = exact(0.5 / (alpha + 1.0) + f21);
    for (int j = 1; j <= n; ++j) {
        Eval h = h_moment(j);
        acc += scaled(h, sgn * ((j % 2) ? -1.0 : 1.0) * j / std::pow(alpha, n - j + 1));
    }
    Eval bracket = psi + exact(-std::log1p(alpha) + 0.5 / (alpha + 1.0));
    acc += scaled(bracket, sgn / std::pow(alpha, n));
    // cancellation among the alpha^{-n} terms
    acc.err_est += 64 * kEps * std::pow(std::abs(alpha), -n);
    return with_floor(acc);
}

std::pair<Eval, Eval> hyp_check_phi(int k, double a, double z) {
    if (k < 0) throw DomainError("hyp_check_phi: k must be >= 0");
    if (!(std::abs(z) < 1.0)) throw DomainError("hyp_check_phi: |z| must be < 1");
    if (!(a > 0.0)) throw DomainError("hyp_check_phi: a must be > 0");
    std::vector<double> up(1, 1.0), lo;
    for (int i = 0; i < k; ++i) {
        up.push_back(a);
        lo.push_back(a + 1.0);
    }
    Eval hyp = scaled(hyper_pfq(up, lo, z), std::pow(a, -k));
    return {hyp, lerch_phi(z, k, a)};
}

}  // namespace addison
