#include "addison/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "addison/lerch.hpp"
#include "addison/quad.hpp"
#include "addison/zeta.hpp"

namespace addison {

namespace {

constexpr double kGamma = std::numbers::egamma;
constexpr double kPi = std::numbers::pi;

void check_t(double t) {
    if (!(t > 1.0) || !std::isfinite(t)) throw DomainError("somos: t must exceed 1");
}

// E1(x) = -Ei(-x), x > 0.
double e1(double x) { return -std::expint(-x); }

// Li_k(z) - z for the polylog series; Li_1 in closed form.
Eval li_minus_z(int k, double z) {
    if (k == 1) return exact(-std::log1p(-z) - z);
    Eval li = polylog(k, z);
    li.value -= z;
    return li;
}

// Shared loop of the two polylog forms: sum_k w(k) (Li_k(z) - z), stopping on the
// bound |Li_k(z) - z| <= z^2 2^-k / (1 - z).
template <class W>
Eval polylog_tail_sum(double z, W weight) {
    Eval acc;
    double c = 0.0;
    for (int k = 1; k < 400; ++k) {
        double bound = z * z * std::ldexp(1.0, -k) / (1.0 - z);
        double w = weight(k);
        if (std::abs(w) * bound < 1e-18) {
            acc.err_est += std::abs(w) * bound;
            break;
        }
        Eval d = li_minus_z(k, z);
        double term = w * d.value;
        double t = acc.value + term;
        c += std::abs(acc.value) >= std::abs(term) ? (acc.value - t) + term : (term - t) + acc.value;
        acc.value = t;
        acc.err_est += std::abs(w) * d.err_est;
        acc.work += d.work + 1;
    }
    acc.value += c;
    return acc;
}

}  // namespace

Eval somos_ln(double t, SomosMethod method) {
    check_t(t);
    const double lt = std::log(t);
    switch (method) {
        case SomosMethod::p1_integral: {
            Eval lead = exact(e1(lt) / lt);
            Eval rest = integrate_p1(
                [t, lt](double x) { return std::pow(t, -x) * (1.0 / x - lt * std::log(x)); }, 1.0,
                precise_spec(1e-15));
            return with_floor(lead + rest, std::abs(lead.value) + std::abs(rest.value));
        }
        case SomosMethod::exp_integral: {
            const double tm = t - 1.0;
            auto f = [t, tm](double x) {
                double q = x < 1e-3 ? 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0
                                    : -std::expm1(-x) / x;
                return q / (tm * (tm + t * std::expm1(x)));
            };
            return with_floor(integrate_semi_inf(f, 0.0, precise_spec()));
        }
        case SomosMethod::polylog_series: {
            // sum_k (-1)^{k-1} Li_k(z)/k with the z/k part summed in closed form (z ln 2).
            const double z = 1.0 / t;
            Eval s = polylog_tail_sum(z, [](int k) { return (k % 2 ? 1.0 : -1.0) / k; });
            s.value += z * std::numbers::ln2;
            return with_floor(scaled(s, 1.0 / (t - 1.0)));
        }
    }
    throw DomainError("somos_ln: unknown method");
}

Eval somos_ln_series_second(double t) {
    check_t(t);
    const double z = 1.0 / t;
    // t Li_k(z) - 1 = t (Li_k(z) - z).
    Eval s = polylog_tail_sum(z, [t](int k) { return t / k; });
    return with_floor(scaled(s, 1.0 / (t - 1.0)));
}

Eval somos_recurrence(int n, double t) {
    check_t(t);
    if (n < 0) throw DomainError("somos_recurrence: n must be >= 0");
    double scale_log = n * std::log(t);
    if (scale_log > 700.0)
        throw NumericFailure("somos_recurrence: scaled-log failure, t^n overflows", {}, n);
    double tn = std::exp(scale_log);
    Eval sigma = somos_ln(t, SomosMethod::p1_integral);
    Eval phi = lerch_phi_sderiv(1.0 / t, 0.0, n + 1.0);
    return with_floor(scaled(sigma, tn) + scaled(phi, 1.0 / t), tn * sigma.value);
}

double somos_recurrence_direct(int n, double t) {
    double lg = 0.0;
    for (int m = 1; m <= n; ++m) lg = std::log(static_cast<double>(m)) + t * lg;
    return lg;
}

Eval somos_gamma_limit(double z) {
    if (!(z > 0.0) || z > 0.1) throw DomainError("somos_gamma_limit: z must be in (0, 0.1]");
    Eval s = somos_ln(1.0 + z, SomosMethod::polylog_series);
    Eval r = scaled(s, z);
    r.value += std::log(z);
    return with_floor(r);
}

Eval zeta_gamma_series(int which) {
    if (which != 1 && which != 2) throw DomainError("zeta_gamma_series: which must be 1 or 2");
    // zeta(k) - 1 < 2^-k (1 + 2/(k-1)), summed until that bound is negligible.
    Eval acc = exact(which == 1 ? std::numbers::ln2 - 1.0 : -1.0);
    for (int k = 2; k < 200; ++k) {
        double bound = std::ldexp(1.0, -k) * (1.0 + 2.0 / (k - 1)) / k;
        if (bound < 1e-18) {
            acc.err_est += bound;
            break;
        }
        Eval z = zeta_at(k);
        double sign = which == 1 && k % 2 == 0 ? -1.0 : 1.0;
        acc.value += sign * (z.value - 1.0) / k;
        acc.err_est += z.err_est / k;
        acc.work += 1;
    }
    return with_floor(acc);
}

Eval euler_sum_H(double s, double a) {
    if (!(s > 1.0)) throw DomainError("euler_sum_H: s must exceed 1");
    if (!(a > -1.0)) throw DomainError("euler_sum_H: a must exceed -1");
    QuadSpec spec = precise_spec(1e-12);
    auto psi1 = [](double x) { return digamma(x + 1.0).value + kGamma; };
    Eval head = exact(0.5 / std::pow(a + 1.0, s));
    Eval main = integrate_semi_inf(
        [&](double x) { return psi1(x) / std::pow(x + a, s); }, 1.0, spec);
    Eval corr = integrate_p1(
        [&](double x) {
            double xa = x + a;
            return hurwitz(2.0, x + 1.0).value / std::pow(xa, s) - s * psi1(x) / std::pow(xa, s + 1.0);
        },
        1.0, spec);
    return with_floor(head + main + corr);
}

Eval hyperfactorial(double x) {
    if (!(x >= 0.0)) throw DomainError("hyperfactorial: x must be >= 0");
    if (x == 0.0) return exact(0.0);
    Eval in = integrate_finite([](double y) { return std::lgamma(y); }, 0.0, x, precise_spec());
    in.value += 0.5 * (x * x - x) - 0.5 * x * std::log(2.0 * kPi);
    return with_floor(in);
}

std::pair<Eval, Eval> loggamma_moment(char which) {
    const double lnA = glaisher_lnA().value;
    const double ln2 = std::numbers::ln2, lnpi = std::log(kPi), ln2pi = std::log(2.0 * kPi);
    const double z3 = zeta_at(3).value;
    double closed = 0.0, upper = 0.0;
    int power = 0;
    switch (which) {
        case 'a':
            closed = 5.0 / 24.0 * ln2 + 1.5 * lnA + 0.25 * lnpi;
            upper = 0.5;
            break;
        case 'b':
            closed = 0.25 * ln2pi - lnA;
            upper = 1.0, power = 1;
            break;
        case 'c':
            closed = ln2pi / 6.0 - lnA + z3 / (4.0 * kPi * kPi);
            upper = 1.0, power = 2;
            break;
        case 'd':
            closed = (4.0 * ln2 + 24.0 * lnA + 6.0 * lnpi) / 96.0 - 7.0 * z3 / (32.0 * kPi * kPi);
            upper = 0.5, power = 1;
            break;
        case 'e':
            closed = (-55.0 + 62.0 * ln2 + 720.0 * lnA + 120.0 * lnpi - 540.0 * z3 / (kPi * kPi) -
                      3600.0 * zeta_prime_neg(4).value) /
                     5760.0;
            upper = 0.5, power = 2;
            break;
        default:
            throw DomainError(std::string("loggamma_moment: unknown case '") + which + "'");
    }
    Eval quad = integrate_finite(
        [power](double z) { return std::pow(z, power) * std::lgamma(z); }, 0.0, upper,
        precise_spec());
    return {with_floor(exact(closed), 1.0), with_floor(quad)};
}

Eval glaisher_lnA() {
    Eval zp = zeta_prime_at(2);
    Eval r = scaled(zp, -1.0 / (2.0 * kPi * kPi));
    r.value += (std::log(2.0 * kPi) + kGamma) / 12.0;
    return with_floor(r);
}

Eval glaisher_lnA_printed() {
    Eval zp = zeta_prime_at(2);
    Eval r = scaled(zp, -1.0 / (kPi * kPi));
    r.value += (std::log(2.0 * kPi) + kGamma) / 12.0;
    return with_floor(r);
}

}  // namespace addison
