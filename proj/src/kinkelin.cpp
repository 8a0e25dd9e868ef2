#include "addison/kinkelin.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>

#include "addison/clausen.hpp"
#include "addison/constants.hpp"
#include "addison/hyper.hpp"
#include "addison/quad.hpp"
#include "addison/zeta.hpp"

namespace addison {

namespace {

constexpr double kGamma = std::numbers::egamma;
constexpr double kPi = std::numbers::pi;
constexpr int kTaylorOrder = 40;

using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

const GammaTaylor& cached_taylor() {
    static const GammaTaylor t = gamma_taylor(kTaylorOrder);
    return t;
}

double s_value(int n) { return n == 1 ? kGamma : zeta_at(n).value; }

// (u - 1)/ln u, removable at u = 1 and 0 at u = 0.
double u_over_log(double u) {
    if (u == 0.0) return 0.0;
    double w = u - 1.0;
    if (std::abs(w) < 1e-2)
        return 1.0 + w * (0.5 + w * (-1.0 / 12.0 + w * (1.0 / 24.0 - w * 19.0 / 720.0)));
    return w / std::log(u);
}

// int_0^1 sin(alpha x) (1-x)^k dx through the closed trig sums, in 200-digit arithmetic.
Big sin_beta_closed(double alpha, int k) {
    Big a = alpha, s = 0, fact = 1, apow = a;  // fact = l!, apow = a^{l+1}
    Big binom = 1;
    for (int l = 0; l <= k; ++l) {
        if (l > 0) {
            fact *= l;
            apow *= a;
            binom = binom * (k - l + 1) / l;
        }
        int m = l % 4;
        if (m == 0) s += fact * binom / apow;
        else if (m == 2) s -= fact * binom / apow;
    }
    // fact = k!, apow = a^{k+1} after the loop
    Big phase = a - Big(k) * boost::math::constants::pi<Big>() / 2;
    return s - fact / apow * cos(phase);
}

}  // namespace

double GammaTaylor::eval(double z) const {
    double s = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * z + *it;
    return s;
}

GammaTaylor gamma_taylor(int N) {
    if (N < 0 || N > kTaylorOrder) throw DomainError("gamma_taylor: N must be in [0, 40]");
    GammaTaylor t;
    t.coeffs.assign(N + 1, 0.0);
    t.coeffs[0] = 1.0;
    for (int n = 0; n < N; ++n) {
        double acc = 0.0;
        for (int k = 0; k <= n; ++k)
            acc += (k % 2 ? 1.0 : -1.0) * s_value(k + 1) * t.coeffs[n - k];
        t.coeffs[n + 1] = acc / (n + 1);
    }
    for (int n = 0; n < N; ++n) {
        long double acc = 0.0L;
        for (int k = 0; k <= n; ++k)
            acc += (k % 2 ? 1.0L : -1.0L) * s_value(k + 1) * t.coeffs[n - k];
        long double r = std::abs((n + 1) * static_cast<long double>(t.coeffs[n + 1]) - acc);
        t.max_residual = std::max(t.max_residual, static_cast<double>(r));
    }
    return t;
}

Eval gamma_moment_x_taylor(int form) {
    if (form != 1 && form != 2) throw DomainError("gamma_moment_x_taylor: form must be 1 or 2");
    const auto& c = cached_taylor().coeffs;
    const int N = static_cast<int>(c.size()) - 1;
    // c_k = (-1)^k + d_k; the (-1)^k part is summed in closed form, d_k decays like 2^-k
    Eval r = form == 1 ? exact(0.5 + kGamma / 6.0 + 1.0 / 3.0)
                       : exact(1.0 - kGamma / 2.0 + std::numbers::ln2 - 0.5);
    double last = 0.0;
    for (int k = 2; k <= N; ++k) {
        double sign = k % 2 ? -1.0 : 1.0;
        double d = c[k] - sign;
        last = form == 1 ? sign * d / ((k + 1.0) * (k + 2.0)) : d / (k + 1.0);
        r.value += last;
    }
    r.err_est = std::abs(last) + 64.0 * 2.2e-16;
    r.work = N;
    return r;
}

Eval gamma_moment_x_laplace(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("gamma_moment_x_laplace: lambda must be > 0");
    auto f = [lambda](double t) { return lambda * std::exp(-lambda * t) * u_over_log(lambda * t); };
    QuadSpec spec = precise_spec(1e-12);
    return with_floor(integrate_finite(f, 0.0, 1.0 / lambda, spec) +
                      integrate_semi_inf(f, 1.0 / lambda, spec));
}

Eval gamma_moment_x(MomentXMethod method) {
    switch (method) {
        case MomentXMethod::taylor_a3:
            return gamma_moment_x_taylor(1);
        case MomentXMethod::laplace_a10:
            return gamma_moment_x_laplace(1.0);
        case MomentXMethod::direct:
            return with_floor(integrate_finite([](double x) { return std::tgamma(x + 1.0); }, 0.0,
                                               1.0, precise_spec()));
    }
    throw DomainError("gamma_moment_x: unknown method");
}

Eval kinkelin_p1_term() {
    auto g = [](double x) {
        if (x >= 8.0) {
            // 2 - (2x+1) ln(1+u) = -sum_{p>=2} (-1)^p (p-1)/(p(p+1)) u^p, u = 1/x
            double u = 1.0 / x, up = u * u, s = 0.0;
            for (int p = 2; p < 24; ++p, up *= u) s += (p % 2 ? -1.0 : 1.0) * (p - 1.0) / (p * (p + 1.0)) * up;
            return -s;
        }
        return 2.0 - (2.0 * x + 1.0) * std::log1p(1.0 / x);
    };
    return scaled(integrate_p1(g, 1.0, precise_spec(1e-14)), -0.5);
}

Eval kinkelin_a2_printed() {
    Eval m = gamma_moment_x(MomentXMethod::direct);
    m.value += 1.0 / 12.0 - 0.25 * std::log(2.0 * kPi);
    return m;
}

Eval kinkelin(KinkelinMethod method) {
    switch (method) {
        case KinkelinMethod::laplace_a1: {
            auto f = [](double x) { return x == 0.0 ? 0.0 : x * std::log(x) / std::expm1(2.0 * kPi * x); };
            QuadSpec spec = precise_spec(1e-13);
            Eval r = integrate_finite(f, 0.0, 1.0, spec) + integrate_semi_inf(f, 1.0, spec);
            return with_floor(scaled(r, 2.0));
        }
        case KinkelinMethod::gamma_moment_a2: {
            // uses x lnGamma(x); the Gamma(x) reading is kinkelin_a2_printed
            Eval m = integrate_finite([](double x) { return x * std::lgamma(x); }, 0.0, 1.0,
                                      precise_spec());
            m.value += 1.0 / 12.0 - 0.25 * std::log(2.0 * kPi);
            return with_floor(m);
        }
        case KinkelinMethod::series_a5: {
            Eval r = exact(-kGamma / 12.0 + std::numbers::ln2 - 5.0 / 6.0);
            for (int n = 2; n < 200; ++n) {
                double bound = std::ldexp(1.0, -n) * (1.0 + 2.0 / (n - 1)) / ((n + 1.0) * (n + 2.0));
                if (bound < 1e-18) {
                    r.err_est += bound;
                    break;
                }
                Eval z = zeta_at(n);
                r.value += 0.5 * (n % 2 ? -1.0 : 1.0) * (z.value - 1.0) / ((n + 1.0) * (n + 2.0));
                r.err_est += z.err_est;
                r.work += 1;
            }
            return with_floor(r);
        }
        case KinkelinMethod::p1_a8: {
            Eval r = kinkelin_p1_term();
            r.value += std::numbers::ln2 / 6.0 - 5.0 / 18.0;
            return with_floor(r);
        }
    }
    throw DomainError("kinkelin: unknown method");
}

Eval gamma_moment_sin(double alpha, MomentSinMethod method, const SinMomentOptions& opt) {
    const double half_pi = kPi / 2.0;
    if (!(std::abs(alpha) <= half_pi)) throw DomainError("gamma_moment_sin: |alpha| must be <= pi/2");
    if (method == MomentSinMethod::laplace_a9 && !(std::abs(alpha) < half_pi))
        throw DomainError("gamma_moment_sin: laplace_a9 needs |alpha| < pi/2");
    if (!(opt.lambda > 0.0)) throw DomainError("gamma_moment_sin: lambda must be > 0");
    if (opt.terms < 1 || opt.terms > kTaylorOrder + 1)
        throw DomainError("gamma_moment_sin: terms must be in [1, 41]");
    if (alpha == 0.0) return exact(0.0);

    if (method == MomentSinMethod::laplace_a9) {
        const double lam = opt.lambda, ca = std::cos(alpha), sa = std::sin(alpha);
        auto f = [=](double t) {
            if (t == 0.0) return 0.0;
            double u = lam * t;
            return std::exp(-u * ca) * std::sin(u * sa) * u_over_log(u) / t;
        };
        QuadSpec spec = precise_spec(1e-12);
        return with_floor(integrate_finite(f, 0.0, 1.0 / lam, spec) +
                          integrate_semi_inf(f, 1.0 / lam, spec));
    }

    const auto& c = cached_taylor().coeffs;
    Eval r;
    double pole_partial = 0.0;
    for (int k = 0; k < opt.terms; ++k) {
        double sign = k % 2 ? -1.0 : 1.0;
        double ik;  // int_0^1 sin(alpha x) (1-x)^k dx
        if (method == MomentSinMethod::onef2_a12) {
            Eval h = hyp1F2(1.0, (k + 3.0) / 2.0, 2.0 + k / 2.0, -alpha * alpha / 4.0);
            ik = alpha / ((k + 1.0) * (k + 2.0)) * h.value;
            r.err_est += std::abs(ik) * h.err_est;
            r.work += h.work;
        } else {
            double digits = (std::lgamma(k + 1.0) - (k + 1.0) * std::log(std::abs(alpha))) / std::log(10.0);
            if (digits > 180.0)
                throw NumericFailure("gamma_moment_sin: antiderivative sums exceed working precision",
                                     r, k);
            ik = static_cast<double>(sin_beta_closed(alpha, k));
            r.work += k + 1;
        }
        // int sin(alpha x) (x-1)^k dx = (-1)^k I_k
        r.value += sign * c[k] * ik;
        pole_partial += ik;
    }
    if (opt.pole_tail) {
        // c_k -> (-1)^k: sum_k (-1)^k int sin(alpha x)(x-1)^k dx = Si(alpha)
        Eval si = sinint(alpha);
        r.value += si.value - pole_partial;
        r.err_est += si.err_est;
        double dk = c[opt.terms - 1] - (opt.terms % 2 ? 1.0 : -1.0);
        r.err_est += 2.0 * std::abs(dk) * std::abs(alpha) / (opt.terms * opt.terms);
    } else {
        r.err_est += std::abs(alpha) / opt.terms;
    }
    return with_floor(r);
}

Eval reordered_sum(long N) {
    if (N < 1) throw DomainError("reordered_sum: N must be >= 1");
    auto term = [](double j) {
        if (j >= 8.0) {
            // sum_{p>=2} (-1)^p u^p / ((p+1)(p+2)), u = 1/j
            double u = 1.0 / j, up = u * u, s = 0.0;
            for (int p = 2; p < 24; ++p, up *= u) s += (p % 2 ? -1.0 : 1.0) * up / ((p + 1.0) * (p + 2.0));
            return s;
        }
        return j * (j + 1.0) * std::log1p(1.0 / j) - (6.0 * j * j + 3.0 * j - 1.0) / (6.0 * j);
    };
    double s = 0.0, c = 0.0;
    for (long j = 2; j <= N; ++j) {
        double x = term(static_cast<double>(j)), t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    Eval r{s + c, 0.0, N};
    // tail: sum_p (-1)^p zeta(p, N+1) / ((p+1)(p+2))
    for (int p = 2; p < 60; ++p) {
        double bound = std::pow(N + 1.0, 1.0 - p) / (p - 1.0) * 2.0 / ((p + 1.0) * (p + 2.0));
        if (bound < 1e-18) {
            r.err_est += bound;
            break;
        }
        Eval h = hurwitz(p, N + 1.0);
        r.value += (p % 2 ? -1.0 : 1.0) * h.value / ((p + 1.0) * (p + 2.0));
        r.err_est += h.err_est;
        r.work += h.work;
    }
    return with_floor(r);
}

double reordered_sum_closed() {
    return 11.0 / 6.0 + kGamma / 6.0 - 2.0 * glaisher_lnA().value - 2.0 * std::numbers::ln2;
}

double glaisher_partial(long N) {
    double s = 0.0, c = 0.0;
    for (long k = 2; k <= N; ++k) {
        double x = k * std::log(static_cast<double>(k)), t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    double n = static_cast<double>(N);
    return (s + c) - (n * n / 2.0 + n / 2.0 + 1.0 / 12.0) * std::log(n) + n * n / 4.0;
}

}  // namespace addison
