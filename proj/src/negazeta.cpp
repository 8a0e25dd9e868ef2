#include "addison/negazeta.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "addison/clausen.hpp"
#include "addison/quad.hpp"
#include "addison/zeta.hpp"

namespace addison {

namespace {

constexpr double kPi = std::numbers::pi;

void check_depth(int depth) {
    if (depth < 1 || depth > 20) throw DomainError("a_k: series depth must be in [1, 20]");
}

// -1/k - k sum_{n<depth} gamma_{n+1}(x) k^n / n!, x in (0, 2]
Eval stieltjes_sum(int k, double x, int depth) {
    Eval r = exact(-1.0 / k);
    double w = k;  // k * k^n / n!
    double last = 0.0;
    for (int n = 0; n < depth; ++n) {
        Eval g = stieltjes(n + 1, x);
        last = w * g.value;
        r.value -= last;
        r.err_est += w * g.err_est;
        r.work += g.work;
        w *= static_cast<double>(k) / (n + 1);
    }
    r.err_est += std::abs(last);
    return with_floor(r);
}

// The same sum at q in [0, 1] with gamma_n(q) = ln^n(q)/q + C_n(q): the logarithmic parts
// sum to k q^{k-1} ln q in closed form, only the bounded C_n(q) = gamma_n(q+1) are truncated.
Eval stieltjes_sum_split(int k, double q, int depth) {
    Eval r = stieltjes_sum(k, q + 1.0, depth);
    r.value -= k * (q == 0.0 ? 0.0 : std::pow(q, k - 1) * std::log(q));
    return with_floor(r);
}

// k q^{k-1} ln q, zero at q = 0 for k >= 2
double shift_term(int k, double q) {
    if (q == 0.0) return 0.0;
    return k * std::pow(q, k - 1) * std::log(q);
}

bool is_prime_le5(int p) { return p == 2 || p == 3 || p == 5; }

}  // namespace

Eval a_k(int k, double q, AkMethod method, int depth) {
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("a_k: q must be in [0, 1]");
    switch (method) {
        case AkMethod::stieltjes_b2: {
            check_depth(depth);
            if (k < 1 || k > 4) throw DomainError("a_k: stieltjes_b2 needs k in 1..4");
            if (q == 0.0 && k == 1) throw DomainError("a_k: A_1 is singular at q = 0");
            return stieltjes_sum_split(k, q, depth);
        }
        case AkMethod::shift_b8: {
            check_depth(depth);
            if (k < 1 || k > 4) throw DomainError("a_k: shift_b8 needs k in 1..4");
            if (q == 0.0 && k == 1) throw DomainError("a_k: A_1 is singular at q = 0");
            // A_k(q) = A_k(q+1) - k q^{k-1} ln q, A_k(q+1) from the unsplit sum on (1, 2]
            Eval r = stieltjes_sum(k, q + 1.0, depth);
            r.value -= shift_term(k, q);
            return with_floor(r);
        }
        case AkMethod::integral_b19: {
            if (k > 1 || k == 0) throw DomainError("a_k: integral_b19 needs k <= 1, k != 0");
            if (q == 0.0) throw DomainError("a_k: integral_b19 needs q > 0");
            const double e = 2.0 - k, lq = std::log(q);
            QuadSpec spec = precise_spec(1e-13);
            Eval i1 = integrate_p1([q, e](double x) { return std::pow(x + q, -e); }, 0.0, spec);
            Eval r = scaled(i1, -1.0);
            if (k != 1) {
                Eval i2 = integrate_p1(
                    [q, e](double x) { return std::log(x + q) * std::pow(x + q, -e); }, 0.0, spec);
                r += scaled(i2, 1.0 - k);
            }
            double qk = std::pow(q, k);
            r.value += -lq / (2.0 * std::pow(q, 1.0 - k)) - qk / (k * k) + qk * lq / k;
            return with_floor(scaled(r, k));
        }
        case AkMethod::boundary_b3: {
            if (k < 2) throw DomainError("a_k: boundary_b3 needs k >= 2");
            if (q != 0.0 && q != 1.0) throw DomainError("a_k: boundary_b3 needs q in {0, 1}");
            return with_floor(scaled(zeta_prime_neg(k), k));
        }
    }
    throw DomainError("a_k: unknown method");
}

Eval a_k_shifted(int k, double x, AkMethod method) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("a_k_shifted: x must be > 0");
    // A_k(x) = A_k(x - m) + sum_{i=1}^{m} k (x-i)^{k-1} ln(x-i)
    double base = x, add = 0.0;
    while (base > 1.0) {
        base -= 1.0;
        add += shift_term(k, base);
    }
    Eval r = a_k(k, base, method);
    r.value += add;
    return with_floor(r, std::abs(add));
}

std::pair<Eval, Eval> bernoulli_stieltjes_check(int k, double q, int depth) {
    if (k < 1 || k > 4) throw DomainError("bernoulli_stieltjes_check: k must be in 1..4");
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("bernoulli_stieltjes_check: q must be in [0, 1]");
    if (depth < 1 || depth > 21) throw DomainError("bernoulli_stieltjes_check: depth must be in [1, 21]");
    Eval poly = exact(bernoulli_poly(k, q));
    // gamma_n(q) = ln^n(q)/q + gamma_n(q+1); the logarithmic parts sum to k q^{k-1}
    Eval s = exact(1.0 - k * std::pow(q, k - 1));
    double w = k, last = 0.0;  // k * k^n / n!
    for (int n = 0; n < depth; ++n) {
        Eval g = stieltjes(n, q + 1.0);
        last = w * g.value;
        s.value -= last;
        s.err_est += w * g.err_est;
        s.work += g.work;
        w *= static_cast<double>(k) / (n + 1);
    }
    s.err_est += std::abs(last);
    return {poly, with_floor(s)};
}

Eval stieltjes_factorial_sum() {
    Eval r;
    double f = 1.0, last = 0.0;
    for (int n = 1; n <= 20; ++n) {
        f *= n;
        Eval g = stieltjes(n, 1.0);
        last = g.value / f;
        r.value += last;
        r.err_est += g.err_est / f;
        r.work += g.work;
    }
    r.err_est += std::abs(last);
    return with_floor(r);
}

Eval ak_mean(int k) {
    if (k < 1 || k > 4) throw DomainError("ak_mean: k must be in 1..4");
    Eval in = integrate_finite([k](double q) { return stieltjes_sum(k, q + 1.0, kDefaultAkDepth).value; },
                               0.0, 1.0, precise_spec(1e-10));
    // int_0^1 k q^{k-1} ln q dq = -1/k
    in.value += 1.0 / k;
    return with_floor(in);
}

std::pair<Eval, Eval> ak_sum_relation_pq(int k, int p, int q, double b, AkMethod method) {
    if (p < 1 || q < 1) throw DomainError("ak_sum_relation_pq: p and q must be >= 1");
    if (!(b >= 0.0)) throw DomainError("ak_sum_relation_pq: b must be >= 0");
    const double rp = static_cast<double>(p) / q, rq = static_cast<double>(q) / p;
    if (!(std::min(rp, rq) > b)) throw DomainError("ak_sum_relation_pq: need min(p/q, q/p) > b");
    Eval lhs, rhs;
    double bsum = 0.0;
    for (int r = 1; r <= q; ++r) {
        double x = rp * r - b;
        lhs += a_k_shifted(k, x, method);
        bsum += bernoulli_poly(k, x);
    }
    for (int l = 0; l < p; ++l) rhs += a_k_shifted(k, 1.0 + (l - b) * rq, method);
    rhs = scaled(rhs, std::pow(rq, 1.0 - k));
    rhs.value -= std::log(rq) * bsum;
    return {with_floor(lhs), with_floor(rhs)};
}

std::pair<Eval, Eval> ak_prime_relation(int k, int p, int N) {
    if (!is_prime_le5(p)) throw DomainError("ak_prime_relation: p must be a prime <= 5");
    if (N < 0 || N > 2) throw DomainError("ak_prime_relation: N must be in 0..2");
    if (k != 2 && k != 3) throw DomainError("ak_prime_relation: k must be 2 or 3");
    const double lp = std::log(static_cast<double>(p)), pk1 = std::pow(p, k - 1);
    const double bk = bernoulli_number(k), sign = k % 2 ? -1.0 : 1.0;
    Eval lhs = scaled(a_k(k, 1.0, AkMethod::boundary_b3), 1.0 - pk1);
    lhs.value -= sign * pk1 * lp * bk;
    long P = 1;
    for (int i = 0; i <= N; ++i) P *= p;
    Eval sum;
    for (long j = 1; j < P; ++j)
        if (j % p) sum += a_k(k, static_cast<double>(j) / P, AkMethod::stieltjes_b2);
    Eval rhs = scaled(sum, std::pow(static_cast<double>(P), k - 1));
    rhs.value += sign * (N + 1) * lp * (1.0 - pk1) * bk;
    return {with_floor(lhs), with_floor(rhs)};
}

Eval a2_fourier(double q, long terms) {
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("a2_fourier: q must be in [0, 1]");
    if (terms < 2) throw DomainError("a2_fourier: terms must be >= 2");
    const double g = std::numbers::egamma;
    double poly = (1.0 - g - std::log(2.0 * kPi)) * (q * q - q + 1.0 / 6.0);
    // sum ln n cos(2 pi n q)/n^2, compensated
    double s = 0.0, c = 0.0;
    const double th = 2.0 * kPi * q;
    for (long n = 2; n <= terms; ++n) {
        double x = std::log(static_cast<double>(n)) * std::cos(th * static_cast<double>(n)) /
                   (static_cast<double>(n) * n);
        double t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    double tail = (std::log(static_cast<double>(terms)) + 1.0) / terms;  // bound on |sum beyond|
    Eval cl = clausen(2, std::fmod(th, 2.0 * kPi));
    Eval r{poly - (s + c) / (kPi * kPi) + cl.value / (2.0 * kPi), tail / (kPi * kPi) + cl.err_est, terms};
    return with_floor(r);
}

std::array<Eval, 3> binet_forms(double s) {
    if (!(s > 0.0)) throw DomainError("binet_forms: s must be > 0");
    QuadSpec spec = precise_spec(1e-12);
    Eval p1 = scaled(integrate_p1([s](double x) { return 1.0 / (x + s); }, 0.0, spec), -1.0);
    auto laplace = [s](double t) {
        double core;  // (1/2 - 1/t + 1/(e^t - 1)) / t
        if (t < 0.05) {
            double t2 = t * t;
            core = 1.0 / 12.0 + t2 * (-1.0 / 720.0 + t2 * (1.0 / 30240.0 - t2 / 1209600.0));
        } else {
            core = (0.5 - 1.0 / t + 1.0 / std::expm1(t)) / t;
        }
        return core * std::exp(-t * s);
    };
    Eval lap = integrate_finite(laplace, 0.0, 1.0, spec) + integrate_semi_inf(laplace, 1.0, spec);
    auto arct = [s](double t) {
        if (t == 0.0) return 1.0 / (2.0 * kPi * s);
        return std::atan(t / s) / std::expm1(2.0 * kPi * t);
    };
    Eval at = scaled(integrate_finite(arct, 0.0, 1.0, spec) + integrate_semi_inf(arct, 1.0, spec), 2.0);
    return {with_floor(p1), with_floor(lap), with_floor(at)};
}

Eval loggamma_p1(double s) {
    if (!(s > 0.0)) throw DomainError("loggamma_p1: s must be > 0");
    Eval i = integrate_p1([s](double x) { return 1.0 / (x + s); }, 0.0, precise_spec(1e-13));
    Eval r = scaled(i, -1.0);
    double head = (s + 0.5) * std::log(s) - s + 0.5 * std::log(2.0 * kPi);
    r.value += head;
    return with_floor(r, std::abs(head));
}

}  // namespace addison
