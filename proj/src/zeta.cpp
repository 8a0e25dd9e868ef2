#include "addison/zeta.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace addison {

namespace {

constexpr double kPi = std::numbers::pi;

void require_not_pole(double s, const char* who) {
    if (s == 1.0) throw DomainError(std::string(who) + ": pole at s = 1");
}

// Polynomial in L = ln x, coefficients by ascending power.
using Poly = std::vector<double>;

double eval_poly(const Poly& p, double L) {
    double r = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * L + *it;
    return r;
}

// d^m/dx^m (ln^n x / x) = x^{-1-m} P_m(ln x), P_{m+1} = -(1+m) P_m + P_m'.
std::vector<Poly> log_power_derivs(int n, int m_max) {
    std::vector<Poly> out;
    Poly p(n + 1, 0.0);
    p[n] = 1.0;
    out.push_back(p);
    for (int m = 0; m < m_max; ++m) {
        Poly q(n + 1, 0.0);
        for (int i = 0; i <= n; ++i) q[i] = -(1.0 + m) * p[i];
        for (int i = 1; i <= n; ++i) q[i - 1] += i * p[i];
        p = q;
        out.push_back(p);
    }
    return out;
}

}  // namespace

Eval zeta(double s, const QuadSpec& spec) {
    require_not_pole(s, "zeta");
    if (!(s > -1.0)) throw DomainError("zeta: representation needs s > -1");
    if (s == 0.0) return exact(-0.5);
    Eval I = integrate_p1([s](double x) { return std::pow(x, -s - 1.0); }, 1.0, spec);
    Eval r = exact(1.0 / (s - 1.0) + 0.5) - scaled(I, s);
    return with_floor(r, 1.0 / std::abs(s - 1.0));
}

Eval hurwitz(double s, double a, const QuadSpec& spec) {
    require_not_pole(s, "hurwitz");
    if (!(s > -1.0)) throw DomainError("hurwitz: representation needs s > -1");
    if (!(a > 0.0)) throw DomainError("hurwitz: a must be > 0");
    double head = 0.5 * std::pow(a, -s) + std::pow(a, 1.0 - s) / (s - 1.0);
    if (s == 0.0) return exact(head);
    Eval I = integrate_p1([s, a](double x) { return std::pow(x + a, -s - 1.0); }, 0.0, spec);
    return with_floor(exact(head) - scaled(I, s), std::abs(head));
}

Eval zeta_nderiv(int n, double s, const QuadSpec& spec) {
    if (n < 1) throw DomainError("zeta_nderiv: n must be >= 1");
    require_not_pole(s, "zeta_nderiv");
    if (!(s > 1.0)) throw DomainError("zeta_nderiv: representation needs s > 1");
    const double sign = (n % 2) ? -1.0 : 1.0;
    double pole = sign * std::tgamma(n + 1.0) / std::pow(s - 1.0, n + 1);
    Eval I1 = integrate_p1([s, n](double x) { return std::pow(x, -s - 1.0) * std::pow(std::log(x), n - 1); }, 1.0, spec);
    Eval I2 = integrate_p1([s, n](double x) { return std::pow(x, -s - 1.0) * std::pow(std::log(x), n); }, 1.0, spec);
    Eval r = exact(pole) + scaled(I1, sign * n) - scaled(I2, sign * s);
    return with_floor(r, std::abs(pole));
}

Eval hurwitz_sderiv(double s, double a, const QuadSpec& spec) {
    require_not_pole(s, "hurwitz_sderiv");
    if (!(s > 0.0)) throw DomainError("hurwitz_sderiv: representation needs s > 0");
    if (!(a > 0.0)) throw DomainError("hurwitz_sderiv: a must be > 0");
    const double la = std::log(a), a1s = std::pow(a, 1.0 - s);
    double head = -la / (2.0 * std::pow(a, s)) - a1s / ((s - 1.0) * (s - 1.0)) - a1s * la / (s - 1.0);
    Eval I1 = integrate_p1([s, a](double x) { return std::pow(x + a, -s - 1.0); }, 0.0, spec);
    Eval I2 = integrate_p1([s, a](double x) { return std::log(x + a) * std::pow(x + a, -s - 1.0); }, 0.0, spec);
    return with_floor(exact(head) - I1 + scaled(I2, s), std::abs(head));
}

Eval stieltjes_c(int n, double a, const QuadSpec& spec) {
    if (n < 1) throw DomainError("stieltjes_c: n must be >= 1");
    if (n > 20) throw NumericFailure("stieltjes: order above 20 exceeds double precision budget");
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("stieltjes_c: a must be in (0, 1]");

    // C_n(a) = int_{1-a}^inf P1(y) F'(y + a) dy with F = ln^n x / x
    const int n_cells = std::max(64, 4 * n);
    const double N = std::ceil(1.0 - a) + n_cells;
    auto fp = [n](double x) {
        double L = std::log(x);
        return std::pow(L, n - 1) * (n - L) / (x * x);
    };
    Eval cells = integrate_p1_range([&](double y) { return fp(y + a); }, 1.0 - a, N, spec);

    // g^{(m)}(N) = F^{(m+1)}(N + a), even m
    const int terms = 14;
    auto polys = log_power_derivs(n, 2 * terms);
    const double x = N + a, L = std::log(x);
    std::vector<double> derivs;
    for (int j = 1; j <= terms; ++j) {
        int m = 2 * j - 1;  // order of F
        derivs.push_back(std::pow(x, -1.0 - m) * eval_poly(polys[m], L));
    }
    double last = 0.0;
    double tail = em_p1_tail(derivs, &last);
    Eval r = cells;
    r.value += tail;
    // roundoff of the tail terms themselves
    r.err_est += last + 8 * 2.2e-16 * std::abs(derivs[0]);
    r.work += terms;
    return with_floor(r);
}

Eval stieltjes(int n, double a, const QuadSpec& spec) {
    if (n < 0) throw DomainError("stieltjes: n must be >= 0");
    if (!(a > 0.0 && a <= 2.0)) throw DomainError("stieltjes: a must be in (0, 2]");
    if (n == 0) return scaled(digamma(a, spec), -1.0);
    // the integral form holds on (0, 1]; above, gamma_n(q+1) = gamma_n(q) - ln^n(q)/q = C_n(q)
    if (a > 1.0) return stieltjes_c(n, a - 1.0, spec);
    Eval c = stieltjes_c(n, a, spec);
    double lead = std::pow(std::log(a), n) / a;
    return with_floor(exact(lead) + c, std::abs(lead));
}

Eval digamma(double a, const QuadSpec& spec) {
    if (!(a > 0.0)) throw DomainError("digamma: a must be > 0");
    // psi(b+1) = ln(b+1) - 1/(2(b+1)) + int_1^inf P1(y) (y+b)^-2 dy
    auto psi_shift = [&](double b) {
        Eval I = integrate_p1([b](double y) { return 1.0 / ((y + b) * (y + b)); }, 1.0, spec);
        double head = std::log(b + 1.0) - 0.5 / (b + 1.0);
        return with_floor(exact(head) + I, std::abs(head));
    };
    if (a >= 1.0) return psi_shift(a - 1.0);
    Eval r = psi_shift(a) - exact(1.0 / a);
    return with_floor(r, 1.0 / a);
}

double bernoulli_number(int k) {
    // B_0, B_2, ..., B_60 rounded from the exact rationals
    static const double even[] = {
        1.0, 0.16666666666666666, -0.03333333333333333, 0.023809523809523808, -0.03333333333333333,
        0.07575757575757576, -0.2531135531135531, 1.1666666666666667, -7.092156862745098,
        54.971177944862156, -529.1242424242424, 6192.123188405797, -86580.25311355312,
        1425517.1666666667, -27298231.067816094, 601580873.9006424, -15116315767.092157,
        429614643061.1667, -13711655205088.332, 488332318973593.2, -1.9296579341940068e+16,
        8.416930475736826e+17, -4.0338071854059454e+19, 2.1150748638081993e+21,
        -1.2086626522296526e+23, 7.500866746076964e+24, -5.038778101481069e+26,
        3.6528776484818122e+28, -2.849876930245088e+30, 2.3865427499683627e+32,
        -2.1399949257225335e+34};
    if (k < 0 || k > 60) throw DomainError("bernoulli_number: k must be in [0, 60]");
    if (k == 1) return -0.5;
    if (k % 2) return 0.0;
    return even[k / 2];
}

double bernoulli_poly(int k, double q) {
    if (k < 0) throw DomainError("bernoulli_poly: k must be >= 0");
    // Horner over B_k(q) = sum_j C(k, j) B_j q^{k-j}
    double r = 0.0, c = 1.0;
    std::vector<double> coef(k + 1);
    for (int j = 0; j <= k; ++j) {
        coef[j] = c * bernoulli_number(j);
        c = c * (k - j) / (j + 1);
    }
    for (int j = 0; j <= k; ++j) r = r * q + coef[j];
    return r;
}

namespace {

struct IntMemo {
    std::mutex mu;
    std::map<int, Eval> values;
};

template <class Compute>
Eval memoized(IntMemo& memo, int k, Compute compute) {
    {
        std::lock_guard<std::mutex> lock(memo.mu);
        auto it = memo.values.find(k);
        if (it != memo.values.end()) return it->second;
    }
    Eval v = compute();
    std::lock_guard<std::mutex> lock(memo.mu);
    return memo.values.emplace(k, v).first->second;
}

}  // namespace

Eval zeta_at(int k) {
    if (k < 2) throw DomainError("zeta_at: k must be >= 2");
    static IntMemo memo;
    return memoized(memo, k, [k] { return zeta(k, precise_spec(1e-15)); });
}

Eval zeta_prime_at(int k) {
    if (k < 2) throw DomainError("zeta_prime_at: k must be >= 2");
    static IntMemo memo;
    return memoized(memo, k, [k] { return zeta_nderiv(1, k, precise_spec(1e-15)); });
}

Eval zeta_prime_neg(int k) {
    if (k < 2) throw DomainError("zeta_prime_neg: k must be >= 2");
    Eval zk = zeta_at(k);
    if (k % 2 == 1) {
        // zeta'(1-k) = pi (2 pi)^{-k} (k-1)! zeta(k) sin(pi k / 2)
        double c = kPi * std::pow(2 * kPi, -k) * std::tgamma(static_cast<double>(k)) * ((k % 4 == 1) ? 1.0 : -1.0);
        return with_floor(scaled(zk, c));
    }
    // zeta'(1-k) = zeta(1-k) [ln 2 pi - psi(k) - zeta'(k)/zeta(k)], zeta(1-k) = -B_k/k
    Eval zpk = zeta_prime_at(k);
    Eval psi = digamma(k);
    double z1k = -bernoulli_number(k) / k;
    double ratio = zpk.value / zk.value;
    double bracket = std::log(2 * kPi) - psi.value - ratio;
    double err = psi.err_est + zpk.err_est / std::abs(zk.value) + std::abs(ratio) * zk.err_est / std::abs(zk.value);
    Eval r{z1k * bracket, std::abs(z1k) * err, zk.work + zpk.work + psi.work};
    return with_floor(r);
}

Eval h_moment(double s) {
    if (!(s > 0.0)) throw DomainError("h_moment: s must be > 0");
    return integrate_p1([s](double x) { return std::pow(x, -s - 1.0); }, 1.0, precise_spec());
}

}  // namespace addison
