#include "addison/clausen.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "addison/quad.hpp"
#include "addison/series.hpp"
#include "addison/zeta.hpp"

namespace addison {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;

// Ci and Si for x > 8 through the continued fraction of E1(ix).
cplx e1_imag_cf(double x, std::int64_t* work) {
    const double tiny = 1e-300;
    cplx b(1.0, x), c(1.0 / tiny, 0.0), d = 1.0 / b, h = d;
    for (int i = 2; i < 1000; ++i) {
        double a = -double(i - 1) * double(i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        cplx del = c * d;
        h *= del;
        ++*work;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h * cplx(std::cos(x), -std::sin(x));
}

// Derivative D^m [ e^{i theta x} x^{-p} ] at x, Leibniz terms built by ratios to stay in range.
cplx osc_deriv(int m, double theta, double p, double x) {
    if (theta == 0.0) {
        double t = std::pow(x, -p);
        for (int l = 0; l < m; ++l) t *= -(p + l) / x;
        return t;
    }
    cplx it(0.0, theta);
    cplx term = std::pow(it, m) * std::pow(x, -p), acc = term;
    for (int l = 0; l < m; ++l) {
        term *= -double(m - l) / (l + 1) * (p + l) / (x * it);
        acc += term;
    }
    return acc * std::polar(1.0, theta * x);
}

// int_1^inf e^{i theta x} x^{-n} dx: unit Gauss cells, then integration by parts.
cplx osc_power_integral(double theta, int n, Eval* acct) {
    if (theta == 0.0) return 1.0 / (n - 1.0);
    auto f = [&](double x) { return std::polar(std::pow(x, -double(n)), theta * x); };
    long X = std::max<long>(8, long(std::ceil(40.0 / std::abs(theta))) + n);
    cplx s(0.0, 0.0);
    for (long c = 1; c < X; ++c) s += gauss_cell(f, double(c), double(c + 1), 16);
    acct->work += 16 * (X - 1);
    cplx it(0.0, theta), tail(0.0, 0.0);
    double poch = 1.0, prev = INFINITY;
    cplx itpow = it;
    for (int m = 0; m < 200; ++m) {
        cplx term = poch / itpow * std::pow(double(X), -double(n) - m);
        double mag = std::abs(term);
        if (mag > prev) break;
        tail += term;
        prev = mag;
        if (mag < 1e-20) break;
        poch *= n + m;
        itpow *= it;
    }
    acct->err_est += prev + 1e-15 * std::abs(s);
    return s - std::polar(1.0, theta * double(X)) * tail;
}

// int_1^inf e^{i theta x} (i theta x^{-n} - n x^{-n-1}) P1(x) dx.
cplx osc_p1_integral(double theta, int n, Eval* acct) {
    cplx it(0.0, theta);
    auto g = [&](double x) {
        return std::polar(1.0, theta * x) * (it * std::pow(x, -double(n)) - double(n) * std::pow(x, -n - 1.0));
    };
    // Euler-Maclaurin terms shrink roughly like (theta/2pi)^{2j}; scale depth and start to match.
    double r = std::max(std::abs(theta) / (2.0 * kPi), 0.05);
    int J = std::min(180, int(std::ceil(std::log(1e-18) / (2.0 * std::log(r)))) + 2);
    long N = std::max<long>(128, 4L * 2 * J);
    cplx s(0.0, 0.0);
    for (long c = 1; c < N; ++c) {
        double x0 = double(c);
        s += gauss_cell([&](double x) { return g(x) * (x - x0 - 0.5); }, x0, x0 + 1.0, 16);
    }
    acct->work += 16 * (N - 1);
    std::vector<cplx> d;
    d.reserve(J);
    for (int j = 1; j <= J; ++j) {
        int m = 2 * j - 2;
        d.push_back(it * osc_deriv(m, theta, n, double(N)) - double(n) * osc_deriv(m, theta, n + 1.0, double(N)));
    }
    double last = 0.0;
    cplx tail = em_p1_tail(d, &last);
    acct->err_est += last + 1e-15 * std::abs(s);
    return s + tail;
}

// Li_n(e^{i theta}) from the P1 representation; any real theta gives the same sum.
cplx polylog_unit(int n, double theta, Eval* acct) {
    cplx z = std::polar(1.0, theta);
    return 0.5 * z + osc_power_integral(theta, n, acct) + osc_p1_integral(theta, n, acct);
}

double principal(double theta) {
    double t = std::remainder(theta, 2.0 * kPi);
    return t == -kPi ? kPi : t;
}

// I(a) = int_0^inf (x + a)^{-s-1} P1(x) dx, so that zeta(s, a) = a^{-s}/2 + a^{1-s}/(s-1) - s I(a).
Eval hurwitz_p1_part(double s, double a) {
    return integrate_p1([s, a](double x) { return std::pow(x + a, -s - 1.0); }, 0.0, precise_spec());
}

}  // namespace

Eval cosint(double z) {
    if (!(z > 0.0)) throw DomainError("cosint: z must be > 0");
    Eval r;
    if (z <= 8.0) {
        double z2 = z * z, term = 1.0, s = 0.0, biggest = 0.0;
        for (int k = 1; k < 200; ++k) {
            term *= -z2 / ((2.0 * k - 1.0) * (2.0 * k));
            double t = term / (2.0 * k);
            s += t;
            biggest = std::max(biggest, std::abs(t));
            ++r.work;
            if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(s))) break;
        }
        r.value = std::numbers::egamma + std::log(z) + s;
        r.err_est = 8.0 * kEps * (biggest + std::abs(std::log(z)) + 1.0);
        return r;
    }
    r.value = -e1_imag_cf(z, &r.work).real();
    return with_floor(r, 1e-16);
}

Eval sinint(double z) {
    if (z < 0.0) {
        Eval r = sinint(-z);
        r.value = -r.value;
        return r;
    }
    Eval r;
    if (z <= 8.0) {
        double z2 = z * z, term = z, s = z, biggest = z;
        for (int k = 1; k < 200 && z > 0.0; ++k) {
            term *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
            double t = term / (2.0 * k + 1.0);
            s += t;
            biggest = std::max(biggest, std::abs(t));
            ++r.work;
            if (std::abs(t) < 1e-18 * std::abs(s)) break;
        }
        r.value = s;
        r.err_est = 8.0 * kEps * biggest;
        return r;
    }
    r.value = 0.5 * kPi + e1_imag_cf(z, &r.work).imag();
    return with_floor(r, 1.0);
}

Eval clausen(int n, double theta) {
    if (n < 2) throw DomainError("clausen: n must be >= 2");
    if (!(theta >= 0.0 && theta <= 2.0 * kPi)) throw DomainError("clausen: theta must lie in [0, 2 pi]");
    double t = principal(theta);
    if (n % 2 == 0 && (t == 0.0 || t == kPi)) return exact(0.0);
    Eval r;
    cplx li = polylog_unit(n, t, &r);
    r.value = (n % 2 == 0) ? li.imag() : li.real();
    return with_floor(r, 1.0);
}

Eval clausen2_ci(double theta) {
    if (!(theta >= 0.0 && theta < 2.0 * kPi)) throw DomainError("clausen2_ci: theta must lie in (0, 2 pi)");
    if (theta == 0.0) return exact(0.0);
    Eval ci = cosint(theta);
    Eval r;
    cplx p1 = osc_p1_integral(theta, 2, &r);
    r.value = 1.5 * std::sin(theta) - theta * ci.value + p1.imag();
    r.err_est += theta * ci.err_est;
    r.work += ci.work;
    return with_floor(r, 1.0);
}

Eval catalan() { return clausen2_ci(0.5 * kPi); }

Eval dirichlet_L4(double s, L4Method method) {
    if (!(s >= 0.0)) throw DomainError("dirichlet_L4: s must be >= 0");
    if (method == L4Method::addison) return L4_addison(s);
    static const CharacterTable chi4 = CharacterTable::make(4, {1.0, 0.0, -1.0, 0.0});
    return dirichlet_L(s, chi4);
}

CharacterTable CharacterTable::make(int modulus, std::vector<double> values) {
    if (modulus < 1) throw DomainError("character: modulus must be >= 1");
    if (int(values.size()) != modulus)
        throw DomainError("character: expected " + std::to_string(modulus) + " values, got " +
                          std::to_string(values.size()));
    auto chi = [&](long k) { return values[std::size_t((k - 1) % modulus)]; };
    if (modulus == 1) {
        if (values[0] != 1.0) throw DomainError("character: chi(1) must be 1");
        return {1, values, true};
    }
    bool principal = true;
    for (int k = 1; k <= modulus; ++k) {
        bool unit = std::gcd(k, modulus) == 1;
        double v = chi(k);
        if (!unit && v != 0.0) throw DomainError("character: chi(" + std::to_string(k) + ") must be 0");
        if (unit && std::abs(std::abs(v) - 1.0) > 1e-12)
            throw DomainError("character: real character values on units must be +-1");
        if (unit && v != 1.0) principal = false;
    }
    if (chi(1) != 1.0) throw DomainError("character: chi(1) must be 1");
    if (modulus <= 20) {
        for (int a = 1; a <= modulus; ++a)
            for (int b = 1; b <= modulus; ++b) {
                long ab = (long(a) * b - 1) % modulus + 1;
                if (std::abs(chi(ab) - chi(a) * chi(b)) > 1e-12)
                    throw DomainError("character: not multiplicative at " + std::to_string(a) + "*" +
                                      std::to_string(b));
            }
    }
    return {modulus, std::move(values), principal};
}

CharacterTable CharacterTable::parse(std::istream& in) {
    int m = 0;
    if (!(in >> m)) throw DomainError("character: missing modulus");
    std::vector<double> v;
    double x;
    while (int(v.size()) < m && in >> x) v.push_back(x);
    return make(m, std::move(v));
}

Eval dirichlet_L(double s, const CharacterTable& chi) {
    const int m = chi.modulus;
    if (chi.principal) {
        if (!(s >= 1.0)) throw DomainError("dirichlet_L: principal character needs s >= 1");
        if (s == 1.0) throw DomainError("dirichlet_L: pole at s = 1 for the principal character");
    } else if (!(s >= 0.0)) {
        throw DomainError("dirichlet_L: s must be >= 0");
    }
    Eval sum;
    double pole = 0.0, head = 0.0;
    for (int k = 1; k <= m; ++k) {
        double c = chi.values[k - 1];
        if (c == 0.0) continue;
        double a = double(k) / m;
        head += c * 0.5 * std::pow(a, -s);
        if (chi.principal) {
            pole += c * std::pow(a, 1.0 - s) / (s - 1.0);
        } else {
            double L = std::log(a);
            pole += (s == 1.0) ? -c * L : c * std::expm1((1.0 - s) * L) / (s - 1.0);
        }
        if (s != 0.0) sum = sum - scaled(hurwitz_p1_part(s, a), c * s);
    }
    sum.value += head + pole;
    Eval r = scaled(sum, std::pow(double(m), -s));
    return with_floor(r, std::abs(head) + std::abs(pole));
}

Eval L4_prime1() {
    Eval g34 = stieltjes(1, 0.75), g14 = stieltjes(1, 0.25);
    Eval r = scaled(g34 - g14, 0.25);
    r.value += -0.5 * kPi * std::log(2.0);
    return with_floor(r, 1.0);
}

double L4_prime1_closed_form() {
    double lg = std::lgamma(0.25) - std::lgamma(0.75);
    return 0.25 * kPi * (std::log(8.0 * kPi) + std::numbers::egamma - 2.0 * lg) - 0.5 * kPi * std::log(2.0);
}

}  // namespace addison
