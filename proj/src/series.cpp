#include "addison/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <numbers>
#include <string>
#include <thread>

namespace addison {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// Neumaier compensated accumulator.
struct Accum {
    double s = 0.0, c = 0.0, abs = 0.0;
    void add(double x) {
        double t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
        abs += std::abs(x);
    }
    double value() const { return s + c; }
};

double ipow(int k, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= k;
    return r;
}

// sum_j inner(b, j): 16 direct terms, then blocks [J, 2J) until the block ratio settles
// and the geometric tail is below level_tol.
Eval level_sum(const InnerFn& inner, double b, double level_tol, long j_max, int n) {
    Accum acc;
    long J = 16;
    for (long j = 0; j < J; ++j) acc.add(inner(b, j));
    double prev_block = NAN, prev_r = NAN;
    int zero_blocks = 0;
    for (;;) {
        if (2 * J > j_max) {
            Eval partial{acc.value(), INFINITY, J};
            throw NumericFailure("refine_sum: inner sum at level n = " + std::to_string(n) +
                                     " not converged within j_max = " + std::to_string(j_max),
                                 partial, double(n));
        }
        Accum blk;
        for (long j = J; j < 2 * J; ++j) blk.add(inner(b, j));
        double B = blk.value();
        acc.add(B);
        acc.abs += blk.abs;
        J *= 2;
        if (B == 0.0) {
            if (++zero_blocks >= 2) return {acc.value(), 8.0 * kEps * acc.abs, J};
            continue;
        }
        zero_blocks = 0;
        if (std::isfinite(prev_block) && prev_block != 0.0) {
            double r = B / prev_block;
            if (r > 0.0 && r < 0.9 && std::isfinite(prev_r) && std::abs(r - prev_r) < 0.25 * (1.0 - r)) {
                double tail = B * r / (1.0 - r);
                if (std::abs(tail) < level_tol) {
                    double err = std::abs(tail) * (std::abs(r - prev_r) / (1.0 - r) + 0.01);
                    return {acc.value() + tail, err + 8.0 * kEps * acc.abs, J};
                }
            }
            prev_r = r;
        }
        prev_block = B;
    }
}

void check_params(const RefineParams& p) {
    if (p.k < 2) throw DomainError("refine_sum: k must be >= 2");
    if (p.n_max < 1) throw DomainError("refine_sum: n_max must be >= 1");
    if (p.j_max < 8) throw DomainError("refine_sum: j_max must be >= 8");
    if (!(p.tol > 0.0)) throw DomainError("refine_sum: tol must be > 0");
}

// Weighted level T_n; inner error budget tol / (2 (n + 2)^2) after weighting.
Eval weighted_level(const InnerFn& inner, int n, const RefineParams& p) {
    double kn = ipow(p.k, n);
    double level_tol = kn * p.tol / (2.0 * (n + 2.0) * (n + 2.0));
    return scaled(level_sum(inner, 1.0 / kn, level_tol, p.j_max, n), 1.0 / kn);
}

std::vector<Eval> compute_levels(const InnerFn& inner, int from, int count, const RefineParams& p) {
    std::vector<std::future<Eval>> jobs;
    for (int i = 0; i < count; ++i)
        jobs.push_back(std::async(std::launch::async, weighted_level, std::cref(inner), from + i, std::cref(p)));
    std::vector<Eval> out;
    for (auto& f : jobs) out.push_back(f.get());
    return out;
}

// Bracket of the k-refined series for f at shift a.
template <class F>
double refined_bracket(const F& f, int k, double a, double b, long j) {
    double jj = double(j);
    double t = 0.5 * (1.0 / k - 1.0) * (f(b * jj + a) + f(b * (jj + 1.0) + a));
    for (int m = 1; m < k; ++m) t += f(b * (jj + double(m) / k) + a) / k;
    return t;
}

void check_sa(double s, double a, const char* who) {
    if (!(s > 0.0)) throw DomainError(std::string(who) + ": s must be > 0");
    if (s == 1.0) throw DomainError(std::string(who) + ": pole at s = 1");
    if (!(a > 0.0)) throw DomainError(std::string(who) + ": a must be > 0");
}

// Sum_{m=M}^{2M-1} F(m) by Euler-Maclaurin, given the antiderivative difference and F^{(r)}.
template <class D>
double em_block(double M, double integral, const D& deriv) {
    double s = integral + 0.5 * (deriv(0, M) - deriv(0, 2.0 * M));
    static const double b2j[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600};
    for (int j = 1; j <= 4; ++j) s += b2j[j - 1] * (deriv(2 * j - 1, 2.0 * M) - deriv(2 * j - 1, M));
    return s;
}

double rising(double x, int r) {
    double p = 1.0;
    for (int i = 0; i < r; ++i) p *= x + i;
    return p;
}

// F(m) = 1/(2m(m+1)(2m+1)) = (1/4) sum_k 4^{-k} u^{-2k-3}, u = m + 1/2.
double addison_f_deriv(int r, double m) {
    double u = m + 0.5, s = 0.0, w = 0.25;
    for (int k = 0; k < 10; ++k, w *= 0.25)
        s += w * rising(2.0 * k + 3.0, r) * std::pow(u, -(2.0 * k + 3.0 + r));
    return (r % 2) ? -s : s;
}

// F(m) = 1/(m(2m-1)) = sum_k 2^{-k-1} m^{-k-2}.
double second_form_deriv(int r, double m) {
    double s = 0.0, w = 0.5;
    for (int k = 0; k < 16; ++k, w *= 0.5) s += w * rising(k + 2.0, r) * std::pow(m, -(k + 2.0 + r));
    return (r % 2) ? -s : s;
}

}  // namespace

std::vector<Eval> refine_levels(const InnerFn& inner, int levels, const RefineParams& params) {
    check_params(params);
    return compute_levels(inner, 0, levels, params);
}

Eval refine_sum(const InnerFn& inner, const RefineParams& params) {
    check_params(params);
    const int batch = std::max(1u, std::thread::hardware_concurrency());
    Accum total;
    Eval out;
    double prev_T = NAN, prev_r = NAN;
    int zero_levels = 0;
    for (int n0 = 0; n0 <= params.n_max; n0 += batch) {
        int count = std::min(batch, params.n_max + 1 - n0);
        std::vector<Eval> lv = compute_levels(inner, n0, count, params);
        for (int i = 0; i < count; ++i) {
            const Eval& T = lv[i];
            total.add(T.value);
            out.err_est += T.err_est;
            out.work += T.work;
            if (T.value == 0.0) {
                if (++zero_levels >= 2) {
                    out.value = total.value();
                    return with_floor(out, total.abs);
                }
                continue;
            }
            zero_levels = 0;
            if (std::isfinite(prev_T) && prev_T != 0.0) {
                double r = T.value / prev_T;
                if (r > 0.0 && r < 0.9 && std::isfinite(prev_r) && std::abs(r - prev_r) < 0.25 * (1.0 - r)) {
                    double tail = T.value * r / (1.0 - r);
                    if (std::abs(tail) < 0.25 * params.tol) {
                        out.value = total.value() + tail;
                        out.err_est += std::abs(tail) * (std::abs(r - prev_r) / (1.0 - r) + 0.01);
                        return with_floor(out, total.abs);
                    }
                }
                prev_r = r;
            }
            prev_T = T.value;
        }
    }
    out.value = total.value();
    throw NumericFailure("refine_sum: outer sum not converged within n_max = " + std::to_string(params.n_max),
                         out, double(params.n_max));
}

Eval gamma_addison(int form, int depth) {
    if (form != 1 && form != 2) throw DomainError("gamma_addison: form must be 1 or 2");
    if (depth < 0) throw DomainError("gamma_addison: depth must be >= 0");
    const int blocks = depth > 0 ? depth : 80;
    Accum acc;
    Eval r;
    double last = 0.0;
    for (int n = 1; n <= blocks; ++n) {
        double M = std::ldexp(1.0, n - 1), blk = 0.0;
        if (M <= 64.0) {
            for (long m = long(M); m < long(2 * M); ++m) {
                double mm = double(m);
                blk += form == 1 ? 1.0 / (2.0 * mm * (mm + 1.0) * (2.0 * mm + 1.0))
                                 : 1.0 / ((mm + 1.0) * (2.0 * mm + 1.0));
            }
            r.work += long(M);
        } else if (form == 1) {
            double integral =
                0.5 * (std::log1p(-1.0 / ((4 * M + 1) * (4 * M + 1))) - std::log1p(-1.0 / ((2 * M + 1) * (2 * M + 1))));
            blk = em_block(M, integral, addison_f_deriv);
            r.work += 10;
        } else {
            double integral = std::log1p(-1.0 / (4 * M)) - std::log1p(-1.0 / (2 * M));
            blk = em_block(M, integral, second_form_deriv) - second_form_deriv(0, M) + second_form_deriv(0, 2 * M);
            r.work += 10;
        }
        last = 0.5 * n * blk;
        acc.add(last);
        if (depth == 0 && last < 1e-20) break;
    }
    // Remaining blocks shrink by 1/4 (form 1) or 1/2 (form 2) per step.
    double tail = depth > 0 ? last * (form == 1 ? 0.5 : 2.0) : 0.0;
    r.value = form == 1 ? 0.5 + acc.value() : 1.0 - acc.value();
    r.err_est = tail;
    return with_floor(r, 1.0);
}

namespace {

// sum_{j>=M} (-1)^j g(j) for g(j) = (alpha ln j + beta)/j by Boole summation;
// m_even gives the parity of M (M may exceed the range of long).
double alt_tail(double M, bool m_even, double alpha, double beta) {
    double L = std::log(M);
    double g0 = (alpha * L + beta) / M;
    double g1 = -(alpha * (L - 1.0) + beta) / (M * M);
    double g3 = -6.0 * (alpha * (L - 11.0 / 6.0) + beta) / (M * M * M * M);
    double v = 0.5 * g0 - 0.25 * g1 + g3 / 48.0;
    return m_even ? v : -v;
}

}  // namespace

Eval gamma_vacca(int form, long terms, bool with_tail) {
    if (form < 1 || form > 3) throw DomainError("gamma_vacca: form must be 1, 2 or 3");
    if (terms < 4) throw DomainError("gamma_vacca: terms must be >= 4");
    auto term = [form](long j) -> double {
        double sign = (j % 2) ? -1.0 : 1.0;
        switch (form) {
        case 1: return j < 3 ? 0.0 : sign * double(std::bit_width(std::uint64_t(j - 1)) - 1) / double(j);
        case 2: return sign * double(std::bit_width(std::uint64_t(j)) - 1) / double(j);
        default: {
            double l = std::log2(double(j));
            return sign * (l - std::floor(l)) / double(j);
        }
        }
    };
    // Sum in adjacent pairs (j, j + 1).
    Accum acc;
    long j = 1;
    for (; j + 1 <= terms; j += 2) acc.add(term(j) + term(j + 1));
    if (j == terms) acc.add(term(j));
    Eval r;
    r.value = (form == 2 ? 0.0 : 1.0) + acc.value();
    r.work = terms;
    if (!with_tail) {
        r.err_est = std::abs(term(terms + 1)) + 8.0 * kEps * acc.abs;
        return r;
    }
    // The numerator is smooth on each octave; form 1 octaves are shifted by one.
    const int shift = form == 1 ? 1 : 0;
    double tail = 0.0;
    long start = terms + 1;
    int k = std::bit_width(std::uint64_t(start - shift)) - 1;
    double L = double(start);
    bool l_even = start % 2 == 0;
    for (; k < 200; ++k) {
        double U1 = std::ldexp(1.0, k + 1) + shift;  // first index of the next octave
        bool u_even = shift == 0;
        double alpha = form == 3 ? 1.0 / std::numbers::ln2 : 0.0, beta = -double(k);
        if (form != 3) beta = double(k);
        double piece = alt_tail(L, l_even, alpha, beta) - alt_tail(U1, u_even, alpha, beta);
        tail += piece;
        if (std::abs(piece) < 1e-21) break;
        L = U1;
        l_even = u_even;
    }
    r.value += tail;
    r.err_est = 8.0 * kEps * acc.abs + 1e-6 / (double(terms) * double(terms) * double(terms));
    return with_floor(r, 1.0);
}

Eval hurwitz_prime_addison(double s, double a, const RefineParams& params) {
    check_sa(s, a, "hurwitz_prime_addison");
    auto f = [s](double x) { return std::log(x) * std::pow(x, -s); };
    int k = params.k;
    Eval S = refine_sum([&](double b, long j) { return refined_bracket(f, k, a, b, j); }, params);
    double la = std::log(a), a1s = std::pow(a, 1.0 - s);
    S.value -= a1s / ((s - 1.0) * (s - 1.0)) + la / (2.0 * std::pow(a, s)) + a1s * la / (s - 1.0);
    return with_floor(S, a1s / ((s - 1.0) * (s - 1.0)));
}

Eval stieltjes1_addison(double a, const RefineParams& params, Reading reading) {
    if (!(a > 0.0)) throw DomainError("stieltjes1_addison: a must be > 0");
    auto f = [](double x) { return std::log(x) / x; };
    int k = params.k;
    Eval S = refine_sum([&](double b, long j) { return refined_bracket(f, k, a, b, j); }, params);
    double la = std::log(a);
    S.value = 0.5 * la / a - S.value - (reading == Reading::adopted ? 0.5 * la * la : 0.0);
    return with_floor(S, 1.0);
}

Eval hurwitz_dprime_addison(double s, double a, const RefineParams& params) {
    check_sa(s, a, "hurwitz_dprime_addison");
    auto f = [s](double x) {
        double l = std::log(x);
        return l * l * std::pow(x, -s);
    };
    int k = params.k;
    Eval S = refine_sum([&](double b, long j) { return refined_bracket(f, k, a, b, j); }, params);
    double la = std::log(a), a1s = std::pow(a, 1.0 - s), d = s - 1.0;
    S.value = -S.value + 2.0 * a1s * la / (d * d) + 2.0 * a1s / (d * d * d) + la * la / (2.0 * std::pow(a, s)) +
              a1s * la * la / d;
    return with_floor(S, 2.0 * a1s / std::abs(d * d * d));
}

namespace {

struct ScaledInner {
    InnerFn inner;
    double scale;
};

ScaledInner zeta_prime_inner(double s, int k, Reading reading) {
    if (!(s > 0.0)) throw DomainError("zeta_prime_addison: s must be > 0");
    if (s == 1.0) throw DomainError("zeta_prime_addison: pole at s = 1");
    auto f = [s](double x) { return std::log(x) * std::pow(x, -s); };
    if (k == 2) {
        double pre = reading == Reading::adopted ? 0.25 : -0.25;
        return {[f](double b, long j) {
                    double jj = double(j);
                    return 2.0 * f(b * (jj + 0.5) + 1.0) - f(b * jj + 1.0) - f(b * (jj + 1.0) + 1.0);
                },
                pre};
    }
    if (k == 3) {
        return {[f](double b, long j) {
                    double jj = double(j);
                    return f(b * (jj + 1.0 / 3) + 1.0) - f(b * jj + 1.0) - f(b * (jj + 1.0) + 1.0) +
                           f(b * (jj + 2.0 / 3) + 1.0);
                },
                1.0 / 3};
    }
    if (k == 4) {
        // The alternative keeps the printed scale 3^{-n} under the 4^{-n} weight.
        const double expo = reading == Reading::adopted ? 1.0 : std::log(3.0) / std::log(4.0);
        return {[f, expo](double b4, long j) {
                    double b = expo == 1.0 ? b4 : std::pow(b4, expo), jj = double(j);
                    return 2.0 * f(b * (jj + 0.25) + 1.0) - 3.0 * f(b * jj + 1.0) - 3.0 * f(b * (jj + 1.0) + 1.0) +
                           2.0 * f(b * (jj + 0.5) + 1.0) + 2.0 * f(b * (jj + 0.75) + 1.0);
                },
                0.125};
    }
    throw DomainError("zeta_prime_addison: k must be 2, 3 or 4");
}

}  // namespace

Eval zeta_prime_addison(double s, int k, Reading reading, RefineParams p) {
    ScaledInner si = zeta_prime_inner(s, k, reading);
    p.k = k;
    Eval S = scaled(refine_sum(si.inner, p), si.scale);
    S.value -= 1.0 / ((s - 1.0) * (s - 1.0));
    return with_floor(S, 1.0 / ((s - 1.0) * (s - 1.0)));
}

std::vector<double> zeta_prime_addison_partials(double s, int k, int depth) {
    if (depth < 1) throw DomainError("zeta_prime_addison: depth must be >= 1");
    ScaledInner si = zeta_prime_inner(s, k, Reading::adopted);
    RefineParams p;
    p.k = k;
    std::vector<Eval> lv = refine_levels(si.inner, depth, p);
    std::vector<double> out;
    double acc = 0.0;
    for (const Eval& e : lv) {
        acc += e.value;
        out.push_back(si.scale * acc - 1.0 / ((s - 1.0) * (s - 1.0)));
    }
    return out;
}

Eval loggamma_addison(double z, Reading reading, RefineParams p) {
    if (!(z > 0.0)) throw DomainError("loggamma_addison: z must be > 0");
    if (z == 1.0) return exact(0.0);
    const double d = z - 1.0;
    p.k = 2;
    Eval S = refine_sum(
        [d](double b, long j) {
            double x = b * double(j);
            return std::log1p(d / (1.0 + x)) + std::log1p(d / (1.0 + b + x)) - 2.0 * std::log1p(2.0 * d / (2.0 + b + 2.0 * x));
        },
        p);
    double lead = reading == Reading::adopted ? (z - 0.5) * std::log(z) : (z - 0.5);
    Eval r = scaled(S, -0.25);
    r.value += lead - z + 1.0;
    return with_floor(r, std::abs(lead) + z);
}

namespace {

// j ln(1 + 1/(bj)) + (j+1) ln(1 + 1/(b(j+1))) - (2j+1) ln(1 + 2/(b(2j+1))).
// For j >= 5 this is (1/b) times a central second difference of phi(u) = u ln(1 + 1/u)
// with step h = b/2 around c = b(j + 1/2), summed from the Taylor series of phi.
double cor6_bracket(double b, long j) {
    double jj = double(j);
    if (j < 5) {
        double t1 = j == 0 ? 0.0 : jj * std::log1p(1.0 / (b * jj));
        double t2 = (jj + 1.0) * std::log1p(1.0 / (b * (jj + 1.0)));
        double t3 = (2.0 * jj + 1.0) * std::log1p(2.0 / (b * (2.0 * jj + 1.0)));
        return t1 + t2 - t3;
    }
    double h = 0.5 * b, c = b * (jj + 0.5), l1c = std::log1p(1.0 / c);
    double q = (h / c) * (h / c), q1 = (h / (c + 1.0)) * (h / (c + 1.0));
    double pc = q, pc1 = q1, s = 0.0;
    for (int m = 1; m <= 20; ++m) {
        double t = c * pc * std::expm1(-(2.0 * m - 1.0) * l1c) / (2.0 * m * (2.0 * m - 1.0)) + pc1 / (2.0 * m);
        s += t;
        if (std::abs(t) < 1e-18 * std::abs(s)) break;
        pc *= q;
        pc1 *= q1;
    }
    return 2.0 * s / b;
}

}  // namespace

Eval log_sqrt_2pi_addison(Reading reading, RefineParams p) {
    const bool four = reading == Reading::adopted;
    p.k = 2;
    Eval S = refine_sum([four](double b, long j) { return (four ? b : 1.0) * cor6_bracket(b, j); }, p);
    Eval r = scaled(S, -0.25);
    r.value += 0.75;
    return with_floor(r, 1.0);
}

namespace {

InnerFn l4_inner(double s) {
    return [s](double b, long j) {
        auto f = [s](double x) { return std::pow(x, -s); };
        double jj = double(j);
        return f(b * jj + 0.25) - 2.0 * f(b * (jj + 0.5) + 0.25) + f(b * (jj + 1.0) + 0.25) - f(b * jj + 0.75) +
               2.0 * f(b * (jj + 0.5) + 0.75) - f(b * (jj + 1.0) + 0.75);
    };
}

double l4_head(double s) {
    double pole = s == 1.0 ? std::log(3.0) : -std::expm1((1.0 - s) * std::log(3.0)) / (s - 1.0);
    return 0.5 * (1.0 - std::pow(3.0, -s)) + 0.25 * pole;
}

}  // namespace

Eval L4_addison(double s, const RefineParams& params) {
    if (!(s >= 0.0)) throw DomainError("L4_addison: s must be >= 0");
    if (params.k != 2) throw DomainError("L4_addison: the series is defined for k = 2");
    if (s == 0.0) return exact(l4_head(0.0));
    Eval S = scaled(refine_sum(l4_inner(s), params), std::pow(4.0, -s - 1.0));
    S.value += l4_head(s);
    return with_floor(S, 1.0);
}

std::vector<double> L4_addison_partials(double s, int depth) {
    if (!(s >= 0.0)) throw DomainError("L4_addison: s must be >= 0");
    if (depth < 1) throw DomainError("L4_addison: depth must be >= 1");
    std::vector<Eval> lv = refine_levels(l4_inner(s), depth);
    std::vector<double> out;
    double acc = 0.0, w = std::pow(4.0, -s - 1.0), h = l4_head(s);
    for (const Eval& e : lv) {
        acc += e.value;
        out.push_back(h + w * acc);
    }
    return out;
}

}  // namespace addison
