#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "addison/eval.hpp"

namespace addison {

/// How integrate_p1 accounts for the part of [a, inf) beyond the last cell.
enum class TailMode {
    bound_by_abs,     // stop once (1/2) * int_N^inf |f| < tol; no correction
    aitken,           // Aitken delta-squared on partial sums at doubling checkpoints
    euler_maclaurin,  // add -g(N)/12 + g''(N)/720 - g''''(N)/30240, derivatives by differences
};

struct QuadSpec {
    double tol = 1e-10;
    int nodes_per_interval = 16;
    long max_intervals = 100000;
    TailMode tail_mode = TailMode::euler_maclaurin;
};

/// QuadSpec with a tighter tolerance; used internally by composite functions.
inline QuadSpec precise_spec(double tol = 1e-13) {
    QuadSpec s;
    s.tol = tol;
    return s;
}

using RealFn = std::function<double(double)>;

Eval integrate_finite(const RealFn& f, double a, double b, const QuadSpec& spec = {});
Eval integrate_semi_inf(const RealFn& f, double a, const QuadSpec& spec = {});

/// int_a^inf f(x) P1(x) dx, cell by cell with the exact linear P1 on each [n, n+1).
Eval integrate_p1(const RealFn& f, double a, const QuadSpec& spec = {});

/// int_a^b f(x) P1(x) dx over a finite range, no tail.
Eval integrate_p1_range(const RealFn& f, double a, double b, const QuadSpec& spec = {});

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

/// n-point Gauss-Legendre rule; computed once per n and cached.
const GaussRule& gauss_legendre(int n);

template <class F>
auto gauss_cell(F&& f, double a, double b, int n) -> decltype(f(a)) {
    const GaussRule& g = gauss_legendre(n);
    const double c = 0.5 * (a + b), d = 0.5 * (b - a);
    decltype(f(a)) s{};
    for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(c + d * g.x[i]);
    return s * d;
}

/// B_{2j}/(2j)!, j >= 1.
double bernoulli_ratio(int j);

/// Euler-Maclaurin tail int_N^inf P1(x) g(x) dx = -sum_j B_{2j}/(2j)! g^{(2j-2)}(N),
/// given even-order derivatives g(N), g''(N), ...; stops at the smallest term.
template <class T>
T em_p1_tail(const std::vector<T>& even_derivs, double* last_term = nullptr) {
    T s{};
    double prev = INFINITY;
    for (std::size_t j = 1; j <= even_derivs.size(); ++j) {
        T term = -bernoulli_ratio(static_cast<int>(j)) * even_derivs[j - 1];
        double m = std::abs(term);
        if (m > prev) break;  // asymptotic series started to diverge
        s += term;
        prev = m;
    }
    if (last_term) *last_term = prev;
    return s;
}

}  // namespace addison
