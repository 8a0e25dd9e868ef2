#pragma once

#include "addison/eval.hpp"
#include "addison/quad.hpp"

namespace addison {

/// Riemann zeta for s > -1, s != 1, from the P1 integral over [1, inf).
Eval zeta(double s, const QuadSpec& spec = precise_spec());

/// Hurwitz zeta(s, a) for s > -1, s != 1, a > 0.
Eval hurwitz(double s, double a, const QuadSpec& spec = precise_spec());

/// n-th s-derivative of zeta for s > 1.
Eval zeta_nderiv(int n, double s, const QuadSpec& spec = precise_spec());

/// d/ds zeta(s, a) for s > 0, s != 1, a > 0.
Eval hurwitz_sderiv(double s, double a, const QuadSpec& spec = precise_spec());

/// Generalized Stieltjes constant gamma_n(a), n <= 20, a in (0, 2].
Eval stieltjes(int n, double a, const QuadSpec& spec = precise_spec());

/// C_n(a) = gamma_n(a) - ln^n(a)/a, n >= 1, a in (0, 1].
Eval stieltjes_c(int n, double a, const QuadSpec& spec = precise_spec());

/// Digamma psi(a), a > 0.
Eval digamma(double a, const QuadSpec& spec = precise_spec());

/// Bernoulli number B_k (B_1 = -1/2).
double bernoulli_number(int k);

/// Bernoulli polynomial B_k(q) from the binomial expansion in Bernoulli numbers.
double bernoulli_poly(int k, double q);

/// zeta'(1 - k), k >= 2.
Eval zeta_prime_neg(int k);

/// zeta(k) and zeta'(k) at integers k >= 2, memoized.
Eval zeta_at(int k);
Eval zeta_prime_at(int k);

/// h(s) = int_1^inf x^{-s-1} P1(x) dx = -zeta(s)/s + (s+1)/(2s(s-1)); h(1) = 1/2 - gamma.
Eval h_moment(double s);

}  // namespace addison
