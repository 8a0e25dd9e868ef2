#pragma once

#include <utility>

#include "addison/eval.hpp"

namespace addison {

enum class SomosMethod { p1_integral, exp_integral, polylog_series };

/// ln sigma_t = sum_{n>=2} ln(n) / t^n, t > 1.
Eval somos_ln(double t, SomosMethod method = SomosMethod::polylog_series);

/// (1/(t-1)) sum_k (1/k) [t Li_k(1/t) - 1], the second polylog form of ln sigma_t.
Eval somos_ln_series_second(double t);

/// ln g_n for g_n = n g_{n-1}^t, g_0 = 1, from the closed form in sigma_t and Phi_s.
Eval somos_recurrence(int n, double t = 2.0);

/// ln g_n by running the recurrence itself (oracle for somos_recurrence).
double somos_recurrence_direct(int n, double t = 2.0);

/// ln z + z ln sigma_{z+1}; tends to -gamma as z -> 0+.
Eval somos_gamma_limit(double z);

/// Accelerated sums equal to -gamma:
/// which = 1: sum_{k>=2} (-1)^{k-1} zeta(k)/k; which = 2: -1 + sum_{k>=2} (zeta(k)-1)/k.
Eval zeta_gamma_series(int which);

/// H(s, a) = sum_{n>=1} H_n / (n+a)^s via digamma integrals, s > 1, a > -1.
Eval euler_sum_H(double s, double a);

/// ln K(x), the log hyperfactorial, x >= 0.
Eval hyperfactorial(double x);

/// int z^n lnGamma(z) dz moments over [0, 1/2] or [0, 1]; which in 'a'..'e'.
/// first: closed form in ln A, zeta(3), zeta'(-3), ln 2, ln pi; second: quadrature.
std::pair<Eval, Eval> loggamma_moment(char which);

/// ln A = -zeta'(2)/(2 pi^2) + (ln 2pi + gamma)/12.
Eval glaisher_lnA();

/// The same relation with a 1/pi^2 prefactor; kept for the deviations report.
Eval glaisher_lnA_printed();

}  // namespace addison
