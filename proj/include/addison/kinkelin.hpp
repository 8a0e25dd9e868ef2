#pragma once

#include <vector>

#include "addison/eval.hpp"

namespace addison {

/// Taylor coefficients of Gamma(z+1) about 0, c_0 = 1, c_1 = -gamma.
struct GammaTaylor {
    std::vector<double> coeffs;
    /// Largest |c_n + 1/n sum ...| recomputed against the stored coefficients.
    double max_residual = 0.0;

    /// sum_k c_k z^k over the stored coefficients.
    double eval(double z) const;
};

/// c_0..c_N by the zeta-weighted convolution recurrence, N <= 40.
GammaTaylor gamma_taylor(int N);

enum class KinkelinMethod { laplace_a1, gamma_moment_a2, series_a5, p1_a8 };

/// k = zeta'(-1) by one of four routes.
Eval kinkelin(KinkelinMethod method);

/// The P1-integral correction term of the p1_a8 route alone.
Eval kinkelin_p1_term();

/// 1/12 - (1/4) ln 2pi + int_0^1 x Gamma(x) dx (Gamma, not ln Gamma); not equal to k.
Eval kinkelin_a2_printed();

enum class MomentXMethod { taylor_a3, laplace_a10, direct };

/// int_0^1 x Gamma(x) dx.
Eval gamma_moment_x(MomentXMethod method);

/// The Taylor route in its first (alternating, Beta integral) or second (Gamma(x+1)) form.
Eval gamma_moment_x_taylor(int form);

/// lambda int_0^inf e^{-lambda t} (lambda t - 1)/ln(lambda t) dt, any lambda > 0.
Eval gamma_moment_x_laplace(double lambda);

enum class MomentSinMethod { laplace_a9, onef2_a12, antiderivative_a13 };

struct SinMomentOptions {
    int terms = 40;          // Taylor orders k < terms
    bool pole_tail = true;   // add the (-1)^k part of c_k beyond `terms` in closed form
    double lambda = 1.0;     // laplace_a9 scale
};

/// int_0^1 sin(alpha x) Gamma(x) dx, |alpha| <= pi/2 (strict for laplace_a9).
Eval gamma_moment_sin(double alpha, MomentSinMethod method, const SinMomentOptions& opt = {});

/// Partial sums of the reordered double series: sum_{j=2}^{N} [j(j+1) ln((j+1)/j) -
/// (6j^2+3j-1)/(6j)], with the tail beyond N from Hurwitz zeta values.
Eval reordered_sum(long N);

/// 11/6 + gamma/6 - 2 ln A - 2 ln 2.
double reordered_sum_closed();

/// sum_{k<=N} k ln k - (N^2/2 + N/2 + 1/12) ln N + N^2/4, tending to ln A.
double glaisher_partial(long N);

}  // namespace addison
