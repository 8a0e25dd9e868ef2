#pragma once

#include <array>
#include <utility>

#include "addison/eval.hpp"

namespace addison {

/// A_k(q) = k d/dz zeta(z, q) at z = 1 - k.
enum class AkMethod {
    stieltjes_b2,  // -1/k - k sum_n gamma_{n+1}(q) k^n / n!, k in 1..4, q in [0, 1]
    integral_b19,  // P1 integrals, k <= 1, k != 0, q in (0, 1]
    shift_b8,      // A_k(q+1) from the Stieltjes sum, minus k q^{k-1} ln q; k in 1..4
    boundary_b3,   // k zeta'(1-k), q in {0, 1}, k >= 2
};

constexpr int kDefaultAkDepth = 18;

/// depth = number of Stieltjes terms (gamma_1 .. gamma_depth), at most 20.
Eval a_k(int k, double q, AkMethod method, int depth = kDefaultAkDepth);

/// A_k(x) for any x > 0, reduced to (0, 1] with A_k(x+1) = A_k(x) + k x^{k-1} ln x.
Eval a_k_shifted(int k, double x, AkMethod method = AkMethod::stieltjes_b2);

/// (B_k(q) from the Bernoulli expansion, 1 - k sum_n gamma_n(q) k^n / n!), k in 1..4.
std::pair<Eval, Eval> bernoulli_stieltjes_check(int k, double q, int depth = 20);

/// sum_{n>=1} gamma_n / n!, truncated after gamma_20; equals 1/2 - gamma.
Eval stieltjes_factorial_sum();

/// int_0^1 A_k(q) dq, computed as int_0^1 A_k(q+1) dq - k int_0^1 q^{k-1} ln q dq, k in 1..4.
Eval ak_mean(int k);

/// (LHS, RHS) of the summation relation over r = 1..q and l = 0..p-1.
std::pair<Eval, Eval> ak_sum_relation_pq(int k, int p, int q, double b,
                                          AkMethod method = AkMethod::stieltjes_b2);

/// (LHS, RHS) of the prime relation at prime p <= 5, N <= 2, k in {2, 3}.
std::pair<Eval, Eval> ak_prime_relation(int k, int p, int N);

/// A_2(q) from its Fourier form: the ln n cos series summed to `terms`, the sine series as Cl_2.
Eval a2_fourier(double q, long terms = 1000000);

/// The three forms of lnGamma(s) - [(s - 1/2) ln s - s + ln sqrt(2 pi)], s > 0:
/// -int_0^inf P1/(x+s), the e^{-ts} Laplace form, and the arctan form.
std::array<Eval, 3> binet_forms(double s);

/// lnGamma(s+1) = (s + 1/2) ln s - s + ln sqrt(2 pi) - int_0^inf P1(x)/(x+s) dx.
Eval loggamma_p1(double s);

}  // namespace addison
