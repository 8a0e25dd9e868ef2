#pragma once

#include <utility>

#include "addison/eval.hpp"
#include "addison/quad.hpp"

namespace addison {

/// Lerch Phi(z, s, a) = sum_{n>=0} z^n (n + a)^{-s} for |z| <= 1 (s > 1 when |z| = 1), a > 0.
/// z in (0, 1] uses the P1 integral representation; negative z is split into z^2 halves.
Eval lerch_phi(double z, double s, double a, const QuadSpec& spec = precise_spec());

/// Brute-force partial sum of the defining series up to n = N with a tail bound.
Eval lerch_series_oracle(double z, double s, double a, long N);

/// Li_s(z) for |z| <= 1 (s > 1 when |z| = 1).
Eval polylog(double s, double z, const QuadSpec& spec = precise_spec());

/// d/ds Phi(z, s, a) for |z| < 1.
Eval lerch_phi_sderiv(double z, double s, double a, const QuadSpec& spec = precise_spec());

/// int_0^1 t^{alpha-1} Li_n(t) dt, alpha > -1, n >= 1.
Eval polylog_moment(double alpha, int n);

/// Both sides of Phi(z, k, a) = a^{-k} {}_{k+1}F_k(1, a, ..., a; a+1, ..., a+1; z).
/// first: hypergeometric side, second: lerch_phi.
std::pair<Eval, Eval> hyp_check_phi(int k, double a, double z);

}  // namespace addison
