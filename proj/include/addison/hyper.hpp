#pragma once

#include <vector>

#include "addison/eval.hpp"

namespace addison {

/// Truncated pFq power series sum_n prod(a)_n / prod(b)_n x^n / n!.
/// The tail after the last term is bounded by the ratio test; the series must
/// converge (p <= q, or p = q + 1 with |x| < 1).
Eval hyper_pfq(const std::vector<double>& a, const std::vector<double>& b, double x,
               double tol = 1e-17, long max_terms = 1000000);

/// 1F2(a1; b1, b2; x).
Eval hyp1F2(double a1, double b1, double b2, double x);

/// 2F1(a, b; c; x), |x| < 1.
Eval hyp2F1(double a, double b, double c, double x);

}  // namespace addison
