#pragma once

#include <functional>
#include <vector>

#include "addison/eval.hpp"

namespace addison {

struct RefineParams {
    int k = 2;              // refinement base, b = k^{-n}
    int n_max = 60;         // outer levels allowed before giving up
    long j_max = 1L << 28;  // inner terms allowed per level
    double tol = 1e-10;
};

/// inner(b, j) for b = k^{-n}.
using InnerFn = std::function<double(double b, long j)>;

/// sum_{n>=0} k^{-n} sum_{j>=0} inner(k^{-n}, j) with geometric tail models for both sums.
Eval refine_sum(const InnerFn& inner, const RefineParams& params = {});

/// The weighted level sums T_n = k^{-n} sum_j inner(k^{-n}, j), n = 0..levels-1.
std::vector<Eval> refine_levels(const InnerFn& inner, int levels, const RefineParams& params = {});

/// Which reading of a formula whose printed form is ambiguous or fails validation.
enum class Reading { adopted, alternative };

/// gamma from the first (form 1) or second (form 2) block arrangement; depth > 0 truncates.
Eval gamma_addison(int form = 1, int depth = 0);

/// gamma from the binary-digit series, forms 1..3, paired summation over `terms` terms;
/// with_tail adds the remainder octave by octave.
Eval gamma_vacca(int form = 2, long terms = 1L << 21, bool with_tail = true);

/// zeta'(s, a) from the k-refined double series, s > 0, s != 1, a > 0.
Eval hurwitz_prime_addison(double s, double a, const RefineParams& params = {});

/// gamma_1(a) from the s -> 1 limit of the same series.
Eval stieltjes1_addison(double a, const RefineParams& params = {}, Reading reading = Reading::adopted);

/// zeta''(s, a) from the differentiated series.
Eval hurwitz_dprime_addison(double s, double a, const RefineParams& params = {});

/// zeta'(s) from the fixed-k forms k = 2, 3, 4 (params.k is set from k).
Eval zeta_prime_addison(double s, int k, Reading reading = Reading::adopted, RefineParams params = {});

/// Partial values of zeta_prime_addison truncated after n = 0..depth-1 outer levels.
std::vector<double> zeta_prime_addison_partials(double s, int k, int depth);

/// ln Gamma(z), z > 0 (k = 2).
Eval loggamma_addison(double z, Reading reading = Reading::adopted, RefineParams params = {});

/// ln sqrt(2 pi) as the integral of ln Gamma over [0, 1] (k = 2).
Eval log_sqrt_2pi_addison(Reading reading = Reading::adopted, RefineParams params = {});

/// L(s) for the character modulo 4, s >= 0.
Eval L4_addison(double s, const RefineParams& params = {});

/// Partial values of L4_addison truncated after n = 0..depth-1 outer levels.
std::vector<double> L4_addison_partials(double s, int depth);

}  // namespace addison
