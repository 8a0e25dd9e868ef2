#include "addison/hyper.hpp"

#include <cmath>
#include <string>

namespace addison {

Eval hyper_pfq(const std::vector<double>& a, const std::vector<double>& b, double x, double tol,
               long max_terms) {
    for (double bj : b)
        if (bj <= 0 && bj == std::floor(bj)) throw DomainError("hyper_pfq: lower parameter is a non-positive integer");
    const std::size_t p = a.size(), q = b.size();
    if (p > q + 1 && x != 0.0) throw DomainError("hyper_pfq: divergent series (p > q + 1)");
    if (p == q + 1 && std::abs(x) >= 1.0) throw DomainError("hyper_pfq: |x| must be < 1 when p = q + 1");
    const double limit_ratio = (p == q + 1) ? std::abs(x) : 0.0;

    double sum = 1.0, term = 1.0, mag = 1.0;
    for (long n = 0; n < max_terms; ++n) {
        double r = x / (n + 1.0);
        for (double ai : a) r *= ai + n;
        for (double bj : b) r /= bj + n;
        term *= r;
        sum += term;
        mag += std::abs(term);
        if (term == 0.0) return {sum, 0.0, n + 1};
        // ratio of the following term, bounded by its limit when that is larger
        double rn = std::abs(x) / (n + 2.0);
        for (double ai : a) rn *= std::abs(ai + n + 1);
        for (double bj : b) rn /= std::abs(bj + n + 1);
        double rb = std::max(rn, limit_ratio);
        // only trust the bound once the ratios have settled below one and are not growing
        bool settled = rb < 1.0 && (n + 1) > 2 * (std::abs(x) + 1.0);
        if (settled) {
            double tail = std::abs(term) * rb / (1.0 - rb);
            if (tail <= tol * std::max(1.0, std::abs(sum))) {
                Eval e{sum, tail + 4 * 2.220446049250313e-16 * mag, n + 1};
                return e;
            }
        }
    }
    throw NumericFailure("hyper_pfq: truncation did not converge", {sum, INFINITY, max_terms});
}

Eval hyp1F2(double a1, double b1, double b2, double x) { return hyper_pfq({a1}, {b1, b2}, x); }

Eval hyp2F1(double a, double b, double c, double x) { return hyper_pfq({a, b}, {c}, x); }

}  // namespace addison
