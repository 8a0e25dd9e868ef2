#include "addison/kernel.hpp"

#include <cmath>
#include <numbers>

#include "addison/eval.hpp"

namespace addison {

namespace {

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite argument");
}

}  // namespace

double frac(double x) {
    require_finite(x, "frac");
    double r = x - std::floor(x);
    // x slightly below an integer can round up to exactly 1
    return r < 1.0 ? r : 0.0;
}

double p1(double x) {
    require_finite(x, "p1");
    return frac(x) - 0.5;
}

double g_k(int k, double x) {
    if (k < 2) throw DomainError("g_k: k must be >= 2");
    require_finite(x, "g_k");
    // value on [(j-1)/k, j/k) is (1 - 1/k)/2 - (j-1)/k
    double u = frac(x);
    double jm1 = std::floor(u * k);
    // guard the k-th breakpoint against rounding in u*k
    if (jm1 > k - 1) jm1 = k - 1;
    while (jm1 > 0 && jm1 / k > u) jm1 -= 1;
    while ((jm1 + 1) / k <= u && jm1 < k - 1) jm1 += 1;
    return 0.5 * (1.0 - 1.0 / k) - jm1 / k;
}

double p1_fourier(double x, int J) {
    if (J < 1) throw DomainError("p1_fourier: J must be >= 1");
    require_finite(x, "p1_fourier");
    const double t = 2.0 * std::numbers::pi * frac(x);
    double s = 0.0;
    for (int j = J; j >= 1; --j) s += std::sin(j * t) / j;
    return -s / std::numbers::pi;
}

}  // namespace addison
