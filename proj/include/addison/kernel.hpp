#pragma once

namespace addison {

/// Fractional part x - floor(x), in [0, 1).
double frac(double x);

/// First periodized Bernoulli polynomial P1(x) = {x} - 1/2.
double p1(double x);

/// Subdivision step function g_k(x) = f(x) - f(kx)/k with f = -P1.
/// Piecewise constant; left-closed at breakpoints j/k.
double g_k(int k, double x);

/// Fourier partial sum -sum_{j<=J} sin(2 pi j x)/(pi j).
double p1_fourier(double x, int J);

}  // namespace addison
