#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace addison {

/// A numeric result with an absolute error estimate and a work counter
/// (cells, nodes or terms consumed, depending on the producer).
struct Eval {
    double value = 0.0;
    double err_est = 0.0;
    std::int64_t work = 0;

    Eval& operator+=(const Eval& o) {
        value += o.value;
        err_est += o.err_est;
        work += o.work;
        return *this;
    }
};

inline Eval operator+(Eval a, const Eval& b) { return a += b; }

inline Eval operator-(Eval a, const Eval& b) {
    a.value -= b.value;
    a.err_est += b.err_est;
    a.work += b.work;
    return a;
}

inline Eval scaled(Eval e, double c) {
    e.value *= c;
    e.err_est *= std::abs(c);
    return e;
}

inline Eval exact(double v) { return {v, 0.0, 0}; }

// Rounding floor so that err_est never claims more than double precision.
inline Eval with_floor(Eval e, double magnitude_hint = 0.0) {
    double m = std::max(std::abs(e.value), std::abs(magnitude_hint));
    e.err_est = std::max(e.err_est, 4.0 * 2.220446049250313e-16 * m);
    return e;
}

/// Argument outside an operation's domain (a usage error).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numeric procedure failed to reach its target; carries the partial result.
class NumericFailure : public std::runtime_error {
public:
    NumericFailure(const std::string& what, Eval partial = {}, double abscissa = NAN)
        : std::runtime_error(what), partial_(partial), abscissa_(abscissa) {}

    const Eval& partial() const noexcept { return partial_; }
    double abscissa() const noexcept { return abscissa_; }

private:
    Eval partial_;
    double abscissa_;
};

}  // namespace addison
