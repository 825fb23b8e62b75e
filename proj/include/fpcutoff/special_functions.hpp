#pragma once

#include <cmath>

namespace fpcutoff {

// Sign-and-log representation for values whose linear form may overflow.
struct LogValue {
    double log_magnitude = 0.0;
    int sign = 0;  // +1, -1, or 0 (exact zero; log_magnitude is then meaningless)

    static LogValue from_value(double v) {
        if (v == 0.0) return {0.0, 0};
        return {std::log(std::fabs(v)), v > 0.0 ? +1 : -1};
    }
    // Linear-domain value; may overflow to +/-inf, which is the caller's problem.
    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_magnitude);
    }
};

// ln Gamma(x) for x > 0, relative error <= 1e-13 on [1e-6, 1e8].
// Stirling series after an upward recurrence shift; no reliance on std::lgamma.
double log_gamma(double x);

// ln B(a, b) = log_gamma(a) + log_gamma(b) - log_gamma(a + b), a, b > 0.
double log_beta(double a, double b);

// (Gamma(x)/Gamma(y))^s evaluated entirely in the log domain.
// Safe for x, y up to 1e8 whenever the true result is representable.
double gamma_ratio_pow(double x, double y, double s);

// Companion variant for results outside double range.
LogValue gamma_ratio_pow_log(double x, double y, double s);

}  // namespace fpcutoff
