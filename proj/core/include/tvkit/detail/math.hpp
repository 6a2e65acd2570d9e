#pragma once

#include <cmath>

namespace tvkit::detail {

/// (1+rate)^n computed as exp(n*ln(1+rate)) so integer and fractional
/// exponents go through the same path. Requires 1+rate > 0.
inline double pow1p(double rate, double n) {
    if (n == 0.0)
        return 1.0;
    return std::exp(n * std::log1p(rate));
}

} // namespace tvkit::detail
