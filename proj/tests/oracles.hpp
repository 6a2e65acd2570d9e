// Independent reference implementations used to freeze expected values.
// These deliberately avoid the library's own numeric paths: fixed-grid
// composite Simpson instead of adaptive refinement, direct repeated
// multiplication instead of log-based exponentials.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// Composite Simpson on a fixed uniform grid (panels must be even).
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int panels = 20000) {
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i)
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// Minimal N with base*(1+k)^N > threshold, by direct iteration.
// Returns -1 when no crossing occurs within n_max steps.
inline std::int64_t crossing_period(double base, double k, double threshold,
                                    std::int64_t n_max) {
    double value = base;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (value > threshold)
            return n;
        value *= 1.0 + k;
    }
    return -1;
}

// Chi-square statistic for observed counts against a uniform expectation.
inline double chi_square_uniform(const std::vector<long>& counts, long total) {
    const double expected = static_cast<double>(total) /
                            static_cast<double>(counts.size());
    double stat = 0.0;
    for (long c : counts) {
        const double d = c - expected;
        stat += d * d / expected;
    }
    return stat;
}

// Upper 1% critical values of chi-square, df = index (1-based, df <= 9).
inline double chi_square_crit_01(int df) {
    static const double crit[] = {0.0,    6.635,  9.210,  11.345, 13.277,
                                  15.086, 16.812, 18.475, 20.090, 21.666};
    return crit[df];
}

} // namespace oracle
