#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fuzzfrac/fuzzy_number.hpp"

namespace testutil {

/// Distance between two doubles in units of the larger one's ulp.
inline double ulp_diff(double a, double b) {
    if (a == b) {
        return 0.0;
    }
    const double scale = std::max(std::abs(a), std::abs(b));
    const double ulp = std::nextafter(scale, std::numeric_limits<double>::infinity()) - scale;
    return std::abs(a - b) / ulp;
}

inline double max_endpoint_ulp_diff(const fuzzfrac::FuzzyNumber& x, const fuzzfrac::FuzzyNumber& y) {
    double worst = 0.0;
    for (std::size_t j = 0; j < x.grid().level_count(); ++j) {
        worst = std::max(worst, ulp_diff(x.lower()[j], y.lower()[j]));
        worst = std::max(worst, ulp_diff(x.upper()[j], y.upper()[j]));
    }
    return worst;
}

/// Random valid fuzzy number: monotone endpoint staircases around a random core.
inline fuzzfrac::FuzzyNumber random_fuzzy(std::mt19937_64& rng, const fuzzfrac::AlphaGrid& grid,
                                          double min_support_width = 0.0) {
    std::uniform_real_distribution<double> center(-5.0, 5.0);
    std::uniform_real_distribution<double> step(0.0, 1.0);
    const std::size_t m = grid.segments();
    std::vector<double> lower(m + 1);
    std::vector<double> upper(m + 1);
    const double peak_lo = center(rng);
    const double peak_hi = peak_lo + step(rng) * 0.5;
    lower[m] = peak_lo;
    upper[m] = peak_hi;
    for (std::size_t j = m; j-- > 0;) {
        lower[j] = lower[j + 1] - step(rng);
        upper[j] = upper[j + 1] + step(rng);
    }
    if (upper[0] - lower[0] < min_support_width) {
        upper[0] = lower[0] + min_support_width + step(rng);
        for (std::size_t j = 1; j <= m; ++j) {
            upper[j] = std::min(upper[j - 1], upper[j]);
        }
        for (std::size_t j = m + 1; j-- > 1;) {
            if (upper[j] < lower[j]) {
                upper[j] = lower[j];
            }
        }
        for (std::size_t j = m; j-- > 0;) {
            upper[j] = std::max(upper[j], upper[j + 1]);
        }
    }
    return fuzzfrac::FuzzyNumber::from_levels(grid, std::move(lower), std::move(upper));
}

inline fuzzfrac::AlphaGrid random_grid(std::mt19937_64& rng, std::size_t max_segments = 8) {
    std::uniform_int_distribution<std::size_t> segs(1, max_segments);
    return fuzzfrac::AlphaGrid(segs(rng) + 1);
}

}  // namespace testutil
