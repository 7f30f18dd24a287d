#include "fuzzfrac/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fuzzfrac {

namespace {

void check_finite(std::span<const double> values, const char* name) {
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (!std::isfinite(values[j])) {
            throw NonFinite(std::string(name) + "[" + std::to_string(j) + "] = " +
                            std::to_string(values[j]));
        }
    }
}

void validate(const AlphaGrid& grid, const std::vector<double>& lower,
              const std::vector<double>& upper) {
    if (lower.size() != grid.level_count() || upper.size() != grid.level_count()) {
        throw DomainError("endpoint arrays must have length " +
                          std::to_string(grid.level_count()) + ", got " +
                          std::to_string(lower.size()) + " and " + std::to_string(upper.size()));
    }
    check_finite(lower, "lower");
    check_finite(upper, "upper");
    const std::size_t m = grid.segments();
    for (std::size_t j = 1; j <= m; ++j) {
        if (lower[j] < lower[j - 1] - kValidationTol) {
            throw MonotonicityViolation(Side::lower, j);
        }
        if (upper[j] > upper[j - 1] + kValidationTol) {
            throw MonotonicityViolation(Side::upper, j);
        }
    }
    if (lower[m] > upper[m] + kValidationTol) {
        throw CrossingViolation(lower[m], upper[m]);
    }
}

double interp(const AlphaGrid& grid, std::span<const double> values, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
    const double m = static_cast<double>(grid.segments());
    const double pos = alpha * m;
    const auto j = static_cast<std::size_t>(pos);
    if (j >= grid.segments()) {
        return values[grid.segments()];
    }
    return std::lerp(values[j], values[j + 1], pos - static_cast<double>(j));
}

}  // namespace

FuzzyNumber FuzzyNumber::from_levels(const AlphaGrid& grid, std::vector<double> lower,
                                     std::vector<double> upper) {
    validate(grid, lower, upper);
    return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c, const AlphaGrid& grid) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) {
        throw NonFinite("triangular(a, b, c)");
    }
    if (a > b || b > c) {
        throw InvalidOrdering(a, b, c);
    }
    const std::size_t n = grid.level_count();
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    // std::lerp is monotone in alpha and exact at the endpoints, so the
    // parametric-form conditions hold by construction at every magnitude.
    for (std::size_t j = 0; j < n; ++j) {
        const double alpha = grid.level(j);
        lower[j] = std::lerp(a, b, alpha);
        upper[j] = std::lerp(c, b, alpha);
    }
    return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

FuzzyNumber FuzzyNumber::crisp(double r, const AlphaGrid& grid) {
    if (!std::isfinite(r)) {
        throw NonFinite("crisp(r)");
    }
    std::vector<double> lower(grid.level_count(), r);
    std::vector<double> upper(grid.level_count(), r);
    return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

FuzzyNumber FuzzyNumber::zero_hat(const AlphaGrid& grid) { return crisp(0.0, grid); }

double FuzzyNumber::lower_at(double alpha) const { return interp(grid_, lower_, alpha); }

double FuzzyNumber::upper_at(double alpha) const { return interp(grid_, upper_, alpha); }

namespace {

void require_same_grid(const FuzzyNumber& x, const FuzzyNumber& y) {
    if (x.grid() != y.grid()) {
        throw GridMismatch(x.grid().level_count(), y.grid().level_count());
    }
}

}  // namespace

FuzzyNumber add(const FuzzyNumber& x, const FuzzyNumber& y) {
    require_same_grid(x, y);
    const std::size_t n = x.grid().level_count();
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    for (std::size_t j = 0; j < n; ++j) {
        lower[j] = x.lower()[j] + y.lower()[j];
        upper[j] = x.upper()[j] + y.upper()[j];
    }
    return FuzzyNumber::from_levels(x.grid(), std::move(lower), std::move(upper));
}

FuzzyNumber scalar_mul(double lambda, const FuzzyNumber& x) {
    if (!std::isfinite(lambda)) {
        throw NonFinite("scalar_mul(lambda)");
    }
    const std::size_t n = x.grid().level_count();
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    if (lambda < 0.0) {
        for (std::size_t j = 0; j < n; ++j) {
            lower[j] = lambda * x.upper()[j];
            upper[j] = lambda * x.lower()[j];
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            lower[j] = lambda * x.lower()[j];
            upper[j] = lambda * x.upper()[j];
        }
    }
    return FuzzyNumber::from_levels(x.grid(), std::move(lower), std::move(upper));
}

OrderVerdict leq(const FuzzyNumber& x, const FuzzyNumber& y, double tol) {
    require_same_grid(x, y);
    if (!(tol >= 0.0)) {
        throw DomainError("leq tolerance must be nonnegative");
    }
    for (std::size_t j = 0; j < x.grid().level_count(); ++j) {
        if (x.lower()[j] > y.lower()[j] + tol) {
            return OrderVerdict{false, OrderViolation{j, Side::lower, x.lower()[j] - y.lower()[j]}};
        }
        if (x.upper()[j] > y.upper()[j] + tol) {
            return OrderVerdict{false, OrderViolation{j, Side::upper, x.upper()[j] - y.upper()[j]}};
        }
    }
    return OrderVerdict{};
}

double distance_sup(const FuzzyNumber& x, const FuzzyNumber& y) {
    require_same_grid(x, y);
    double sup = 0.0;
    for (std::size_t j = 0; j < x.grid().level_count(); ++j) {
        sup = std::max(sup, std::abs(x.lower()[j] - y.lower()[j]));
        sup = std::max(sup, std::abs(x.upper()[j] - y.upper()[j]));
    }
    return sup;
}

double width(const FuzzyNumber& x, double alpha) {
    // Construction tolerates crossings up to kValidationTol, so clamp.
    return std::max(0.0, x.upper_at(alpha) - x.lower_at(alpha));
}

bool is_crisp(const FuzzyNumber& x) { return width(x, 0.0) <= kValidationTol; }

RepairResult repair(const AlphaGrid& grid, std::vector<double> lower, std::vector<double> upper) {
    if (lower.size() != grid.level_count() || upper.size() != grid.level_count()) {
        throw DomainError("endpoint arrays must have length " +
                          std::to_string(grid.level_count()));
    }
    check_finite(lower, "lower");
    check_finite(upper, "upper");

    const std::size_t m = grid.segments();
    double max_adjustment = 0.0;
    auto adjust = [&max_adjustment](double& value, double replacement) {
        max_adjustment = std::max(max_adjustment, std::abs(replacement - value));
        value = replacement;
    };

    for (std::size_t j = 1; j <= m; ++j) {
        if (lower[j] < lower[j - 1]) adjust(lower[j], lower[j - 1]);
        if (upper[j] > upper[j - 1]) adjust(upper[j], upper[j - 1]);
    }
    if (lower[m] > upper[m]) {
        const double mid = 0.5 * (lower[m] + upper[m]);
        for (std::size_t j = 0; j <= m; ++j) {
            if (lower[j] > mid) adjust(lower[j], mid);
            if (upper[j] < mid) adjust(upper[j], mid);
        }
    }
    return RepairResult{FuzzyNumber::from_levels(grid, std::move(lower), std::move(upper)),
                        max_adjustment};
}

}  // namespace fuzzfrac
