#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fuzzfrac/alpha_grid.hpp"
#include "fuzzfrac/errors.hpp"

namespace fuzzfrac {

/// Absolute tolerance for construction validation and crispness tests.
/// Violations beyond it are hard errors; values within it are kept as-is
/// (strict construction, no silent repair).
inline constexpr double kValidationTol = 1e-12;

struct OrderViolation {
    std::size_t alpha_index = 0;
    Side side = Side::lower;
    double gap = 0.0;  // amount by which the inequality failed
};

/// Result of a levelwise order comparison. holds is true exactly when
/// first_violation is absent.
struct OrderVerdict {
    bool holds = true;
    std::optional<OrderViolation> first_violation{};
};

/// A fuzzy number in lower/upper parametric form on a uniform alpha grid.
///
/// lower is nondecreasing in alpha, upper is nonincreasing, and
/// lower(1) <= upper(1). Values between grid levels are defined by linear
/// interpolation, under which triangular and crisp numbers are exact.
/// Instances are immutable.
class FuzzyNumber {
public:
    /// Validating constructor from endpoint arrays of length M+1.
    static FuzzyNumber from_levels(const AlphaGrid& grid, std::vector<double> lower,
                                   std::vector<double> upper);

    /// Triangular number with 0-level support [a, c] and peak b; a <= b <= c.
    static FuzzyNumber triangular(double a, double b, double c,
                                  const AlphaGrid& grid = AlphaGrid());

    /// Crisp (real) number: lower == upper == r at every level.
    static FuzzyNumber crisp(double r, const AlphaGrid& grid = AlphaGrid());

    /// The crisp zero, neutral element of fuzzy addition.
    static FuzzyNumber zero_hat(const AlphaGrid& grid = AlphaGrid());

    const AlphaGrid& grid() const { return grid_; }
    std::span<const double> lower() const { return lower_; }
    std::span<const double> upper() const { return upper_; }

    /// Endpoint values at an arbitrary alpha in [0, 1] (linear interpolation).
    double lower_at(double alpha) const;
    double upper_at(double alpha) const;

    friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

private:
    FuzzyNumber(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper)
        : grid_(grid), lower_(std::move(lower)), upper_(std::move(upper)) {}

    AlphaGrid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Levelwise interval sum [x_l + y_l, x_r + y_r].
FuzzyNumber add(const FuzzyNumber& x, const FuzzyNumber& y);

/// Levelwise scaling; negative scalars swap endpoint roles.
FuzzyNumber scalar_mul(double lambda, const FuzzyNumber& x);

/// Levelwise endpoint order x <= y, within tol per endpoint.
OrderVerdict leq(const FuzzyNumber& x, const FuzzyNumber& y, double tol = 0.0);

/// sup over grid levels of the larger endpoint gap; a Hausdorff-type metric.
double distance_sup(const FuzzyNumber& x, const FuzzyNumber& y);

/// Width of the alpha-level interval, clamped to be nonnegative.
double width(const FuzzyNumber& x, double alpha);

/// True when the support has width at most kValidationTol.
bool is_crisp(const FuzzyNumber& x);

struct RepairResult {
    FuzzyNumber value;
    /// Largest pointwise change the envelope made; 0 when the input was
    /// already valid.
    double max_adjustment;
};

/// Monotone-envelope repair for noisy endpoint data: lower is replaced by its
/// running maximum, upper by its running minimum, and a residual crossing at
/// alpha = 1 is resolved toward the midpoint. Non-finite input still throws.
RepairResult repair(const AlphaGrid& grid, std::vector<double> lower, std::vector<double> upper);

inline FuzzyNumber operator+(const FuzzyNumber& x, const FuzzyNumber& y) { return add(x, y); }
inline FuzzyNumber operator*(double lambda, const FuzzyNumber& x) { return scalar_mul(lambda, x); }

}  // namespace fuzzfrac
