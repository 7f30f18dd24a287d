#pragma once

#include <span>
#include <vector>

#include "fuzzfrac/fuzzy_number.hpp"

namespace fuzzfrac {

/// One term coef * t^exponent of a fuzzy-coefficient power sum; exponent > -1.
struct PowerTerm {
    FuzzyNumber coef;
    double exponent;
};

/// Finite sum of power terms with pairwise distinct exponents.
///
/// Terms are kept sorted by exponent, all coefficients share one alpha grid,
/// and an empty term list denotes the function that is identically 0-hat.
class FuzzyPowerFunc {
public:
    /// The zero function on the given grid.
    explicit FuzzyPowerFunc(const AlphaGrid& grid) : grid_(grid) {}

    /// Validating constructor; exponents must be pairwise distinct.
    FuzzyPowerFunc(const AlphaGrid& grid, std::vector<PowerTerm> terms);

    /// Like the constructor, but terms with exactly equal exponents are
    /// merged by fuzzy addition of their coefficients.
    static FuzzyPowerFunc from_terms_merged(const AlphaGrid& grid, std::vector<PowerTerm> terms);

    const AlphaGrid& grid() const { return grid_; }
    std::span<const PowerTerm> terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Smallest exponent; only meaningful when !empty().
    double min_exponent() const { return terms_.front().exponent; }

private:
    AlphaGrid grid_;
    std::vector<PowerTerm> terms_;
};

/// Levelwise evaluation sum_i t^{p_i} * coef_i. The powers t^{p_i} are
/// positive for t > 0, so endpoint roles are preserved.
FuzzyNumber eval(const FuzzyPowerFunc& u, double t);

/// Termwise sum; equal exponents merge by fuzzy addition of coefficients.
FuzzyPowerFunc add(const FuzzyPowerFunc& f, const FuzzyPowerFunc& g);

/// Termwise coefficient scaling.
FuzzyPowerFunc scalar_mul(double lambda, const FuzzyPowerFunc& f);

}  // namespace fuzzfrac
