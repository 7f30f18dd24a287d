#include "fuzzfrac/power_func.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace fuzzfrac {

namespace {

void validate_term(const AlphaGrid& grid, const PowerTerm& term) {
    if (term.coef.grid() != grid) {
        throw GridMismatch(grid.level_count(), term.coef.grid().level_count());
    }
    if (!std::isfinite(term.exponent)) {
        throw NonFinite("power-term exponent");
    }
    if (term.exponent <= -1.0) {
        throw DomainError("power-term exponent must exceed -1, got " +
                          std::to_string(term.exponent));
    }
}

std::vector<PowerTerm> sorted_by_exponent(std::vector<PowerTerm> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
    return terms;
}

}  // namespace

FuzzyPowerFunc::FuzzyPowerFunc(const AlphaGrid& grid, std::vector<PowerTerm> terms)
    : grid_(grid), terms_(sorted_by_exponent(std::move(terms))) {
    for (const PowerTerm& term : terms_) {
        validate_term(grid_, term);
    }
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (terms_[i].exponent == terms_[i - 1].exponent) {
            throw DomainError("duplicate exponent " + std::to_string(terms_[i].exponent) +
                              "; use from_terms_merged to combine");
        }
    }
}

FuzzyPowerFunc FuzzyPowerFunc::from_terms_merged(const AlphaGrid& grid,
                                                 std::vector<PowerTerm> terms) {
    terms = sorted_by_exponent(std::move(terms));
    std::vector<PowerTerm> merged;
    for (PowerTerm& term : terms) {
        if (!merged.empty() && merged.back().exponent == term.exponent) {
            merged.back().coef = add(merged.back().coef, term.coef);
        } else {
            merged.push_back(std::move(term));
        }
    }
    return FuzzyPowerFunc(grid, std::move(merged));
}

FuzzyNumber eval(const FuzzyPowerFunc& u, double t) {
    if (t < 0.0 || (t == 0.0 && !u.empty() && u.min_exponent() < 0.0)) {
        throw DomainError("power function not evaluable at t = " + std::to_string(t));
    }
    FuzzyNumber acc = FuzzyNumber::zero_hat(u.grid());
    for (const PowerTerm& term : u.terms()) {
        acc = add(acc, scalar_mul(std::pow(t, term.exponent), term.coef));
    }
    return acc;
}

FuzzyPowerFunc add(const FuzzyPowerFunc& f, const FuzzyPowerFunc& g) {
    if (f.grid() != g.grid()) {
        throw GridMismatch(f.grid().level_count(), g.grid().level_count());
    }
    std::vector<PowerTerm> terms(f.terms().begin(), f.terms().end());
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return FuzzyPowerFunc::from_terms_merged(f.grid(), std::move(terms));
}

FuzzyPowerFunc scalar_mul(double lambda, const FuzzyPowerFunc& f) {
    std::vector<PowerTerm> terms;
    terms.reserve(f.terms().size());
    for (const PowerTerm& term : f.terms()) {
        terms.push_back(PowerTerm{scalar_mul(lambda, term.coef), term.exponent});
    }
    return FuzzyPowerFunc(f.grid(), std::move(terms));
}

}  // namespace fuzzfrac
