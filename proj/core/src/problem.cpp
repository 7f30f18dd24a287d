#include "fuzzfrac/problem.hpp"

#include <cmath>
#include <string>

#include "fuzzfrac/gamma.hpp"

namespace fuzzfrac {

IVPProblem::IVPProblem(double q, double b, FuzzyNumber u0, RhsExpr rhs, Kernel kernel)
    : q_(q), b_(b), u0_(std::move(u0)), rhs_(std::move(rhs)), kernel_(std::move(kernel)) {
    if (!(q_ > 0.0 && q_ < 1.0)) {
        throw DomainError("problem order q must lie in (0, 1), got " + std::to_string(q_));
    }
    if (!(b_ > 0.0) || !std::isfinite(b_)) {
        throw DomainError("domain endpoint b must be positive and finite, got " +
                          std::to_string(b_));
    }
}

double example1_endpoint(double q) {
    return std::pow(1.0 / gamma(1.0 - q), 1.0 / (1.0 + q));
}

CrispCoefFn example1_coefficient(double q) {
    return CrispCoefFn({{1.0 / gamma(1.0 - q), -q}, {-1.0, 1.0}});
}

CrispCoefFn example2_sign_coefficient(double q) {
    return CrispCoefFn({{1.0, -q}, {-1.0, 0.0}, {-1.0, q - 1.0}});
}

IVPProblem make_example1_problem(double q, const FuzzyNumber& c) {
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("preset 1 needs q in (0, 1), got " + std::to_string(q));
    }
    RhsExpr rhs = RhsExpr::sum(RhsExpr::scale(example1_coefficient(q), RhsExpr::u()), RhsExpr::tu());
    return IVPProblem(q, example1_endpoint(q), FuzzyNumber::zero_hat(c.grid()), std::move(rhs),
                      Kernel::one());
}

IVPProblem make_example2_problem(double q, const FuzzyNumber& c) {
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("preset 2 needs q in (0, 1), got " + std::to_string(q));
    }
    const double inv_gamma = 1.0 / gamma(1.0 - q);
    // (c/Gamma(1-q)) (t^{-q} - 1 - t^{q-1}) as one sign-aware Scale of the
    // constant c, plus u/Gamma(1-q).
    CrispCoefFn scaled_sign_fn(
        {{inv_gamma, -q}, {-inv_gamma, 0.0}, {-inv_gamma, q - 1.0}});
    FuzzyPowerFunc c_const(c.grid(), {PowerTerm{c, 0.0}});
    RhsExpr rhs = RhsExpr::sum(
        RhsExpr::scale(std::move(scaled_sign_fn), RhsExpr::constant(std::move(c_const))),
        RhsExpr::scale(CrispCoefFn({{inv_gamma, 0.0}}), RhsExpr::u()));
    return IVPProblem(q, kExample2Endpoint, c, std::move(rhs), Kernel::one());
}

FuzzyPowerFunc example1_solution(const FuzzyNumber& c) {
    return FuzzyPowerFunc(c.grid(), {PowerTerm{c, 0.0}});
}

FuzzyPowerFunc example1_bracket_lower(const AlphaGrid& grid) { return FuzzyPowerFunc(grid); }

FuzzyPowerFunc example1_bracket_upper(double q, const AlphaGrid& grid) {
    return FuzzyPowerFunc(grid, {PowerTerm{FuzzyNumber::crisp(1.0, grid), q}});
}

FuzzyPowerFunc example2_solution(double q, const FuzzyNumber& c) {
    return FuzzyPowerFunc(c.grid(), {PowerTerm{c, 0.0}, PowerTerm{c, q - 1.0}});
}

FuzzyPowerFunc example2_bracket_lower(double q, const FuzzyNumber& c) {
    return FuzzyPowerFunc(c.grid(), {PowerTerm{c, q - 1.0}});
}

FuzzyPowerFunc example2_bracket_upper(double q, const FuzzyNumber& c) {
    return FuzzyPowerFunc(c.grid(), {PowerTerm{scalar_mul(10.0, c), q - 1.0}});
}

}  // namespace fuzzfrac
