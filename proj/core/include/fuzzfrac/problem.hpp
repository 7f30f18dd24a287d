#pragma once

#include "fuzzfrac/crisp_fn.hpp"
#include "fuzzfrac/fuzzy_number.hpp"
#include "fuzzfrac/power_func.hpp"
#include "fuzzfrac/rhs_expr.hpp"

namespace fuzzfrac {

/// The weighted initial value problem
///   D^q u(t) = f(t, u, Tu) on (0, b],  lim_{t->0+} t^{1-q} u(t) = u0,
/// with (Tu)(t) = int_0^t k(t,s) u(s) ds.
class IVPProblem {
public:
    IVPProblem(double q, double b, FuzzyNumber u0, RhsExpr rhs, Kernel kernel = Kernel::one());

    double q() const { return q_; }
    double b() const { return b_; }
    const FuzzyNumber& u0() const { return u0_; }
    const RhsExpr& rhs() const { return rhs_; }
    const Kernel& kernel() const { return kernel_; }
    const AlphaGrid& grid() const { return u0_.grid(); }

private:
    double q_;
    double b_;
    FuzzyNumber u0_;
    RhsExpr rhs_;
    Kernel kernel_;
};

// ---------------------------------------------------------------------------
// Built-in presets. Preset 1 is the linear problem
//   D^q u = (t^{-q}/Gamma(1-q) - t) u + int_0^t u ds,  t^{1-q} u -> 0-hat,
// on (0, b] with b = (1/Gamma(1-q))^{1/(1+q)}; u = c solves it for every
// fuzzy c. Preset 2 is
//   D^q u = (c/Gamma(1-q)) (t^{-q} - 1 - t^{q-1}) + u/Gamma(1-q),
//   t^{1-q} u -> c,
// on (0, 0.32], solved by u = c + c t^{q-1}.
// ---------------------------------------------------------------------------

/// Right endpoint of preset 1's domain, b = (1/Gamma(1-q))^{1/(1+q)}.
double example1_endpoint(double q);

/// Preset 1's u-coefficient t^{-q}/Gamma(1-q) - t; positive on (0, b).
CrispCoefFn example1_coefficient(double q);

/// The sign-condition expression of preset 2, t^{-q} - 1 - t^{q-1}
/// (without the positive 1/Gamma(1-q) factor).
CrispCoefFn example2_sign_coefficient(double q);

IVPProblem make_example1_problem(double q, const FuzzyNumber& c);
IVPProblem make_example2_problem(double q, const FuzzyNumber& c);

/// Domain endpoint of preset 2.
inline constexpr double kExample2Endpoint = 0.32;

/// Stated parameter window of preset 2: 0.58 < q <= 0.88.
inline constexpr double kExample2QMin = 0.58;
inline constexpr double kExample2QMax = 0.88;

/// Candidate exact solutions and the bracketing pairs of the two presets.
FuzzyPowerFunc example1_solution(const FuzzyNumber& c);                   // u = c
FuzzyPowerFunc example1_bracket_lower(const AlphaGrid& grid);             // 0-hat
FuzzyPowerFunc example1_bracket_upper(double q, const AlphaGrid& grid);   // t^q
FuzzyPowerFunc example2_solution(double q, const FuzzyNumber& c);         // c + c t^{q-1}
FuzzyPowerFunc example2_bracket_lower(double q, const FuzzyNumber& c);    // c t^{q-1}
FuzzyPowerFunc example2_bracket_upper(double q, const FuzzyNumber& c);    // 10 c t^{q-1}

}  // namespace fuzzfrac
