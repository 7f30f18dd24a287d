#pragma once

#include "fuzzfrac/crisp_fn.hpp"
#include "fuzzfrac/power_func.hpp"

namespace fuzzfrac {

/// Riemann-Liouville derivative of order q in (0, 1), termwise power rule:
/// (c, p) maps to (Gamma(p+1)/Gamma(p+1-q) * c, p - q). Terms with p = q-1
/// are annihilated. Throws UnsupportedExponent for p < q-1, where the
/// multiplier sign is ambiguous across the gamma poles.
FuzzyPowerFunc rl_deriv_power(const FuzzyPowerFunc& u, double q);

/// Riemann-Liouville integral of order q in (0, 1), termwise power rule:
/// (c, p) maps to (Gamma(p+1)/Gamma(p+1+q) * c, p + q).
FuzzyPowerFunc rl_integral_power(const FuzzyPowerFunc& u, double q);

/// Direct levelwise quadrature of (1/Gamma(q)) int_0^t (t-s)^{q-1} u(s) ds.
///
/// Product integration: the weight (t-s)^{q-1} is integrated exactly on each
/// cell against a piecewise-constant (midpoint) approximation of u's endpoint
/// functions, on a mesh graded toward both ends of [0, t]. Converges to
/// rl_integral_power evaluated at t as nodes grows. nodes >= 16.
FuzzyNumber rl_integral_numeric(const FuzzyPowerFunc& u, double q, double t, int nodes);

/// Levelwise quadrature of (Tu)(t) = int_0^t k(t,s) u(s) ds.
///
/// Per power term the weight s^p is integrated exactly against midpoint
/// samples of the kernel, which also handles integrable endpoint
/// singularities p in (-1, 0). Kernel samples are checked to be >= 0 so that
/// lower integrates lower and upper integrates upper. nodes >= 16.
FuzzyNumber volterra(const FuzzyPowerFunc& u, const Kernel& k, double t, int nodes);

/// Closed-form Volterra evaluation for power-sum kernels:
/// (Tu)(t) = sum_p g_p(t) * c_p with g_p(t) = int_0^t k(t,s) s^p ds evaluated
/// exactly. g_p >= 0 whenever k >= 0, so endpoint roles are preserved.
FuzzyNumber volterra_exact(const FuzzyPowerFunc& u, const Kernel& k, double t);

}  // namespace fuzzfrac
