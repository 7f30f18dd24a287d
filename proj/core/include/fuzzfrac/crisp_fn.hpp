#pragma once

#include <span>
#include <vector>

#include "fuzzfrac/errors.hpp"

namespace fuzzfrac {

/// Closed-form crisp coefficient function sum_i a_i * t^{r_i}.
/// Evaluable for all t > 0; negative exponents are allowed.
class CrispCoefFn {
public:
    struct Term {
        double a;
        double r;
    };

    /// The identically-zero function.
    CrispCoefFn() = default;

    explicit CrispCoefFn(std::vector<Term> terms);

    double operator()(double t) const;

    std::span<const Term> terms() const { return terms_; }

private:
    std::vector<Term> terms_;
};

/// Volterra kernel sum_i a_i * t^{r_i} * s^{w_i} with r, w >= 0, assumed
/// nonnegative on t >= s. Nonnegativity is enforced by sampling at the
/// quadrature points, not by proof.
class Kernel {
public:
    struct Term {
        double a;
        double r;
        double w;
    };

    /// The default kernel k == 1.
    static Kernel one() { return Kernel({Term{1.0, 0.0, 0.0}}); }

    explicit Kernel(std::vector<Term> terms);

    double operator()(double t, double s) const;

    /// True when the kernel is the single term 1 * t^0 * s^0.
    bool is_one() const;

    std::span<const Term> terms() const { return terms_; }

private:
    std::vector<Term> terms_;
};

}  // namespace fuzzfrac
