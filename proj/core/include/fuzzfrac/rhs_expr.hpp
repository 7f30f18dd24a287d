#pragma once

#include <memory>
#include <vector>

#include "fuzzfrac/crisp_fn.hpp"
#include "fuzzfrac/power_func.hpp"

namespace fuzzfrac {

/// Expression tree for the right-hand side f(t, u, Tu):
/// constants, references to u and Tu, crisp-scalar scaling, and sums.
/// Immutable; copies share structure.
class RhsExpr {
public:
    enum class Kind { constant, u_ref, tu_ref, scale, sum };

    static RhsExpr constant(FuzzyPowerFunc fn);
    static RhsExpr u();
    static RhsExpr tu();
    static RhsExpr scale(CrispCoefFn coef, RhsExpr child);
    static RhsExpr sum(RhsExpr lhs, RhsExpr rhs);

    Kind kind() const;

    /// Requires kind() == constant.
    const FuzzyPowerFunc& const_fn() const;

    /// Requires kind() == scale.
    const CrispCoefFn& coef() const;
    RhsExpr child() const;

    /// Requires kind() == sum.
    RhsExpr lhs() const;
    RhsExpr rhs() const;

    /// All Scale coefficients in pre-order; used for sign reports.
    std::vector<CrispCoefFn> scale_coefs() const;

    /// True if any node references Tu (so the kernel matters).
    bool uses_tu() const;

private:
    struct Node;
    explicit RhsExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace fuzzfrac
