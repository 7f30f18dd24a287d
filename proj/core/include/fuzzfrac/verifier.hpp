#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzfrac/fracalc.hpp"
#include "fuzzfrac/problem.hpp"

namespace fuzzfrac {

/// How right-hand sides are evaluated. The closed-form path keeps residuals
/// at floating-point level; the numeric path exists for cross-checking.
enum class EvalPath { exact, numeric };

struct EvalPolicy {
    EvalPath path = EvalPath::exact;
    int nodes = 2000;
};

/// Levelwise evaluation of f(t, u, Tu), with the sign-aware scaling rule
/// applied per t to every Scale node.
FuzzyNumber eval_rhs(const IVPProblem& problem, const FuzzyPowerFunc& u, double t,
                     const EvalPolicy& policy = {});

/// distance_sup between D^q u evaluated at t and the right-hand side at t.
double residual(const IVPProblem& problem, const FuzzyPowerFunc& u, double t,
                const EvalPolicy& policy = {});

struct IcPoint {
    double t;
    double distance;
};

struct IcTrace {
    std::vector<IcPoint> points;
    bool converged = false;
    /// Least-squares slope of log(distance) vs log(t); NaN when fewer than
    /// two positive distances are available.
    double slope = 0.0;
    double tol_ic = 0.0;
};

/// Weighted initial condition check: distance of t^{1-q} u(t) from u0 along
/// ts, which must be strictly decreasing inside (0, b]. Converged means the
/// trace is nonincreasing and its final value is at most tol_ic.
IcTrace verify_initial(const IVPProblem& problem, const FuzzyPowerFunc& u,
                       std::span<const double> ts, double tol_ic = 1e-2);

enum class Sign { negative, zero, positive };

const char* to_string(Sign s);

/// Classification threshold: |value| <= 1e-14 counts as zero.
Sign classify_sign(double value);

struct SignPoint {
    double t;
    double value;
    Sign sign;
};

/// Pointwise evaluation and sign classification; measures, never asserts.
std::vector<SignPoint> sign_report(const CrispCoefFn& fn, std::span<const double> t_grid);

struct OrderingPoint {
    double t;
    OrderVerdict lower_vs_mid;
    OrderVerdict mid_vs_upper;
};

struct OrderingReport {
    std::vector<OrderingPoint> points;
    bool all_hold = true;
};

/// Levelwise bracketing check lower <= mid <= upper at each grid time.
OrderingReport verify_ordering(const FuzzyPowerFunc& lower, const FuzzyPowerFunc& mid,
                               const FuzzyPowerFunc& upper, std::span<const double> t_grid,
                               double tol = 0.0);

/// True when every exponent p of u satisfies p >= q - 1, so that t^{1-q} u
/// extends continuously to t = 0.
bool check_c1mq_membership(const FuzzyPowerFunc& u, double q);

struct OrderingRequest {
    FuzzyPowerFunc lower;
    FuzzyPowerFunc upper;
    double tol = kValidationTol;
    /// Whether a bracketing failure makes the whole verification fail.
    bool in_verdict = false;
};

struct VerifyConfig {
    /// Number of log-spaced residual grid points in (0, b].
    int t_points = 200;
    /// Grid floor as a fraction of b, probing the t -> 0+ region.
    double t_min_factor = 1e-6;
    EvalPolicy policy{};
    double tol = 1e-8;
    double tol_ic = 1e-2;
    /// Weighted-IC probe times, strictly decreasing inside (0, b]. Empty
    /// means automatic: decades from 1e-3 down to 1e-5, extended deeper when
    /// the t^{1-q} decay rate is too slow to reach tol_ic by then.
    std::vector<double> ic_ts{};
    std::optional<OrderingRequest> ordering{};
    bool sign_reports = true;
};

struct SignReportEntry {
    std::string label;
    std::vector<SignPoint> points;
    bool any_negative = false;
    double min_value = 0.0;
};

struct VerificationReport {
    double tol = 0.0;
    std::vector<double> t_grid;
    /// Residual per grid point; NaN where a per-point error was recorded.
    std::vector<double> residuals;
    /// Max over the computed residuals; NaN when none could be computed.
    double max_residual = 0.0;
    IcTrace ic;
    bool c1mq = false;
    std::vector<SignReportEntry> sign_reports;
    std::optional<OrderingReport> ordering{};
    bool ordering_in_verdict = false;
    /// Support widths, recorded so wide data can be judged against the
    /// absolute residual tolerance.
    double u0_width0 = 0.0;
    double solution_width0 = 0.0;
    std::vector<std::string> errors;
    bool pass = false;
};

/// Aggregate verification: residuals over a log-spaced grid, the weighted
/// initial condition, solution-space membership, sign reports, and an
/// optional bracketing check. Per-point errors are recorded, not thrown.
VerificationReport verify_solution(const IVPProblem& problem, const FuzzyPowerFunc& u,
                                   const VerifyConfig& config = {});

/// n log-spaced points from t_min to t_max inclusive, ascending.
std::vector<double> log_spaced_grid(double t_min, double t_max, int n);

}  // namespace fuzzfrac
