// Command-line front end: preset problems, custom problem files, arithmetic
// demos, and report emission. Exit codes: 0 verified, 1 input error,
// 2 verification failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fuzzfrac/fuzzy_number.hpp"
#include "fuzzfrac/problem.hpp"
#include "fuzzfrac/serialize.hpp"
#include "fuzzfrac/verifier.hpp"

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
    const char* env = std::getenv("FUZZFRAC_LOG");
    if (env == nullptr) {
        return LogLevel::info;
    }
    const std::string value(env);
    if (value == "debug") {
        return LogLevel::debug;
    }
    if (value == "quiet") {
        return LogLevel::quiet;
    }
    return LogLevel::info;
}

struct CommonOpts {
    int grid_points = 200;
    int alpha_levels = 101;
    int nodes = 2000;
    double tol = 1e-8;
    std::string out_path;
    std::string format = "json";
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--grid", opts.grid_points, "Residual grid points (log-spaced in (0, b])")
        ->capture_default_str()
        ->check(CLI::Range(10, 1000000));
    cmd->add_option("--alpha-levels", opts.alpha_levels, "Alpha levels M+1")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));
    cmd->add_option("--nodes", opts.nodes, "Quadrature nodes for numeric cross-checks")
        ->capture_default_str()
        ->check(CLI::Range(16, 100000000));
    cmd->add_option("--tol", opts.tol, "Residual tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", opts.out_path, "Write the report to this path ('-' for stdout)");
    cmd->add_option("--format", opts.format, "Report format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
}

int write_report(const fuzzfrac::VerificationReport& report, const CommonOpts& opts) {
    if (opts.out_path.empty()) {
        return 0;
    }
    const std::string body =
        opts.format == "csv" ? fuzzfrac::report_to_csv(report) : fuzzfrac::report_to_json(report);
    if (opts.out_path == "-") {
        std::cout << body;
        return 0;
    }
    std::ofstream out(opts.out_path);
    if (!out) {
        std::cerr << "error: cannot open " << opts.out_path << " for writing\n";
        return 1;
    }
    out << body;
    if (log_level() != LogLevel::quiet) {
        std::cout << "report written to " << opts.out_path << " (" << opts.format << ")\n";
    }
    return 0;
}

std::string show_fuzzy(const fuzzfrac::FuzzyNumber& x) {
    std::ostringstream os;
    os.precision(12);
    os << "[" << x.lower().front() << ", " << x.upper().front() << "]@a=0  [" << x.lower().back()
       << ", " << x.upper().back() << "]@a=1";
    return os.str();
}

void print_summary(const fuzzfrac::VerificationReport& report) {
    const LogLevel level = log_level();
    if (level == LogLevel::quiet) {
        std::cout << (report.pass ? "pass" : "fail") << "\n";
        return;
    }
    std::cout.precision(12);
    std::cout << "verdict        : " << (report.pass ? "pass" : "fail") << "\n";
    std::cout << "max residual   : " << report.max_residual << "  (tol " << report.tol << ")\n";
    std::cout << "IC converged   : " << (report.ic.converged ? "yes" : "no");
    if (std::isfinite(report.ic.slope)) {
        std::cout << "  (trace slope " << report.ic.slope << ")";
    }
    std::cout << "\n";
    std::cout << "C_{1-q} member : " << (report.c1mq ? "yes" : "no") << "\n";
    for (const fuzzfrac::SignReportEntry& entry : report.sign_reports) {
        std::cout << "sign " << entry.label << "      : min value " << entry.min_value;
        if (entry.any_negative) {
            std::cout << "  [warning: negative at some grid points]";
        }
        std::cout << "\n";
    }
    if (report.ordering) {
        std::cout << "ordering       : " << (report.ordering->all_hold ? "holds" : "violated")
                  << " on the grid"
                  << (report.ordering_in_verdict ? "" : " (informational)") << "\n";
    }
    for (const std::string& e : report.errors) {
        std::cout << "error          : " << e << "\n";
    }
    if (level == LogLevel::debug) {
        std::cerr << "t,residual\n";
        std::cerr.precision(17);
        for (std::size_t i = 0; i < report.t_grid.size(); ++i) {
            std::cerr << report.t_grid[i] << "," << report.residuals[i] << "\n";
        }
    }
}

int run_example1(double q, const std::string& c_text, const CommonOpts& opts) {
    const fuzzfrac::AlphaGrid grid(static_cast<std::size_t>(opts.alpha_levels));
    const fuzzfrac::FuzzyNumber c = fuzzfrac::parse_fuzzy_shorthand(c_text, grid);
    const fuzzfrac::IVPProblem problem = fuzzfrac::make_example1_problem(q, c);

    fuzzfrac::VerifyConfig config;
    config.t_points = opts.grid_points;
    config.tol = opts.tol;
    config.policy.nodes = opts.nodes;
    // The bracketing conclusion holds only for some solutions (it is not part
    // of the exactness claim), so report it without folding it into the verdict.
    config.ordering = fuzzfrac::OrderingRequest{fuzzfrac::example1_bracket_lower(grid),
                                                fuzzfrac::example1_bracket_upper(q, grid)};

    const fuzzfrac::VerificationReport report =
        fuzzfrac::verify_solution(problem, fuzzfrac::example1_solution(c), config);

    if (log_level() != LogLevel::quiet) {
        std::cout.precision(12);
        std::cout << "preset 1: D^q u = (t^-q/Gamma(1-q) - t) u + int_0^t u ds,  "
                  << "t^(1-q) u -> 0-hat\n";
        std::cout << "q = " << q << ", b = " << problem.b() << "\n";
        std::cout << "candidate u = c = " << show_fuzzy(c) << "\n";
        std::cout << "bracket 0-hat <= u <= t^q checked on the grid\n";
    }
    print_summary(report);
    if (write_report(report, opts) != 0) {
        return 1;
    }
    return report.pass ? 0 : 2;
}

int run_example2(double q, const std::string& c_text, const CommonOpts& opts) {
    if (!(q > fuzzfrac::kExample2QMin && q <= fuzzfrac::kExample2QMax)) {
        std::cerr << "warning: q = " << q << " is outside the preset's stated range ("
                  << fuzzfrac::kExample2QMin << ", " << fuzzfrac::kExample2QMax
                  << "]; proceeding anyway\n";
    }
    const fuzzfrac::AlphaGrid grid(static_cast<std::size_t>(opts.alpha_levels));
    const fuzzfrac::FuzzyNumber c = fuzzfrac::parse_fuzzy_shorthand(c_text, grid);
    const fuzzfrac::IVPProblem problem = fuzzfrac::make_example2_problem(q, c);

    fuzzfrac::VerifyConfig config;
    config.t_points = opts.grid_points;
    config.tol = opts.tol;
    config.policy.nodes = opts.nodes;
    config.ordering =
        fuzzfrac::OrderingRequest{fuzzfrac::example2_bracket_lower(q, c),
                                  fuzzfrac::example2_bracket_upper(q, c)};

    const fuzzfrac::VerificationReport report =
        fuzzfrac::verify_solution(problem, fuzzfrac::example2_solution(q, c), config);

    // The sign condition the preset relies on, without the positive
    // 1/Gamma(1-q) factor; measured, not assumed.
    const std::vector<fuzzfrac::SignPoint> sign_points =
        fuzzfrac::sign_report(fuzzfrac::example2_sign_coefficient(q), report.t_grid);
    std::size_t negative_count = 0;
    double min_value = std::numeric_limits<double>::infinity();
    for (const fuzzfrac::SignPoint& p : sign_points) {
        if (p.sign == fuzzfrac::Sign::negative) {
            ++negative_count;
        }
        min_value = std::min(min_value, p.value);
    }

    if (log_level() != LogLevel::quiet) {
        std::cout.precision(12);
        std::cout << "preset 2: D^q u = (c/Gamma(1-q))(t^-q - 1 - t^(q-1)) + u/Gamma(1-q),  "
                  << "t^(1-q) u -> c\n";
        std::cout << "q = " << q << ", b = " << problem.b() << "\n";
        std::cout << "candidate u = c + c t^(q-1), c = " << show_fuzzy(c) << "\n";
        std::cout << "sign of t^-q - 1 - t^(q-1): min value " << min_value << ", negative at "
                  << negative_count << "/" << sign_points.size() << " grid points\n";
        std::cout << "bracket c t^(q-1) <= u <= 10 c t^(q-1) checked on the grid\n";
    }
    if (negative_count > 0) {
        std::cerr << "warning: sign condition t^-q - 1 - t^(q-1) > 0 fails at " << negative_count
                  << " grid points (min value " << min_value << ")\n";
    }
    print_summary(report);
    if (write_report(report, opts) != 0) {
        return 1;
    }
    return report.pass ? 0 : 2;
}

int run_demo(const std::string& name) {
    using fuzzfrac::FuzzyNumber;
    // Dyadic levels so every printed witness value is exact.
    const fuzzfrac::AlphaGrid grid(5);
    const FuzzyNumber x = FuzzyNumber::triangular(0.0, 1.0, 2.0, grid);
    std::cout.precision(12);
    if (name == "no-opposite") {
        const FuzzyNumber neg = scalar_mul(-1.0, x);
        const FuzzyNumber sum = add(x, neg);
        std::cout << "x            = " << show_fuzzy(x) << "   (tri 0,1,2)\n";
        std::cout << "(-1)*x       = " << show_fuzzy(neg) << "\n";
        std::cout << "x + (-1)*x   = " << show_fuzzy(sum) << "\n";
        std::cout << "distance to 0-hat = "
                  << distance_sup(sum, FuzzyNumber::zero_hat(grid)) << "  (= width of x at a=0: "
                  << width(x, 0.0) << ")\n";
        std::cout << "a non-crisp number has no additive inverse; x - x never cancels to 0-hat\n";
        return 0;
    }
    if (name == "distributivity") {
        const FuzzyNumber same_sign_lhs = scalar_mul(2.0 + 3.0, x);
        const FuzzyNumber same_sign_rhs = add(scalar_mul(2.0, x), scalar_mul(3.0, x));
        const FuzzyNumber mixed_lhs = scalar_mul(1.0 + (-1.0), x);
        const FuzzyNumber mixed_rhs = add(scalar_mul(1.0, x), scalar_mul(-1.0, x));
        std::cout << "x = tri 0,1,2\n";
        std::cout << "same sign   (2+3)*x     = " << show_fuzzy(same_sign_lhs) << "\n";
        std::cout << "            2*x + 3*x   = " << show_fuzzy(same_sign_rhs)
                  << "   distance = " << distance_sup(same_sign_lhs, same_sign_rhs) << "\n";
        std::cout << "mixed sign  (1+(-1))*x  = " << show_fuzzy(mixed_lhs) << "\n";
        std::cout << "            1*x+(-1)*x  = " << show_fuzzy(mixed_rhs)
                  << "   distance = " << distance_sup(mixed_lhs, mixed_rhs) << "\n";
        std::cout << "(a+b)*u = a*u + b*u only when a and b share a sign\n";
        return 0;
    }
    std::cerr << "error: unknown demo \"" << name << "\"\n";
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw fuzzfrac::ParseError("cannot open file: " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_verify(const std::string& problem_path, const std::string& solution_path,
               const CommonOpts& opts) {
    const fuzzfrac::IVPProblem problem = fuzzfrac::problem_from_json(read_file(problem_path));
    const fuzzfrac::FuzzyPowerFunc solution =
        fuzzfrac::power_func_from_json(read_file(solution_path));

    if (solution.grid() != problem.grid()) {
        std::cerr << "error: solution alpha grid (" << solution.grid().level_count()
                  << " levels) does not match the problem (" << problem.grid().level_count()
                  << " levels)\n";
        return 1;
    }
    for (const fuzzfrac::PowerTerm& term : solution.terms()) {
        if (term.exponent < problem.q() - 1.0 - fuzzfrac::kValidationTol) {
            std::cerr << "error: " << fuzzfrac::UnsupportedExponent(term.exponent, problem.q()).what()
                      << "\n";
            return 1;
        }
    }

    fuzzfrac::VerifyConfig config;
    config.t_points = opts.grid_points;
    config.tol = opts.tol;
    config.policy.nodes = opts.nodes;

    const fuzzfrac::VerificationReport report = verify_solution(problem, solution, config);
    if (log_level() != LogLevel::quiet) {
        std::cout.precision(12);
        std::cout << "problem  : " << problem_path << "  (q = " << problem.q()
                  << ", b = " << problem.b() << ")\n";
        std::cout << "solution : " << solution_path << "\n";
    }
    print_summary(report);
    if (write_report(report, opts) != 0) {
        return 1;
    }
    return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for fuzzy fractional integrodifferential equations"};
    app.require_subcommand(1);

    CommonOpts opts;
    double q1 = 0.5;
    double q2 = 0.88;
    std::string c1 = "tri:1,2,3";
    std::string c2 = "tri:0,1,2";
    std::string demo_name;
    std::string problem_path;
    std::string solution_path;

    CLI::App* example1 =
        app.add_subcommand("example1", "Verify u = c for the first preset problem");
    example1->add_option("--q", q1, "Fractional order in (0, 1)")->capture_default_str();
    example1->add_option("--c", c1, "Fuzzy constant (tri:a,b,c | crisp:r | zero)")
        ->capture_default_str();
    add_common_options(example1, opts);

    CLI::App* example2 =
        app.add_subcommand("example2", "Verify u = c + c t^(q-1) for the second preset problem");
    example2->add_option("--q", q2, "Fractional order in (0, 1); stated range (0.58, 0.88]")
        ->capture_default_str();
    example2->add_option("--c", c2, "Fuzzy constant (tri:a,b,c | crisp:r | zero)")
        ->capture_default_str();
    add_common_options(example2, opts);

    CLI::App* demo = app.add_subcommand("demo", "Print a fuzzy-arithmetic witness");
    demo->add_option("name", demo_name, "no-opposite | distributivity")
        ->required()
        ->check(CLI::IsMember({"no-opposite", "distributivity"}));

    CLI::App* verify = app.add_subcommand("verify", "Verify a solution file against a problem file");
    verify->add_option("problem", problem_path, "Problem JSON document")->required();
    verify->add_option("solution", solution_path, "Solution (power function) JSON document")
        ->required();
    add_common_options(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (example1->parsed()) {
            if (!(q1 > 0.0 && q1 < 1.0)) {
                std::cerr << "error: --q must lie in (0, 1), got " << q1 << "\n";
                return 1;
            }
            return run_example1(q1, c1, opts);
        }
        if (example2->parsed()) {
            if (!(q2 > 0.0 && q2 < 1.0)) {
                std::cerr << "error: --q must lie in (0, 1), got " << q2 << "\n";
                return 1;
            }
            return run_example2(q2, c2, opts);
        }
        if (demo->parsed()) {
            return run_demo(demo_name);
        }
        if (verify->parsed()) {
            return run_verify(problem_path, solution_path, opts);
        }
    } catch (const fuzzfrac::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
