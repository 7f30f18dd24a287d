#include "fuzzfrac/serialize.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fuzzfrac {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_document(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

double number_field(const json& j, const char* key, const char* where) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ParseError(std::string(where) + ": missing or non-numeric field \"" + key + "\"");
    }
    return j[key].get<double>();
}

std::vector<double> array_field(const json& j, const char* key, const char* where) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw ParseError(std::string(where) + ": missing or non-array field \"" + key + "\"");
    }
    std::vector<double> out;
    for (const json& v : j[key]) {
        if (!v.is_number()) {
            throw ParseError(std::string(where) + ": non-numeric entry in \"" + key + "\"");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

ordered fuzzy_to_value(const FuzzyNumber& x) {
    ordered j;
    j["levels"] = x.grid().level_count();
    j["lower"] = std::vector<double>(x.lower().begin(), x.lower().end());
    j["upper"] = std::vector<double>(x.upper().begin(), x.upper().end());
    return j;
}

FuzzyNumber fuzzy_from_value(const json& j, const char* where) {
    if (!j.is_object()) {
        throw ParseError(std::string(where) + ": fuzzy number must be an object");
    }
    const double levels = number_field(j, "levels", where);
    if (levels < 2 || levels != std::floor(levels)) {
        throw ParseError(std::string(where) + ": \"levels\" must be an integer >= 2");
    }
    AlphaGrid grid(static_cast<std::size_t>(levels));
    try {
        return FuzzyNumber::from_levels(grid, array_field(j, "lower", where),
                                        array_field(j, "upper", where));
    } catch (const Error& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

ordered power_func_to_value(const FuzzyPowerFunc& u) {
    ordered j;
    j["levels"] = u.grid().level_count();
    ordered terms = ordered::array();
    for (const PowerTerm& term : u.terms()) {
        ordered t;
        t["p"] = term.exponent;
        t["coef"] = fuzzy_to_value(term.coef);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

FuzzyPowerFunc power_func_from_value(const json& j, const char* where) {
    if (!j.is_object()) {
        throw ParseError(std::string(where) + ": power function must be an object");
    }
    const double levels = number_field(j, "levels", where);
    if (levels < 2 || levels != std::floor(levels)) {
        throw ParseError(std::string(where) + ": \"levels\" must be an integer >= 2");
    }
    AlphaGrid grid(static_cast<std::size_t>(levels));
    if (!j.contains("terms") || !j["terms"].is_array()) {
        throw ParseError(std::string(where) + ": missing array field \"terms\"");
    }
    std::vector<PowerTerm> terms;
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coef")) {
            throw ParseError(std::string(where) + ": each term needs \"p\" and \"coef\"");
        }
        terms.push_back(PowerTerm{fuzzy_from_value(t["coef"], where),
                                  number_field(t, "p", where)});
    }
    try {
        return FuzzyPowerFunc(grid, std::move(terms));
    } catch (const Error& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

ordered coef_to_value(const CrispCoefFn& fn) {
    ordered tokens = ordered::array();
    for (const CrispCoefFn::Term& term : fn.terms()) {
        ordered t;
        t["a"] = term.a;
        t["r"] = term.r;
        tokens.push_back(std::move(t));
    }
    return tokens;
}

CrispCoefFn coef_from_value(const json& j, const char* where) {
    if (!j.is_array()) {
        throw ParseError(std::string(where) + ": coefficient must be a token array");
    }
    std::vector<CrispCoefFn::Term> terms;
    for (const json& t : j) {
        terms.push_back({number_field(t, "a", where), number_field(t, "r", where)});
    }
    try {
        return CrispCoefFn(std::move(terms));
    } catch (const Error& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

ordered kernel_to_value(const Kernel& k) {
    if (k.is_one()) {
        return ordered("one");
    }
    ordered tokens = ordered::array();
    for (const Kernel::Term& term : k.terms()) {
        ordered t;
        t["a"] = term.a;
        t["r"] = term.r;
        t["w"] = term.w;
        tokens.push_back(std::move(t));
    }
    return tokens;
}

Kernel kernel_from_value(const json& j, const char* where) {
    if (j.is_string()) {
        if (j.get<std::string>() == "one") {
            return Kernel::one();
        }
        throw ParseError(std::string(where) + ": unknown kernel name \"" +
                         j.get<std::string>() + "\"");
    }
    if (!j.is_array()) {
        throw ParseError(std::string(where) + ": kernel must be \"one\" or a token array");
    }
    std::vector<Kernel::Term> terms;
    for (const json& t : j) {
        terms.push_back({number_field(t, "a", where), number_field(t, "r", where),
                         number_field(t, "w", where)});
    }
    try {
        return Kernel(std::move(terms));
    } catch (const Error& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

ordered rhs_to_value(const RhsExpr& expr) {
    ordered j;
    switch (expr.kind()) {
        case RhsExpr::Kind::constant:
            j["kind"] = "const";
            j["fn"] = power_func_to_value(expr.const_fn());
            break;
        case RhsExpr::Kind::u_ref:
            j["kind"] = "u";
            break;
        case RhsExpr::Kind::tu_ref:
            j["kind"] = "tu";
            break;
        case RhsExpr::Kind::scale:
            j["kind"] = "scale";
            j["coef"] = coef_to_value(expr.coef());
            j["expr"] = rhs_to_value(expr.child());
            break;
        case RhsExpr::Kind::sum:
            j["kind"] = "sum";
            j["lhs"] = rhs_to_value(expr.lhs());
            j["rhs"] = rhs_to_value(expr.rhs());
            break;
    }
    return j;
}

RhsExpr rhs_from_value(const json& j, const char* where) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError(std::string(where) + ": rhs node needs a string \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "const") {
        if (!j.contains("fn")) {
            throw ParseError(std::string(where) + ": const node needs \"fn\"");
        }
        return RhsExpr::constant(power_func_from_value(j["fn"], where));
    }
    if (kind == "u") {
        return RhsExpr::u();
    }
    if (kind == "tu") {
        return RhsExpr::tu();
    }
    if (kind == "scale") {
        if (!j.contains("coef") || !j.contains("expr")) {
            throw ParseError(std::string(where) + ": scale node needs \"coef\" and \"expr\"");
        }
        return RhsExpr::scale(coef_from_value(j["coef"], where), rhs_from_value(j["expr"], where));
    }
    if (kind == "sum") {
        if (!j.contains("lhs") || !j.contains("rhs")) {
            throw ParseError(std::string(where) + ": sum node needs \"lhs\" and \"rhs\"");
        }
        return RhsExpr::sum(rhs_from_value(j["lhs"], where), rhs_from_value(j["rhs"], where));
    }
    throw ParseError(std::string(where) + ": unknown rhs node kind \"" + kind + "\"");
}

std::string csv_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string to_json(const FuzzyNumber& x) { return fuzzy_to_value(x).dump(2); }

FuzzyNumber fuzzy_from_json(const std::string& text) {
    return fuzzy_from_value(parse_document(text, "fuzzy number"), "fuzzy number");
}

FuzzyNumber parse_fuzzy_shorthand(const std::string& text, const AlphaGrid& grid) {
    auto parse_numbers = [&](const std::string& body, std::size_t expected) {
        std::vector<double> values;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                values.push_back(std::stod(item, &used));
                while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
                    ++used;
                }
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
            } catch (const std::exception&) {
                throw ParseError("bad number \"" + item + "\" in shorthand \"" + text + "\"");
            }
        }
        if (values.size() != expected) {
            throw ParseError("shorthand \"" + text + "\" needs " + std::to_string(expected) +
                             " comma-separated numbers");
        }
        return values;
    };

    if (text == "zero") {
        return FuzzyNumber::zero_hat(grid);
    }
    if (text.rfind("tri:", 0) == 0) {
        const std::vector<double> v = parse_numbers(text.substr(4), 3);
        try {
            return FuzzyNumber::triangular(v[0], v[1], v[2], grid);
        } catch (const Error& e) {
            throw ParseError(std::string("shorthand \"") + text + "\": " + e.what());
        }
    }
    if (text.rfind("crisp:", 0) == 0) {
        const std::vector<double> v = parse_numbers(text.substr(6), 1);
        try {
            return FuzzyNumber::crisp(v[0], grid);
        } catch (const Error& e) {
            throw ParseError(std::string("shorthand \"") + text + "\": " + e.what());
        }
    }
    throw ParseError("unrecognized fuzzy shorthand \"" + text +
                     "\"; expected tri:a,b,c | crisp:r | zero");
}

std::string to_json(const FuzzyPowerFunc& u) { return power_func_to_value(u).dump(2); }

FuzzyPowerFunc power_func_from_json(const std::string& text) {
    return power_func_from_value(parse_document(text, "power function"), "power function");
}

std::string to_json(const IVPProblem& problem) {
    ordered j;
    j["q"] = problem.q();
    j["b"] = problem.b();
    j["u0"] = fuzzy_to_value(problem.u0());
    j["rhs"] = rhs_to_value(problem.rhs());
    j["kernel"] = kernel_to_value(problem.kernel());
    return j.dump(2);
}

IVPProblem problem_from_json(const std::string& text) {
    const json j = parse_document(text, "problem");
    if (!j.is_object()) {
        throw ParseError("problem: document must be an object");
    }
    const double q = number_field(j, "q", "problem");
    const double b = number_field(j, "b", "problem");
    if (!j.contains("u0") || !j.contains("rhs")) {
        throw ParseError("problem: needs \"u0\" and \"rhs\"");
    }
    FuzzyNumber u0 = fuzzy_from_value(j["u0"], "problem.u0");
    RhsExpr rhs = rhs_from_value(j["rhs"], "problem.rhs");
    Kernel kernel = j.contains("kernel") ? kernel_from_value(j["kernel"], "problem.kernel")
                                         : Kernel::one();
    try {
        return IVPProblem(q, b, std::move(u0), std::move(rhs), std::move(kernel));
    } catch (const Error& e) {
        throw ParseError(std::string("problem: ") + e.what());
    }
}

std::string report_to_json(const VerificationReport& report) {
    ordered j;
    j["schema"] = 1;
    j["verdict"] = report.pass ? "pass" : "fail";
    j["tol"] = report.tol;
    j["max_residual"] = report.max_residual;
    j["t_grid"] = report.t_grid;
    j["residuals"] = report.residuals;

    ordered ic;
    ordered trace = ordered::array();
    for (const IcPoint& p : report.ic.points) {
        ordered e;
        e["t"] = p.t;
        e["distance"] = p.distance;
        trace.push_back(std::move(e));
    }
    ic["trace"] = std::move(trace);
    ic["converged"] = report.ic.converged;
    ic["tol_ic"] = report.ic.tol_ic;
    if (std::isfinite(report.ic.slope)) {
        ic["slope"] = report.ic.slope;
    }
    j["ic"] = std::move(ic);

    j["c1mq"] = report.c1mq;

    ordered signs = ordered::array();
    for (const SignReportEntry& entry : report.sign_reports) {
        ordered e;
        e["label"] = entry.label;
        e["any_negative"] = entry.any_negative;
        e["min_value"] = entry.min_value;
        ordered points = ordered::array();
        for (const SignPoint& p : entry.points) {
            ordered pe;
            pe["t"] = p.t;
            pe["value"] = p.value;
            pe["sign"] = to_string(p.sign);
            points.push_back(std::move(pe));
        }
        e["points"] = std::move(points);
        signs.push_back(std::move(e));
    }
    j["sign_reports"] = std::move(signs);

    if (report.ordering) {
        ordered ord;
        ord["all_hold"] = report.ordering->all_hold;
        ord["in_verdict"] = report.ordering_in_verdict;
        ordered points = ordered::array();
        for (const OrderingPoint& p : report.ordering->points) {
            ordered pe;
            pe["t"] = p.t;
            pe["lower_ok"] = p.lower_vs_mid.holds;
            pe["upper_ok"] = p.mid_vs_upper.holds;
            points.push_back(std::move(pe));
        }
        ord["points"] = std::move(points);
        j["ordering"] = std::move(ord);
    }

    j["u0_width0"] = report.u0_width0;
    j["solution_width0"] = report.solution_width0;
    j["errors"] = report.errors;
    return j.dump(2);
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "t,residual,coef1_sign,ordering_ok\n";
    for (std::size_t i = 0; i < report.t_grid.size(); ++i) {
        os << csv_number(report.t_grid[i]) << ',' << csv_number(report.residuals[i]) << ',';
        if (!report.sign_reports.empty()) {
            os << to_string(report.sign_reports.front().points[i].sign);
        } else {
            os << "na";
        }
        os << ',';
        if (report.ordering) {
            const OrderingPoint& p = report.ordering->points[i];
            os << ((p.lower_vs_mid.holds && p.mid_vs_upper.holds) ? '1' : '0');
        } else {
            os << "na";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace fuzzfrac
