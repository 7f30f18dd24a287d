#pragma once

#include <string>

#include "fuzzfrac/problem.hpp"
#include "fuzzfrac/verifier.hpp"

namespace fuzzfrac {

// Fuzzy numbers serialize as {"levels": M+1, "lower": [...], "upper": [...]}.
std::string to_json(const FuzzyNumber& x);
FuzzyNumber fuzzy_from_json(const std::string& text);

/// Shorthand literals accepted by the CLI: "tri:a,b,c", "crisp:r", "zero".
FuzzyNumber parse_fuzzy_shorthand(const std::string& text, const AlphaGrid& grid);

// Power functions: {"levels": M+1, "terms": [{"p": ..., "coef": {...}}, ...]}.
std::string to_json(const FuzzyPowerFunc& u);
FuzzyPowerFunc power_func_from_json(const std::string& text);

// Problems: {"q": ..., "b": ..., "u0": {...}, "rhs": {...}, "kernel": ...}.
// Crisp coefficients are token lists [{"a": ..., "r": ...}, ...]; kernels are
// "one" or token lists [{"a": ..., "r": ..., "w": ...}, ...].
std::string to_json(const IVPProblem& problem);
IVPProblem problem_from_json(const std::string& text);

/// Deterministic report document, "schema": 1.
std::string report_to_json(const VerificationReport& report);

/// Plot-ready table with columns t, residual, coef1_sign, ordering_ok.
std::string report_to_csv(const VerificationReport& report);

}  // namespace fuzzfrac
