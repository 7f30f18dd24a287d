#include "fuzzfrac/crisp_fn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fuzzfrac {

namespace {

bool term_less(double ra, double rb) { return ra < rb; }

}  // namespace

CrispCoefFn::CrispCoefFn(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (const Term& term : terms_) {
        if (!std::isfinite(term.a) || !std::isfinite(term.r)) {
            throw NonFinite("crisp coefficient term");
        }
    }
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& x, const Term& y) { return term_less(x.r, y.r); });
}

double CrispCoefFn::operator()(double t) const {
    if (t <= 0.0) {
        for (const Term& term : terms_) {
            if (term.r < 0.0) {
                throw DomainError("crisp coefficient with negative exponent needs t > 0, got t = " +
                                  std::to_string(t));
            }
        }
    }
    double value = 0.0;
    for (const Term& term : terms_) {
        value += term.a * std::pow(t, term.r);
    }
    return value;
}

Kernel::Kernel(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw DomainError("kernel needs at least one term");
    }
    for (const Term& term : terms_) {
        if (!std::isfinite(term.a) || !std::isfinite(term.r) || !std::isfinite(term.w)) {
            throw NonFinite("kernel term");
        }
        if (term.r < 0.0 || term.w < 0.0) {
            throw DomainError("kernel exponents must be nonnegative for continuity on t >= s");
        }
    }
    std::stable_sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
        return x.r != y.r ? x.r < y.r : x.w < y.w;
    });
}

double Kernel::operator()(double t, double s) const {
    double value = 0.0;
    for (const Term& term : terms_) {
        value += term.a * std::pow(t, term.r) * std::pow(s, term.w);
    }
    return value;
}

bool Kernel::is_one() const {
    return terms_.size() == 1 && terms_[0].a == 1.0 && terms_[0].r == 0.0 && terms_[0].w == 0.0;
}

}  // namespace fuzzfrac
