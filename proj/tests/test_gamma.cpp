#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "fuzzfrac/errors.hpp"
#include "fuzzfrac/gamma.hpp"

namespace {
constexpr double (*gammafn)(double) = &fuzzfrac::gamma;
}

TEST_SUITE_BEGIN("gamma");

TEST_CASE("integer anchors") {
    CHECK(gammafn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gammafn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gammafn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gammafn(10.0) == doctest::Approx(362880.0).epsilon(1e-13));
}

TEST_CASE("half-integer values via the sqrt(pi) anchor") {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    CHECK(gammafn(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-12));
    // Recurrence oracle: Gamma(1.5) = 0.5 * Gamma(0.5).
    CHECK(gammafn(1.5) == doctest::Approx(0.5 * sqrt_pi).epsilon(1e-12));
    CHECK(gammafn(2.5) == doctest::Approx(1.5 * 0.5 * sqrt_pi).epsilon(1e-12));
}

TEST_CASE("recurrence Gamma(x+1) = x Gamma(x) across the domain") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> xs(0.01, 29.0);
    for (int i = 0; i < 500; ++i) {
        const double x = xs(rng);
        CHECK(gammafn(x + 1.0) == doctest::Approx(x * gammafn(x)).epsilon(4e-13));
    }
}

TEST_CASE("matches the C library gamma to 1e-12 relative on [0.01, 30]") {
    double worst = 0.0;
    for (int i = 0; i <= 30000; ++i) {
        const double x = 0.01 + (30.0 - 0.01) * static_cast<double>(i) / 30000.0;
        const double rel = std::abs(gammafn(x) - std::tgamma(x)) / std::tgamma(x);
        worst = std::max(worst, rel);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("rejects the nonpositive half line") {
    CHECK_THROWS_AS(gammafn(0.0), fuzzfrac::DomainError);
    CHECK_THROWS_AS(gammafn(-1.0), fuzzfrac::DomainError);
    CHECK_THROWS_AS(gammafn(-0.5), fuzzfrac::DomainError);
}

TEST_SUITE_END();
