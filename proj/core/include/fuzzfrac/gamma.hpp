#pragma once

namespace fuzzfrac {

/// Gamma function on the positive half line.
///
/// Relative error is at most 1e-12 for x in [0.01, 30]. Throws DomainError
/// for x <= 0; reflection is not implemented.
double gamma(double x);

}  // namespace fuzzfrac
