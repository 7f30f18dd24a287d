#pragma once

#include <cstddef>

#include "fuzzfrac/errors.hpp"

namespace fuzzfrac {

/// Uniform grid of membership levels alpha_j = j/M for j = 0..M.
///
/// The grid is fully determined by its level count M+1, so values on two
/// grids are compatible exactly when the counts match.
class AlphaGrid {
public:
    static constexpr std::size_t kDefaultLevelCount = 101;

    explicit AlphaGrid(std::size_t level_count = kDefaultLevelCount) : levels_(level_count) {
        if (level_count < 2) {
            throw DomainError("alpha grid needs at least 2 levels (M >= 1), got " +
                              std::to_string(level_count));
        }
    }

    /// Number of stored levels, M+1.
    std::size_t level_count() const { return levels_; }

    /// Number of segments, M.
    std::size_t segments() const { return levels_ - 1; }

    /// alpha_j = j/M; level(0) == 0 and level(M) == 1 exactly.
    double level(std::size_t j) const {
        return static_cast<double>(j) / static_cast<double>(segments());
    }

    friend bool operator==(const AlphaGrid&, const AlphaGrid&) = default;

private:
    std::size_t levels_;
};

}  // namespace fuzzfrac
