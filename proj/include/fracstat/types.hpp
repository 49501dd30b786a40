#pragma once

#include <stdexcept>

namespace fracstat {

/// Fractional order of the sliding-memory derivative. alpha = 1 selects the
/// classical first derivative; the fractional kernel is used for alpha < 1.
struct FracOrder {
    double alpha;

    explicit FracOrder(double a) : alpha(a) {
        if (!(a > 0.0) || !(a <= 1.0))
            throw std::invalid_argument("FracOrder: alpha must lie in (0, 1]");
    }

    bool classical() const { return alpha == 1.0; }
};

/// Length of the sliding memory window, in hours.
struct MemoryLength {
    double hours;

    explicit MemoryLength(double L) : hours(L) {
        if (!(L > 0.0))
            throw std::invalid_argument("MemoryLength: L must be positive");
    }
};

}  // namespace fracstat
