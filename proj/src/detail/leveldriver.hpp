#pragma once

#include <padic/integration.hpp>
#include <padic/number.hpp>

#include <optional>

namespace padic::detail {

// Two-consecutive-deltas stopping rule shared by the level-sum methods.
// The reported value is truncated to the precision the deltas actually
// support: the full target when converged, else the last two deltas.
struct LevelDriver {
    long target_abs;
    std::vector<long> deltas;
    std::optional<PadicNumber> prev;
    bool converged = false;
    int levels = 0;

    explicit LevelDriver(long target) : target_abs(target) {}

    bool push(const PadicNumber& s, int level) {
        if (converged) return true;
        levels = level;
        if (prev) {
            PadicNumber d = s - *prev;
            long dv = d.is_zero() ? d.abs_precision() : d.valuation();
            deltas.push_back(dv);
            size_t n = deltas.size();
            if (n >= 2 && deltas[n - 1] >= target_abs && deltas[n - 2] >= target_abs)
                converged = true;
        }
        prev = s;
        return converged;
    }

    ConvergenceReport report() const {
        if (!prev) throw ConvergenceError("level sum: no levels computed");
        long supported = target_abs;
        if (!converged) {
            size_t n = deltas.size();
            supported = 0;
            if (n >= 1) supported = deltas[n - 1];
            if (n >= 2) supported = std::min(supported, deltas[n - 2]);
            supported = std::min(supported, target_abs);
        }
        return {prev->truncated(supported), levels, deltas, converged};
    }
};

}  // namespace padic::detail
