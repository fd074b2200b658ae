#pragma once

#include <padic/rational.hpp>

namespace padic {

/// Ambient parameters for computations in Q_p: the odd prime, the default
/// number of significant base-p digits, and a hard bound on summation
/// levels (a level-n sum visits p^n residues).
struct PadicContext {
    long prime;
    int precision;
    int level_cap;

    static constexpr long kResidueBudget = 10'000'000;  // per level-sum method

    PadicContext(long p, int prec, int cap) : prime(p), precision(prec), level_cap(cap) {
        validate();
    }

    PadicContext(long p, int prec) : PadicContext(p, prec, default_level_cap(p)) {}

    explicit PadicContext(long p) : PadicContext(p, 8) {}

    /// Largest n with p^n within the residue budget (at least 1).
    static int default_level_cap(long p) {
        int n = 0;
        long double acc = 1;
        while (acc * p <= static_cast<long double>(kResidueBudget)) {
            acc *= p;
            ++n;
        }
        return n < 1 ? 1 : n;
    }

    PadicContext with_precision(int prec) const { return {prime, prec, level_cap}; }
    PadicContext with_level_cap(int cap) const { return {prime, precision, cap}; }

    void validate() const {
        if (!is_odd_prime(prime)) throw DomainError("context: prime must be an odd prime");
        if (precision < 1) throw DomainError("context: precision must be >= 1");
        if (level_cap < 1) throw DomainError("context: level cap must be >= 1");
    }
};

}  // namespace padic
