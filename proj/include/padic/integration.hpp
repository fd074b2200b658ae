#pragma once

#include <padic/analytic.hpp>
#include <padic/context.hpp>
#include <padic/measure.hpp>
#include <padic/number.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace padic {

/// Restriction of a continuous function Z_p -> Q_q to the nonnegative
/// integers. `eval` receives the residue, the value-field prime and the
/// number of significant digits to produce.
struct Integrand {
    std::function<PadicNumber(const mpz_class&, long, int)> eval;
    bool c1 = false;  // needed for Volkenborn integration
    /// level l -> guaranteed agreement depth of outputs for inputs
    /// congruent mod p^l.
    std::optional<std::function<long(long)>> continuity_hint;

    static Integrand constant(const Rational& c);
    static Integrand monomial(unsigned long j);
    static Integrand indicator(const ClopenBall& b, long domain_prime);
    /// chi_{units}(x) * <x>^z  (zero on pZ_p); domain prime must equal the
    /// value prime.
    static Integrand unit_one_power(const mpz_class& z);
};

/// Outcome of an iterated level-sum computation. `value` is truncated to
/// the precision the deltas actually support; `converged` means two
/// consecutive deltas cleared the target before the level cap.
struct ConvergenceReport {
    PadicNumber value;
    int levels;
    std::vector<long> delta_valuations;
    bool converged;
};

enum class Domain { whole, units };

/// S_n = sum_{a at level n} f(a) mu(a + p^n Z_p), iterated until two
/// consecutive deltas have valuation >= target_abs (O(p^target_abs)).
/// Requires a bounded measure.
ConvergenceReport riemann_integral(const Integrand& f, const Measure& m,
                                   const PadicContext& ctx, long target_abs,
                                   Domain domain = Domain::whole);

/// Volkenborn sums S_n = p^{-n} sum_{a<p^n} f(a) with the same stopping
/// rule; n guard digits absorb the division. Requires the C^1 flag.
ConvergenceReport volkenborn_riemann(const Integrand& f, const PadicContext& ctx,
                                     long target_abs, Domain domain = Domain::whole);

/// Forward differences a_n = sum_i (-1)^{n-i} C(n,i) f(i), via an in-place
/// difference table.
std::vector<PadicNumber> mahler_coefficients(const Integrand& f, std::size_t count,
                                             const PadicContext& ctx, int prec);

/// Independent route for the Volkenborn integral:
/// sum_n (-1)^n a_n / (n+1). Throws ConvergenceError when the coefficient
/// tail does not clear the target within the window.
PadicNumber volkenborn_mahler(const std::vector<PadicNumber>& coeffs, long target_abs);

}  // namespace padic
