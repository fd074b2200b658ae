#pragma once

#include <padic/number.hpp>

namespace padic {

/// x = p^v * omega(x) * <x> with omega(x)^{p-1} = 1 and <x> = 1 mod p.
struct UnitDecomposition {
    long valuation;
    PadicNumber teichmuller;
    PadicNumber one_unit;
};

/// Teichmuller lift of the unit part of x, by iterated p-th powering of
/// x/p^v until fixed mod p^k (at most k rounds).
PadicNumber teichmuller(const PadicNumber& x);

UnitDecomposition unit_decompose(const PadicNumber& x);

/// One-unit part <x> = x / (p^v omega(x)).
PadicNumber one_unit_part(const PadicNumber& x);

/// Iwasawa-branch logarithm of a unit: log_p <x> (roots of unity and p
/// itself are sent to 0). Requires v_p(x) = 0.
PadicNumber iwasawa_log(const PadicNumber& x);

/// exp_p via its power series; requires v_p(x) >= 1 (p odd).
PadicNumber exp_p(const PadicNumber& x);

enum class PowerMethod { exp_log, binomial };

/// u^s for u = 1 mod p and s in the convergence domain
/// |s|_p < p^{(p-2)/(p-1)}; for s in Q_p this means v_p(s) >= 0.
PadicNumber one_unit_power(const PadicNumber& u, const PadicNumber& s, PowerMethod method);

/// u^z for u = 1 mod p and an exact integer z in Z_p: computed through the
/// group structure of 1 + pZ_p mod p^k (order p^{k-1}); agrees with both
/// series methods and costs one modular exponentiation.
PadicNumber one_unit_power_int(const PadicNumber& u, const mpz_class& z);

/// Generalized binomial coefficient binom(s, n) = s(s-1)...(s-n+1)/n!.
PadicNumber padic_binom(const PadicNumber& s, unsigned long n);

}  // namespace padic
