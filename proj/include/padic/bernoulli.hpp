#pragma once

#include <padic/analytic.hpp>
#include <padic/context.hpp>
#include <padic/number.hpp>
#include <padic/rational.hpp>

namespace padic {

/// B_n under the B_1 = -1/2 convention, via the defining recurrence
/// sum_{j<=n} C(n+1,j) B_j = 0. Memoized; concurrent readers are safe.
Rational bernoulli_number(unsigned long n);

/// B_n(x) = sum_j C(n,j) B_j x^{n-j}.
Rational bernoulli_polynomial(unsigned long n, const Rational& x);

/// Generalized Bernoulli number B_{n,omega^{-k}} for k != 0 mod (p-1)
/// (conductor-p character): p^{n-1} sum_{a=1}^{p-1} omega(a)^{-k} B_n(a/p).
/// Result has v_p >= -1 and is returned modulo p^prec (absolute precision).
PadicNumber gen_bernoulli(unsigned long n, long k, const PadicContext& ctx, int prec);

/// M_j = lim_m p^{-m} sum_{a<p^m, p∤a} omega(a)^{-j} a^j in closed form:
/// 1 - 1/p for j = 0; (1 - p^{j-1}) B_j when (p-1) | j, j > 0;
/// B_{j,omega^{-j}} otherwise. Returned modulo p^prec.
PadicNumber unit_moment(unsigned long j, const PadicContext& ctx, int prec);

/// Morita's Gamma_p at nonnegative integer arguments:
/// Gamma_p(n) = (-1)^n prod_{1<=m<n, p∤m} m, reduced mod p^prec.
PadicNumber gamma_p_int(const mpz_class& n, const PadicContext& ctx, int prec);

}  // namespace padic
