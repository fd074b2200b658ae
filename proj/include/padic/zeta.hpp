#pragma once

#include <padic/bernoulli.hpp>
#include <padic/context.hpp>
#include <padic/integration.hpp>
#include <padic/number.hpp>

#include <string>
#include <vector>

namespace padic {

/// Branch index of zeta_{p,i}(s) = L_p(s, omega^{1-i}); i lives mod (p-1)
/// and is kept as the representative in [0, p-2]. Since p-1 is even, the
/// parity of i (hence the sign (-1)^{i-1}) does not depend on the
/// representative.
struct ZetaBranch {
    int i;

    ZetaBranch(int idx, long p) : i(((idx % (p - 1)) + (p - 1)) % (p - 1)) {}
};

enum class ZetaMethod { haar, bernoulli, washington };

const char* zeta_method_name(ZetaMethod m);

struct ZetaEval {
    int branch;
    Rational s;
    ZetaMethod method;
    PadicNumber value;
    int levels_or_terms;
    bool converged;
    std::vector<long> delta_valuations;
};

/// Mellin route through the internal Haar measure:
/// zeta = (-1)^{i-1}/(s-1) * lim_n p^{-n} sum_{m<p^n, p∤m} omega(m)^{1-i} <m>^{1-s}.
ZetaEval zeta_haar(int branch, const Rational& s, const PadicContext& ctx, int prec);

/// Regularized-Bernoulli-measure route:
/// zeta = -1/(1 - omega(2)^{1-i}<2>^{1-s}) * lim_n sum_{m<p^n, p∤m}
///        omega(m)^{-i} <m>^{-s} (-1)^m / 2.
ZetaEval zeta_bernoulli(int branch, const Rational& s, const PadicContext& ctx, int prec);

/// Finite expansion around s = 1:
/// (s-1) zeta = p^{-1} sum_{a=1}^{p-1} omega(a)^{1-i} exp_p((1-s) log_p <a>)
///              * sum_j binom(1-s, j) B_j (p/a)^j.
ZetaEval zeta_washington(int branch, const Rational& s, const PadicContext& ctx, int prec);

/// The inner integral of the Mellin route at s = 1, computed exactly:
/// p^{-1} sum_{a=1}^{p-1} omega(a)^{1-i}. Equals 1 - 1/p on the pole
/// branch i = 1 and 0 on every other branch.
PadicNumber branch_inner_value(int branch, const PadicContext& ctx, int prec);

/// Unit-restricted level sums of (-1)^m m^{-k} / 2 (Dirichlet-series side
/// of the s = k specialization).
ConvergenceReport dirichlet_level_sum(long k, const PadicContext& ctx, long target_abs);

struct ZetaAuditCell {
    int branch;
    Rational s;
    ZetaEval haar;
    ZetaEval bernoulli;
    ZetaEval washington;
    long pairwise_agreement;  // min over pairs of v_p(difference)
    bool ok;
};

struct ZetaAudit {
    std::vector<ZetaAuditCell> cells;
    std::vector<PadicNumber> inner_values;  // per branch, at s = 1
    bool pole_structure_ok;
    bool special_values_ok;  // unit moment identity for sampled even n
    bool ok;
    std::string summary() const;
};

std::vector<Rational> default_zeta_grid(long p);

/// Runs all three methods over the grid (all branches), checks pairwise
/// agreement mod p^prec, pole/holomorphy diagnostics and the special-value
/// relation. Shares the omega/<.> tables across cells; results are
/// identical to the standalone methods.
ZetaAudit zeta_consistency(const PadicContext& ctx, int prec,
                           const std::vector<Rational>& grid = {});

}  // namespace padic
