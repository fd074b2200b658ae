#pragma once

#include <padic/bernoulli.hpp>
#include <padic/context.hpp>
#include <padic/number.hpp>

#include <optional>
#include <vector>

namespace padic {

enum class GammaMethod { A, B, C, D, E };

const char* gamma_method_name(GammaMethod m);

struct GammaResult {
    GammaMethod method;
    PadicNumber value;
    int levels_or_terms;
    bool converged;
    std::vector<long> delta_valuations;
};

/// Level iteration of -p^{-n} (p^{-n} sum_{m<p^n, p∤m} <m>^{p^n} - (1 - 1/p)),
/// the Mellin-route difference quotient at 1 - s = p^n.
GammaResult gamma_A(const PadicContext& ctx, int prec);

/// Difference quotient of Morita's Gamma_p at 1:
/// p^{-n} (Gamma_p(p^n + 1) + 1), with the log-route variant
/// -p^{-n} sum_{m<p^n, p∤m} log_p<m> required to agree at every level.
GammaResult gamma_B(const PadicContext& ctx, int prec);

struct GammaBLevel {
    int level;
    PadicNumber difference_quotient;  // (Gamma_p(p^n + 1) + 1) / p^n
    PadicNumber log_route;            // -p^{-n} log_p of the unit product
};
std::vector<GammaBLevel> gamma_B_levels(const PadicContext& ctx, int prec);

/// Fast series -sum_{n>=1} (1/n) sum_{j<=n} C(n,j) (-1)^{j+1} M_j over the
/// unit moments M_j.
GammaResult gamma_C(const PadicContext& ctx, int prec);

/// Regularized-measure route at 1 - s = p^n with the log <2> correction
/// terms.
GammaResult gamma_D(const PadicContext& ctx, int prec);

/// Linear coefficient of the expansion of (s-1) L_p(s, 1) around s = 1:
/// p^{-1} sum_{a<p} (-log_p<a> + sum_{j>=1} ((-1)^j / j) B_j (p/a)^j).
GammaResult gamma_E(const PadicContext& ctx, int prec);

GammaResult gamma_method(GammaMethod m, const PadicContext& ctx, int prec);

/// Published digit expansions for p in {3, 5, 7, 11, 13} (regression
/// vectors for the consensus).
std::optional<PadicNumber> reference_gamma(long p);

struct GammaConsensus {
    std::vector<GammaResult> results;
    PadicNumber value;             // truncated to the mutually agreed precision
    long agreed_abs_precision;     // min pairwise agreement
    std::optional<bool> matches_reference;
};

GammaConsensus gamma_consensus(const PadicContext& ctx, int prec,
                               const std::vector<GammaMethod>& methods);

}  // namespace padic
