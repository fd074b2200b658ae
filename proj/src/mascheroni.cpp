#include <padic/mascheroni.hpp>

#include "detail/leveldriver.hpp"
#include "detail/modring.hpp"

#include <algorithm>

namespace padic {

using detail::LevelDriver;
using detail::RingMpz;
using detail::RingU64;

const char* gamma_method_name(GammaMethod m) {
    switch (m) {
        case GammaMethod::A: return "A";
        case GammaMethod::B: return "B";
        case GammaMethod::C: return "C";
        case GammaMethod::D: return "D";
        case GammaMethod::E: return "E";
    }
    return "?";
}

namespace {

long floor_log(long n, long p) {
    long e = 0;
    while (n >= p) {
        n /= p;
        ++e;
    }
    return e;
}

int level_budget(const PadicContext& ctx, int prec) {
    int cap = std::min(ctx.level_cap, PadicContext::default_level_cap(ctx.prime));
    return std::max(1, std::min(cap, prec + 4));
}

// sum over units m < p^n of coeff(m) * <m>^{p^n}, computed in the ring.
template <class Ring>
mpz_class unit_power_level_sum(const Ring& ring, long p, int K, long pn, const mpz_class& exponent,
                               bool alternating_over_2m) {
    using E = typename Ring::elem;
    mpz_class pK1 = pow_z(p, K - 1);
    E acc = ring.from_long(0);
    E inv2 = ring.inv(ring.from_long(2));
    for (long m = 1; m < pn; ++m) {
        if (m % p == 0) continue;
        E mm = ring.from_long(m);
        E w = ring.pow(mm, pK1);
        E u = ring.mul(mm, ring.inv(w));
        E t = ring.pow(u, exponent);
        if (alternating_over_2m) {
            t = ring.mul(t, ring.mul(inv2, ring.inv(mm)));
            if (m % 2 == 0) {
                acc = ring.sub(acc, t);  // (-1)^{m+1}
                continue;
            }
        }
        acc = ring.add(acc, t);
    }
    return ring.to_mpz(acc);
}

mpz_class unit_power_level_sum_auto(long p, int K, long pn, const mpz_class& exponent,
                                    bool alternating_over_2m) {
    if (RingU64::fits(p, K)) {
        RingU64 ring{pow_z(p, K).get_ui()};
        return unit_power_level_sum(ring, p, K, pn, exponent, alternating_over_2m);
    }
    RingMpz ring{pow_z(p, K)};
    return unit_power_level_sum(ring, p, K, pn, exponent, alternating_over_2m);
}

}  // namespace

GammaResult gamma_A(const PadicContext& ctx, int prec) {
    long p = ctx.prime;
    int cap = level_budget(ctx, prec);
    LevelDriver drv(prec);
    long pn = 1;
    for (int n = 1; n <= cap; ++n) {
        pn *= p;
        int K = prec + 2 * n + 2;
        mpz_class acc = unit_power_level_sum_auto(p, K, pn, mpz_class(pn), false);
        PadicNumber sum = PadicNumber::from_parts(p, 0, acc, K);
        Rational haar_mass(pow_z(p, n - 1) * (p - 1));  // (1 - 1/p) p^n
        PadicNumber level = -(sum.add_exact(-haar_mass)).shifted(-2 * n);
        if (drv.push(level, n)) break;
    }
    ConvergenceReport rep = drv.report();
    return {GammaMethod::A, rep.value, rep.levels, rep.converged, rep.delta_valuations};
}

std::vector<GammaBLevel> gamma_B_levels(const PadicContext& ctx, int prec) {
    long p = ctx.prime;
    int cap = level_budget(ctx, prec);
    int K = prec + cap + 2;
    std::vector<GammaBLevel> out;
    mpz_class mod = pow_z(p, K);
    mpz_class prod = 1;
    long pn = 1;
    for (int n = 1; n <= cap; ++n) {
        long next = pn * p;
        for (long m = pn == 1 ? 1 : pn; m < next; ++m) {
            if (m % p == 0) continue;
            prod = (prod * m) % mod;
        }
        pn = next;
        // Gamma_p(p^n + 1) = prod over units below p^n (argument is even)
        PadicNumber gp = PadicNumber::from_parts(p, 0, prod, K);
        PadicNumber quotient = (gp + PadicNumber::one(p, K)).shifted(-n);
        PadicNumber logroute = -iwasawa_log(gp).shifted(-n);
        out.push_back({n, quotient, logroute});
    }
    return out;
}

GammaResult gamma_B(const PadicContext& ctx, int prec) {
    auto levels = gamma_B_levels(ctx, prec);
    LevelDriver quotient(prec);
    LevelDriver logroute(prec);
    for (const auto& lvl : levels) {
        bool a = quotient.push(lvl.difference_quotient, lvl.level);
        bool b = logroute.push(lvl.log_route, lvl.level);
        if (a && b) break;
    }
    ConvergenceReport rq = quotient.report();
    ConvergenceReport rl = logroute.report();
    long meet = std::min(rq.value.abs_precision(), rl.value.abs_precision());
    bool variants_agree = agreement(rq.value, rl.value) >= meet;
    return {GammaMethod::B, rq.value, rq.levels, rq.converged && rl.converged && variants_agree,
            rq.delta_valuations};
}

GammaResult gamma_C(const PadicContext& ctx, int prec) {
    long p = ctx.prime;
    // inner terms carry valuation >= n - 2 - floor(log_p n) (observed floor;
    // the converged flag re-checks the trailing terms)
    int nmax = 1;
    while (nmax - 2 - floor_log(nmax, p) < prec + 1) ++nmax;
    nmax += 2;
    int work_abs = prec + nmax + 3;

    std::vector<PadicNumber> moments;
    moments.reserve(static_cast<size_t>(nmax) + 1);
    for (int j = 0; j <= nmax; ++j)
        moments.push_back(unit_moment(static_cast<unsigned long>(j), ctx, work_abs));

    PadicNumber sum = PadicNumber::zero(p, work_abs);
    std::vector<long> term_vals;
    for (int n = 1; n <= nmax; ++n) {
        PadicNumber inner = PadicNumber::zero(p, work_abs);
        for (int j = 0; j <= n; ++j) {
            PadicNumber t = moments[static_cast<size_t>(j)].mul_exact(
                Rational(binomial_z(static_cast<unsigned long>(n), static_cast<unsigned long>(j))));
            inner += (j % 2 == 0) ? -t : t;  // (-1)^{j+1}
        }
        PadicNumber term = inner.div_exact(Rational(n));
        term_vals.push_back(term.lower_valuation());
        sum += term;
    }
    PadicNumber value = (-sum).truncated(prec);
    size_t nt = term_vals.size();
    bool converged = nt >= 2 && term_vals[nt - 1] >= prec && term_vals[nt - 2] >= prec;
    return {GammaMethod::C, value, nmax, converged, term_vals};
}

GammaResult gamma_D(const PadicContext& ctx, int prec) {
    long p = ctx.prime;
    int cap = level_budget(ctx, prec);
    LevelDriver drv(prec);
    long pn = 1;
    for (int n = 1; n <= cap; ++n) {
        pn *= p;
        // log<2> enters the correction; its valuation widens the working
        // precision together with the n from the denominator
        int K0 = prec + n + 6;
        PadicNumber two0 = PadicNumber::from_integer(2, p, K0);
        long v2 = iwasawa_log(two0).valuation();
        int K = prec + n + static_cast<int>(v2) + 4;

        mpz_class acc = unit_power_level_sum_auto(p, K, pn, mpz_class(pn), true);
        PadicNumber sum = PadicNumber::from_parts(p, 0, acc, K);

        PadicNumber two = PadicNumber::from_integer(2, p, K);
        PadicNumber u2 = one_unit_part(two);
        PadicNumber log2 = iwasawa_log(two);
        // (1 - 1/p) log<2> (1 + (p^n / 2) log<2>)
        PadicNumber correction =
            log2.mul_exact(Rational(p - 1, p)) *
            (PadicNumber::one(p, K) + log2.mul_exact(Rational(pow_z(p, n), 2)));
        PadicNumber denom = PadicNumber::one(p, K) - one_unit_power_int(u2, mpz_class(pn));
        PadicNumber level = (sum - correction) / denom;
        if (drv.push(level, n)) break;
    }
    ConvergenceReport rep = drv.report();
    return {GammaMethod::D, rep.value, rep.levels, rep.converged, rep.delta_valuations};
}

GammaResult gamma_E(const PadicContext& ctx, int prec) {
    long p = ctx.prime;
    // series terms have valuation >= j - 1 - floor(log_p j)
    unsigned long jmax = 1;
    while (static_cast<long>(jmax) - 1 - floor_log(static_cast<long>(jmax), p) < prec + 1)
        ++jmax;
    jmax += 2;
    int W = prec + 6;

    PadicNumber total = PadicNumber::zero(p, prec + 2);
    for (long a = 1; a < p; ++a) {
        PadicNumber av = PadicNumber::from_integer(a, p, W);
        Rational series(0);
        Rational pa(p, a);
        Rational pa_pow(1);
        for (unsigned long j = 1; j <= jmax; ++j) {
            pa_pow *= pa;
            Rational bj = bernoulli_number(j);
            if (bj == 0) continue;
            Rational t = bj * pa_pow / Rational(static_cast<long>(j));
            series += (j % 2 == 0) ? t : -t;
        }
        total += -iwasawa_log(av) + PadicNumber::embed_abs(series, p, prec + 2);
    }
    PadicNumber value = total.mul_exact(Rational(1, p)).truncated(prec);
    return {GammaMethod::E, value, static_cast<int>(jmax), true, {}};
}

GammaResult gamma_method(GammaMethod m, const PadicContext& ctx, int prec) {
    switch (m) {
        case GammaMethod::A: return gamma_A(ctx, prec);
        case GammaMethod::B: return gamma_B(ctx, prec);
        case GammaMethod::C: return gamma_C(ctx, prec);
        case GammaMethod::D: return gamma_D(ctx, prec);
        case GammaMethod::E: return gamma_E(ctx, prec);
    }
    throw DomainError("gamma_method: unknown method");
}

std::optional<PadicNumber> reference_gamma(long p) {
    struct Row {
        long p;
        long val;
        std::vector<long> digits;
        long abs;
    };
    static const std::vector<Row> table = {
        {3, 1, {2, 2, 1, 2, 1, 2, 2, 2, 0}, 10},
        {5, 1, {1, 0, 3, 0, 2, 3, 4, 1, 2}, 10},
        {7, 0, {5, 2, 4, 6, 2, 0, 6, 2, 0, 1}, 10},
        {11, 0, {1, 10, 2, 1, 5, 5, 4, 5}, 8},
        {13, 1, {4, 0, 7, 8, 7, 6, 4, 9}, 9},
    };
    for (const Row& row : table) {
        if (row.p != p) continue;
        mpz_class unit = 0;
        mpz_class pw = 1;
        for (long d : row.digits) {
            unit += d * pw;
            pw *= p;
        }
        return PadicNumber::from_parts(p, row.val, unit, static_cast<int>(row.abs - row.val));
    }
    return std::nullopt;
}

GammaConsensus gamma_consensus(const PadicContext& ctx, int prec,
                               const std::vector<GammaMethod>& methods) {
    if (methods.empty()) throw DomainError("gamma_consensus: no methods selected");
    GammaConsensus out;
    for (GammaMethod m : methods) out.results.push_back(gamma_method(m, ctx, prec));
    long agreed = out.results.front().value.abs_precision();
    for (size_t a = 0; a < out.results.size(); ++a) {
        agreed = std::min(agreed, out.results[a].value.abs_precision());
        for (size_t b = a + 1; b < out.results.size(); ++b)
            agreed = std::min(agreed, agreement(out.results[a].value, out.results[b].value));
    }
    out.agreed_abs_precision = agreed;
    out.value = out.results.front().value.truncated(agreed);
    if (auto ref = reference_gamma(ctx.prime)) {
        long upto = std::min(agreed, ref->abs_precision());
        out.matches_reference = agreement(out.value, *ref) >= upto;
    }
    return out;
}

}  // namespace padic
