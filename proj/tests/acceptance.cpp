// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs everything at the stated precisions and tolerances.

#include <padic/bernoulli.hpp>
#include <padic/integration.hpp>
#include <padic/mascheroni.hpp>
#include <padic/measure.hpp>
#include <padic/zeta.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace padic;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& label, const std::function<bool()>& body) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ["
                  << seconds.count() << "s]" << note << "\n"
                  << std::flush;
    }
};

PadicNumber random_unit(std::mt19937_64& rng, long p, int k) {
    mpz_class u = 0;
    mpz_class pw = 1;
    std::uniform_int_distribution<long> digit(0, p - 1);
    std::uniform_int_distribution<long> lead(1, p - 1);
    u = lead(rng);
    for (int i = 1; i < k; ++i) {
        pw *= p;
        u += digit(rng) * pw;
    }
    return PadicNumber::from_parts(p, 0, u, k);
}

// --- criterion 1 -------------------------------------------------------

bool gamma_golden_digits(double* seconds_out) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const std::vector<std::pair<long, int>> table = {{3, 10}, {5, 10}, {7, 10}, {11, 8}, {13, 9}};
    for (auto [p, prec] : table) {
        PadicContext ctx(p, prec);
        GammaConsensus cons = gamma_consensus(ctx, prec, {GammaMethod::C, GammaMethod::E});
        auto ref = reference_gamma(p);
        if (!ref) return false;
        bool here = cons.agreed_abs_precision >= prec &&
                    cons.value.truncated(prec).digits() == ref->digits() &&
                    cons.value.truncated(prec).lower_valuation() == ref->lower_valuation() &&
                    cons.matches_reference.value_or(false);
        if (!here) std::cout << "  gamma_" << p << " digit mismatch\n";
        ok = ok && here;
    }
    *seconds_out = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && *seconds_out < 10.0;
}

// --- criterion 2 -------------------------------------------------------

bool gamma_cross_formula(double* seconds_out) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    auto run = [&](long p, int k) {
        PadicContext ctx(p, k);
        GammaResult c = gamma_C(ctx, k);
        GammaResult e = gamma_E(ctx, k);
        if (agreement(c.value, e.value) < k) return false;
        for (GammaMethod m : {GammaMethod::A, GammaMethod::B, GammaMethod::D}) {
            GammaResult r = gamma_method(m, ctx, k);
            if (agreement(r.value, c.value) < k || agreement(r.value, e.value) < k) {
                std::cout << "  method " << gamma_method_name(m) << " disagrees at p=" << p
                          << "\n";
                return false;
            }
        }
        return true;
    };
    for (long p : {3L, 5L}) ok = ok && run(p, 5);
    for (long p : {7L, 11L, 13L}) ok = ok && run(p, 3);
    *seconds_out = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && *seconds_out < 300.0;
}

// --- criterion 3 -------------------------------------------------------

bool volkenborn_moments() {
    bool ok = true;
    for (long p : {3L, 5L, 7L}) {
        int cap = p == 3 ? 10 : (p == 5 ? 7 : 6);  // pinned per (p, k)
        PadicContext ctx(p, 10, cap);
        for (unsigned long n = 0; n <= 12; ++n) {
            auto coeffs = mahler_coefficients(Integrand::monomial(n), n + 2, ctx, 12);
            PadicNumber mahler = volkenborn_mahler(coeffs, 10);
            PadicNumber bn = PadicNumber::embed_abs(bernoulli_number(n), p, 10);
            bool exact10 = agreement(mahler, bn) >= 10 && mahler.abs_precision() >= 10;

            ConvergenceReport riem = volkenborn_riemann(Integrand::monomial(n), ctx, 10);
            long meet = std::min(riem.value.abs_precision(), mahler.abs_precision());
            bool routes_agree = riem.value.truncated(meet) == mahler.truncated(meet);
            bool riem_hits_bn = agreement(riem.value, bn) >= riem.value.abs_precision();

            if (!(exact10 && routes_agree && riem_hits_bn)) {
                std::cout << "  moment n=" << n << " p=" << p << " failed\n";
                ok = false;
            }
        }
    }
    return ok;
}

// --- criterion 4 -------------------------------------------------------

bool unit_moments_match_level_sums() {
    bool ok = true;
    for (long p : {3L, 5L, 7L}) {
        PadicContext ctx(p, 8);
        for (unsigned long j = 0; j <= 8; ++j) {
            PadicNumber closed = unit_moment(j, ctx, 6);
            ConvergenceReport lev =
                volkenborn_riemann(Integrand::unit_one_power(j), ctx, 4, Domain::units);
            if (agreement(closed, lev.value) < 4) {
                std::cout << "  unit moment j=" << j << " p=" << p << " mismatch\n";
                ok = false;
            }
        }
        // the two closed-form regimes stated by the decomposition identity
        if (!(unit_moment(0, ctx, 6) == PadicNumber::embed_abs(Rational(p - 1, p), p, 6))) ok = false;
        unsigned long j = static_cast<unsigned long>(p - 1);
        Rational expect = (Rational(1) - Rational(pow_z(p, j - 1))) * bernoulli_number(j);
        if (!(unit_moment(j, ctx, 6) == PadicNumber::embed_abs(expect, p, 6))) ok = false;
    }
    return ok;
}

// --- criterion 5 -------------------------------------------------------

bool regularized_measure_values() {
    bool ok = true;
    for (long p : {3L, 5L, 7L}) {
        Measure reg = Measure::regularized(p);
        Measure mu1 = Measure::bernoulli_mu1(p);
        long pn = 1;
        for (int n = 0; n <= 3; ++n) {
            mpz_class pnz = pow_z(p, n);
            mpz_class inv2 = n == 0 ? 0 : mod_inverse(2, pnz);
            for (long a = 0; a < pn; ++a) {
                Rational v = reg.ball_value({a, n});
                if (v != Rational(a % 2 == 0 ? 1 : -1, 2)) ok = false;
                long half_a = n == 0 ? 0 : mpz_class((a * inv2) % pnz).get_si();
                Rational transform = mu1.ball_value({a, n}) - 2 * mu1.ball_value({half_a, n});
                if (v != transform) ok = false;
            }
            if (!reg.additivity_check(n).ok) ok = false;
            pn *= p;
        }
    }
    return ok;
}

// --- criterion 6 -------------------------------------------------------

bool zeta_three_way() {
    bool ok = true;
    for (long p : {3L, 5L, 7L}) {
        PadicContext ctx(p, 8);
        ZetaAudit audit = zeta_consistency(ctx, 4);
        if (!audit.ok) {
            std::cout << "  audit failed for p=" << p << ":\n" << audit.summary();
            ok = false;
        }
        // branch diagnostics, stated explicitly
        PadicNumber pole = branch_inner_value(1, ctx, 4);
        if (!(pole == PadicNumber::from_rational(Rational(p - 1, p), p, 4))) ok = false;
        for (int i = 0; i < p - 1; ++i) {
            if (i == 1) continue;
            PadicNumber inner = branch_inner_value(i, ctx, 4);
            if (!inner.is_zero() || inner.abs_precision() < 4) ok = false;
        }
    }
    return ok;
}

// --- criterion 7 -------------------------------------------------------

bool dirichlet_specialization() {
    bool ok = true;
    for (long p : {5L, 7L}) {
        PadicContext ctx(p, 8);
        for (long k : {2L, 3L}) {
            ConvergenceReport sum = dirichlet_level_sum(k, ctx, 6);
            Rational pre = Rational(-1) / (Rational(1) - Rational(1, pow_z(2, k - 1)));
            pre.canonicalize();
            PadicNumber rhs = sum.value.mul_exact(pre);
            ZetaEval z = zeta_bernoulli(static_cast<int>(k), Rational(k), ctx, 4);
            if (agreement(z.value, rhs) < 4) {
                std::cout << "  dirichlet specialization failed p=" << p << " k=" << k << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

// --- criterion 8 -------------------------------------------------------

bool property_suites() {
    bool ok = true;
    for (long p : {3L, 5L, 7L}) {
        std::mt19937_64 rng(2024 + static_cast<unsigned long>(p));
        std::uniform_int_distribution<long> vdist(-2, 2);
        for (int iter = 0; iter < 100; ++iter) {
            PadicNumber x = random_unit(rng, p, 6).shifted(vdist(rng));
            PadicNumber y = random_unit(rng, p, 6).shifted(vdist(rng));
            PadicNumber s = x + y;
            if (s.lower_valuation() < std::min(x.valuation(), y.valuation())) ok = false;
            if (x.valuation() != y.valuation() &&
                s.valuation() != std::min(x.valuation(), y.valuation()))
                ok = false;

            PadicNumber u = random_unit(rng, p, 6);
            PadicNumber v = random_unit(rng, p, 6);
            UnitDecomposition du = unit_decompose(u);
            UnitDecomposition dv = unit_decompose(v);
            if (!(du.teichmuller.pow_int(p - 1) == PadicNumber::one(p, 6))) ok = false;
            if (!(unit_decompose(u * v).teichmuller == du.teichmuller * dv.teichmuller)) ok = false;
            if (!(exp_p(iwasawa_log(u)) == du.one_unit)) ok = false;

            PadicNumber w = du.one_unit;
            PadicNumber e = random_unit(rng, p, 6);
            if (!(one_unit_power(w, e, PowerMethod::exp_log) ==
                  one_unit_power(w, e, PowerMethod::binomial)))
                ok = false;
        }

        // measure presentation-invariance and additivity on random sets
        Measure reg = Measure::regularized(p);
        std::bernoulli_distribution pick(0.4);
        for (int iter = 0; iter < 100; ++iter) {
            ClopenSet A(p, 2);
            long limit = p * p;
            for (long a = 0; a < limit; ++a)
                if (pick(rng)) A.add_ball(a);
            Rational base = reg.set_value(A);
            if (reg.set_value(A.refined(3)) != base) ok = false;
            ClopenSet B = set_intersection(ClopenSet::whole(p).refined(2), A.complement());
            if (reg.set_value(set_union(A, B)) != base + reg.set_value(B)) ok = false;
        }
    }
    return ok;
}

// --- criterion 9 -------------------------------------------------------

bool qadic_haar_exact() {
    bool ok = true;
    for (auto [p, q] : std::vector<std::pair<long, long>>{{5, 3}, {3, 7}}) {
        Measure haar = Measure::qadic_haar(p, q);
        PadicContext ctx(p, 8);
        long pn = 1;
        for (int n = 1; n <= 3; ++n) {
            pn *= p;
            for (long a = 0; a < pn; ++a) {
                ConvergenceReport r = riemann_integral(Integrand::indicator({a, n}, p), haar, ctx, 6);
                PadicNumber expect = PadicNumber::from_rational(Rational(1, pn), q, 6);
                if (!r.converged || !(r.value == expect)) {
                    std::cout << "  haar ball a=" << a << " n=" << n << " (p,q)=(" << p << ","
                              << q << ") failed\n";
                    ok = false;
                }
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    Harness h;
    double t1 = 0, t2 = 0;
    h.criterion(1, "gamma_p golden digits (C,E consensus, exact, < 10 s)",
                [&] { return gamma_golden_digits(&t1); });
    h.criterion(2, "cross-formula consensus A,B,D vs C,E (< 5 min)",
                [&] { return gamma_cross_formula(&t2); });
    h.criterion(3, "Volkenborn moments equal Bernoulli numbers (both routes)",
                [] { return volkenborn_moments(); });
    h.criterion(4, "unit moments: level sums match the closed forms mod p^4",
                [] { return unit_moments_match_level_sums(); });
    h.criterion(5, "regularized measure: ±1/2 values, transform, additivity",
                [] { return regularized_measure_values(); });
    h.criterion(6, "zeta three-way agreement mod p^4 with branch diagnostics",
                [] { return zeta_three_way(); });
    h.criterion(7, "Dirichlet-series specialization at s = k",
                [] { return dirichlet_specialization(); });
    h.criterion(8, "property suites (100+ randomized cases per prime)",
                [] { return property_suites(); });
    h.criterion(9, "q-adic Haar ball masses are exactly p^{-n}",
                [] { return qadic_haar_exact(); });
    if (h.failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << h.failures << " criteria FAILED\n";
    return h.failures == 0 ? 0 : 1;
}
