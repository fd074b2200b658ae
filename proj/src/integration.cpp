#include <padic/integration.hpp>

#include "detail/leveldriver.hpp"

namespace padic {

Integrand Integrand::constant(const Rational& c) {
    Integrand f;
    f.eval = [c](const mpz_class&, long q, int prec) {
        return PadicNumber::from_rational(c, q, prec);
    };
    f.c1 = true;
    f.continuity_hint = [](long) { return PadicNumber::kExactPrec; };
    return f;
}

Integrand Integrand::monomial(unsigned long j) {
    Integrand f;
    f.eval = [j](const mpz_class& m, long q, int prec) {
        mpz_class v;
        mpz_pow_ui(v.get_mpz_t(), m.get_mpz_t(), j);
        return PadicNumber::from_integer(v, q, prec);
    };
    f.c1 = true;
    f.continuity_hint = [](long l) { return l; };
    return f;
}

Integrand Integrand::indicator(const ClopenBall& b, long domain_prime) {
    Integrand f;
    long pn = pow_z(domain_prime, b.level).get_si();
    long r = b.residue;
    f.eval = [pn, r](const mpz_class& m, long q, int prec) {
        return m % pn == r ? PadicNumber::one(q, prec) : PadicNumber::exact_zero(q);
    };
    f.c1 = true;
    f.continuity_hint = [lvl = b.level](long l) {
        return l >= lvl ? PadicNumber::kExactPrec : 0L;
    };
    return f;
}

Integrand Integrand::unit_one_power(const mpz_class& z) {
    Integrand f;
    f.eval = [z](const mpz_class& m, long q, int prec) {
        if (m % q == 0) return PadicNumber::exact_zero(q);
        PadicNumber x = PadicNumber::from_integer(m, q, prec);
        return one_unit_power_int(one_unit_part(x), z);
    };
    f.c1 = true;
    return f;
}

using detail::LevelDriver;

ConvergenceReport riemann_integral(const Integrand& f, const Measure& m,
                                   const PadicContext& ctx, long target_abs, Domain domain) {
    if (!m.bounded())
        throw DomainError("riemann_integral: measure is unbounded; use volkenborn_riemann");
    if (m.domain_prime() != ctx.prime)
        throw DomainError("riemann_integral: measure domain prime differs from context");
    long p = ctx.prime;
    long q = m.value_prime();
    int prec = static_cast<int>(target_abs) + 2;
    LevelDriver drv(target_abs);
    int max_level = ctx.level_cap;
    if (m.kind() == Measure::Kind::table) max_level = std::min(max_level, m.table_level());
    mpz_class pn = 1;
    for (int n = 1; n <= max_level; ++n) {
        pn *= p;
        PadicNumber s = PadicNumber::zero(q, target_abs + 2);
        for (mpz_class a = 0; a < pn; ++a) {
            if (domain == Domain::units && a % p == 0) continue;
            Rational w = m.ball_value({a.get_si(), n});
            if (w == 0) continue;
            PadicNumber fv = f.eval(a, q, prec);
            s += fv * PadicNumber::embed_abs(w, q, target_abs + 2);
        }
        if (drv.push(s, n)) break;
    }
    return drv.report();
}

ConvergenceReport volkenborn_riemann(const Integrand& f, const PadicContext& ctx,
                                     long target_abs, Domain domain) {
    if (!f.c1) throw DomainError("volkenborn_riemann: integrand must be flagged C^1");
    long p = ctx.prime;
    LevelDriver drv(target_abs);
    mpz_class pn = 1;
    for (int n = 1; n <= ctx.level_cap; ++n) {
        pn *= p;
        int prec = static_cast<int>(target_abs) + n + 2;  // guards for the 1/p^n
        PadicNumber s = PadicNumber::zero(p, target_abs + n + 2);
        for (mpz_class a = 0; a < pn; ++a) {
            if (domain == Domain::units && a % p == 0) continue;
            s += f.eval(a, p, prec);
        }
        if (drv.push(s.shifted(-n), n)) break;
    }
    return drv.report();
}

std::vector<PadicNumber> mahler_coefficients(const Integrand& f, std::size_t count,
                                             const PadicContext& ctx, int prec) {
    long p = ctx.prime;
    std::vector<PadicNumber> d;
    d.reserve(count);
    for (std::size_t i = 0; i < count; ++i) d.push_back(f.eval(mpz_class(i), p, prec));
    std::vector<PadicNumber> coeffs;
    coeffs.reserve(count);
    if (count == 0) return coeffs;
    coeffs.push_back(d[0]);
    for (std::size_t r = 1; r < count; ++r) {
        for (std::size_t i = 0; i + r < count; ++i) d[i] = d[i + 1] - d[i];
        coeffs.push_back(d[0]);
    }
    return coeffs;
}

PadicNumber volkenborn_mahler(const std::vector<PadicNumber>& coeffs, long target_abs) {
    if (coeffs.empty()) throw DomainError("volkenborn_mahler: empty coefficient window");
    long p = coeffs.front().prime();
    std::vector<PadicNumber> terms;
    terms.reserve(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        PadicNumber t = coeffs[n].div_exact(Rational(static_cast<long>(n) + 1));
        terms.push_back(n % 2 == 0 ? t : -t);
    }
    // tail check: every term from some index on must clear the target
    std::size_t n0 = terms.size();
    while (n0 > 0 && terms[n0 - 1].lower_valuation() >= target_abs) --n0;
    if (n0 == terms.size())
        throw ConvergenceError("not Volkenborn-summable in window");
    PadicNumber sum = PadicNumber::zero(p, target_abs);
    for (const PadicNumber& t : terms) sum += t;
    return sum.truncated(target_abs);
}

}  // namespace padic
