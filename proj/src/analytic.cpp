#include <padic/analytic.hpp>

namespace padic {

namespace {

long floor_log(long n, long p) {
    long e = 0;
    while (n >= p) {
        n /= p;
        ++e;
    }
    return e;
}

// Terms of the exp-type series have valuation >= n*v - v_p(n!) and
// v_p(n!) <= (n-1)/(p-1), so beyond the returned index every term
// clears `target`.
long factorial_series_last_term(long v, long p, long target) {
    long n = 1;
    while (n * (v * (p - 1) - 1) < target * (p - 1)) ++n;
    return n;
}

}  // namespace

PadicNumber teichmuller(const PadicNumber& x) {
    if (x.is_zero()) throw DomainError("teichmuller: zero input");
    long p = x.prime();
    int k = x.precision();
    mpz_class mod = pow_z(p, k);
    mpz_class w = x.unit();
    mpz_class prev;
    for (int i = 0; i <= k; ++i) {
        prev = w;
        mpz_powm(w.get_mpz_t(), w.get_mpz_t(), mpz_class(p).get_mpz_t(), mod.get_mpz_t());
        if (w == prev) break;
    }
    return PadicNumber::from_parts(p, 0, w, k);
}

UnitDecomposition unit_decompose(const PadicNumber& x) {
    if (x.is_zero()) throw DomainError("unit_decompose: zero input");
    PadicNumber w = teichmuller(x);
    PadicNumber u = x.shifted(-x.valuation()) / w;
    return {x.valuation(), w, u};
}

PadicNumber one_unit_part(const PadicNumber& x) { return unit_decompose(x).one_unit; }

PadicNumber iwasawa_log(const PadicNumber& x) {
    if (x.is_zero() || x.valuation() != 0)
        throw DomainError("iwasawa_log: input must be a unit");
    long p = x.prime();
    PadicNumber z = one_unit_part(x) - PadicNumber::one(p, x.precision());
    if (z.is_zero()) return z;  // Teichmuller kernel
    long vz = z.valuation();
    long target = z.abs_precision() + 1;
    PadicNumber sum = PadicNumber::zero(p, target);
    PadicNumber zpow = PadicNumber::one(p, x.precision());
    // term valuation n*vz - v_p(n) >= n*vz - floor_log(n), nondecreasing
    for (long n = 1; n * vz - floor_log(n, p) < target; ++n) {
        zpow = zpow * z;
        PadicNumber term = zpow.div_exact(Rational(n));
        sum += (n % 2 == 0) ? -term : term;
    }
    return sum;
}

PadicNumber exp_p(const PadicNumber& x) {
    long p = x.prime();
    if (x.is_zero()) {
        if (x.abs_precision() < 1) throw DomainError("exp_p: requires v_p(x) >= 1");
        int k = static_cast<int>(std::min<long>(x.abs_precision(), 4096));
        return PadicNumber::one(p, k);
    }
    long v = x.valuation();
    if (v < 1) throw DomainError("exp_p: requires v_p(x) >= 1");
    long target = x.abs_precision() + 1;
    long last = factorial_series_last_term(v, p, target);
    PadicNumber sum = PadicNumber::one(p, x.precision() + static_cast<int>(v));
    PadicNumber term = sum;
    for (long n = 1; n <= last; ++n) {
        term = (term * x).div_exact(Rational(n));
        sum += term;
    }
    return sum;
}

PadicNumber one_unit_power(const PadicNumber& u, const PadicNumber& s, PowerMethod method) {
    if (u.is_zero() || u.valuation() != 0)
        throw DomainError("one_unit_power: base must be a unit");
    long p = u.prime();
    PadicNumber z = u - PadicNumber::one(p, u.precision());
    if (!z.is_zero() && z.valuation() < 1)
        throw DomainError("one_unit_power: base must be = 1 mod p");
    if (!s.is_zero() && s.valuation() < 0)
        throw DomainError("one_unit_power: exponent outside convergence domain");

    if (z.is_zero()) {
        // u = 1 + O(p^a): u^s = 1 + O(p^{a + v(s)})
        long a = clamp_prec(z.abs_precision() + s.lower_valuation());
        return PadicNumber::one(p, static_cast<int>(std::min<long>(a, 4096)));
    }

    if (method == PowerMethod::exp_log) {
        PadicNumber lg = iwasawa_log(u);
        PadicNumber arg = s * lg;
        return exp_p(arg);
    }

    // binomial route: sum_n binom(s, n) (u-1)^n
    long vz = z.valuation();
    long target = z.abs_precision() + 1;
    long last = factorial_series_last_term(vz, p, target);
    PadicNumber sum = PadicNumber::one(p, u.precision());
    PadicNumber coeff = sum;  // binom(s, 0)
    PadicNumber zpow = sum;
    for (long n = 1; n <= last; ++n) {
        coeff = coeff * s.add_exact(Rational(1 - n));
        coeff = coeff.div_exact(Rational(n));
        zpow = zpow * z;
        sum += coeff * zpow;
    }
    return sum;
}

PadicNumber one_unit_power_int(const PadicNumber& u, const mpz_class& z) {
    if (u.is_zero() || u.valuation() != 0)
        throw DomainError("one_unit_power_int: base must be a unit");
    long p = u.prime();
    int k = u.precision();
    if (k <= 1) return PadicNumber::one(p, std::max(k, 1));
    // (1 + pZ_p) mod p^k is cyclic of order p^{k-1}
    mpz_class order = pow_z(p, k - 1);
    mpz_class e = z % order;
    if (e < 0) e += order;
    mpz_class mod = pow_z(p, k);
    mpz_class r;
    mpz_powm(r.get_mpz_t(), u.unit().get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return PadicNumber::from_parts(p, 0, r, k);
}

PadicNumber padic_binom(const PadicNumber& s, unsigned long n) {
    long p = s.prime();
    PadicNumber r = PadicNumber::one(p, std::max(1, s.precision()));
    for (unsigned long j = 0; j < n; ++j) {
        r = r * s.add_exact(-Rational(static_cast<long>(j)));
        r = r.div_exact(Rational(static_cast<long>(j) + 1));
    }
    return r;
}

}  // namespace padic
