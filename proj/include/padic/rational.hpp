#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace padic {

/// Exact rational scalar. mpq_class keeps values canonical (reduced,
/// positive denominator), which is exactly the contract we need.
using Rational = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// v_p(n) for nonzero n.
inline long valuation(const mpz_class& n, long p) {
    if (n == 0) throw DomainError("valuation of zero is undefined");
    mpz_class rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

/// v_p of a nonzero rational.
inline long valuation(const Rational& q, long p) {
    if (q == 0) throw DomainError("valuation of zero is undefined");
    return valuation(mpz_class(q.get_num()), p) - valuation(mpz_class(q.get_den()), p);
}

inline mpz_class pow_z(long base, long exp) {
    if (exp < 0) throw DomainError("pow_z: negative exponent");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

inline mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("mod_inverse: not invertible");
    return r;
}

inline mpz_class binomial_z(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// p-adic fractional part of a rational: the unique t/p^m in [0,1) with
/// x - t/p^m in Z_p. Requires x in Q with p not dividing the prime-to-p
/// part of the denominator (always true when x in Q_p makes sense).
inline Rational frac_part(const Rational& x, long p) {
    if (x == 0) return Rational(0);
    long v = valuation(x, p);
    if (v >= 0) return Rational(0);
    long m = -v;
    mpz_class pm = pow_z(p, m);
    mpz_class num = x.get_num();
    mpz_class den = x.get_den();
    // den = p^m * d with gcd(d, p) = 1; the integer part of x mod Z_p is
    // num * inv(d) / p^m reduced mod p^m.
    mpz_class rest;
    mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
    mpz_class t = (num * mod_inverse(rest, pm)) % pm;
    if (t < 0) t += pm;
    Rational r(t, pm);
    r.canonicalize();
    return r;
}

inline bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace padic
