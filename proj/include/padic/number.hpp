#pragma once

#include <padic/context.hpp>
#include <padic/rational.hpp>

#include <string>
#include <vector>

namespace padic {

/// Element of Q_p under zealous (interval) precision tracking.
///
/// A nonzero value is stored as p^v * u where u is the canonical unit
/// residue in [1, p^k) coprime to p; the value is known modulo p^{v+k}
/// (k significant base-p digits). A "zero" carries only an absolute
/// precision m and stands for O(p^m); exact zeros use kExactPrec.
///
/// Values are immutable after construction; all operations are pure.
class PadicNumber {
public:
    static constexpr long kExactPrec = 1L << 40;

    PadicNumber() = default;

    long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && abs_ >= kExactPrec; }

    /// Valuation of a nonzero value. For zeros only the lower bound
    /// abs_precision() is known.
    long valuation() const {
        if (zero_) throw DomainError("valuation: value is indistinguishable from 0");
        return val_;
    }
    /// v_p lower bound that is also defined for zeros.
    long lower_valuation() const { return zero_ ? abs_ : val_; }

    /// Known modulo p^{abs_precision()}.
    long abs_precision() const { return zero_ ? abs_ : val_ + prec_; }
    /// Significant digits (0 for zeros).
    int precision() const { return zero_ ? 0 : prec_; }
    const mpz_class& unit() const { return unit_; }

    // --- factories ---------------------------------------------------

    static PadicNumber zero(long p, long abs_prec);
    static PadicNumber exact_zero(long p) { return zero(p, kExactPrec); }
    static PadicNumber one(long p, int prec) { return from_parts(p, 0, 1, prec); }
    /// p^v * unit with `prec` significant digits; normalizes unit.
    static PadicNumber from_parts(long p, long val, mpz_class unit, int prec);
    static PadicNumber from_integer(const mpz_class& n, long p, int prec);
    static PadicNumber from_rational(const mpz_class& num, const mpz_class& den, long p,
                                     int prec);
    static PadicNumber from_rational(const Rational& q, long p, int prec);
    static PadicNumber from_rational(const Rational& q, const PadicContext& ctx) {
        return from_rational(q, ctx.prime, ctx.precision);
    }
    /// Embedding of an exact rational carrying enough digits to be known
    /// modulo p^{abs_prec}.
    static PadicNumber embed_abs(const Rational& q, long p, long abs_prec);

    // --- arithmetic ---------------------------------------------------

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    /// Throws PrecisionError when the divisor is indistinguishable from 0.
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    PadicNumber& operator+=(const PadicNumber& b) { return *this = *this + b; }
    PadicNumber& operator-=(const PadicNumber& b) { return *this = *this - b; }
    PadicNumber& operator*=(const PadicNumber& b) { return *this = *this * b; }
    PadicNumber& operator/=(const PadicNumber& b) { return *this = *this / b; }

    /// Integer power (negative allowed for units/nonzero values).
    PadicNumber pow_int(const mpz_class& e) const;
    /// Multiply by p^t (exact).
    PadicNumber shifted(long t) const;
    /// Forget digits beyond absolute precision abs_prec.
    PadicNumber truncated(long abs_prec) const;

    PadicNumber mul_exact(const Rational& q) const;
    PadicNumber div_exact(const Rational& q) const;
    PadicNumber add_exact(const Rational& q) const;

    // --- comparison ---------------------------------------------------

    /// Equality at the joint precision: the difference is indistinguishable
    /// from zero. For nonzero pairs this is "valuations match and units
    /// agree mod p^{min(k1,k2)}".
    friend bool operator==(const PadicNumber& a, const PadicNumber& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const PadicNumber& a, const PadicNumber& b) { return !(a == b); }

    /// v_p(a-b), using the absolute precision of the difference when it is
    /// indistinguishable from zero. "agree mod p^t" == agreement(a,b) >= t.
    friend long agreement(const PadicNumber& a, const PadicNumber& b) {
        PadicNumber d = a - b;
        return d.is_zero() ? d.abs_precision() : d.valuation();
    }

    /// Congruent modulo p^m.
    bool congruent(const PadicNumber& b, long m) const { return agreement(*this, b) >= m; }

    /// |x|_p as an exponent: |x|_p = p^{-valuation}; nullopt-style flag for 0.
    struct Norm {
        bool zero;
        long exponent;  // |x| = p^{exponent} when !zero
    };
    Norm norm() const {
        if (zero_) return {true, 0};
        return {false, -val_};
    }

    // --- rendering ----------------------------------------------------

    /// Base-p digits of the unit, length precision(), least significant first
    /// (digit of p^{valuation()} first).
    std::vector<long> digits() const;

    /// Canonical expansion "d·p^v + ... + O(p^{v+k})", zero digits omitted.
    std::string to_string() const;

private:
    long p_ = 0;
    bool zero_ = true;
    long val_ = 0;
    int prec_ = 0;
    mpz_class unit_;
    long abs_ = 0;

    void require_same_prime(const PadicNumber& o) const {
        if (p_ != o.p_) throw DomainError("operands live in different Q_p");
    }
};

inline long clamp_prec(long a) {
    return a > PadicNumber::kExactPrec ? PadicNumber::kExactPrec : a;
}

long agreement(const PadicNumber& a, const PadicNumber& b);

std::string superscript(long e);

}  // namespace padic
