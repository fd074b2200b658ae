#include <padic/number.hpp>

#include <algorithm>
#include <sstream>

namespace padic {

PadicNumber PadicNumber::zero(long p, long abs_prec) {
    PadicNumber z;
    z.p_ = p;
    z.zero_ = true;
    z.abs_ = clamp_prec(abs_prec);
    return z;
}

PadicNumber PadicNumber::from_parts(long p, long val, mpz_class unit, int prec) {
    if (prec <= 0) return zero(p, val);
    mpz_class mod = pow_z(p, prec);
    unit %= mod;
    if (unit < 0) unit += mod;
    if (unit == 0) return zero(p, val + prec);
    // strip p-factors the caller may have left in the unit
    long t = padic::valuation(unit, p);
    if (t > 0) {
        if (t >= prec) return zero(p, val + prec);
        unit /= pow_z(p, t);
        val += t;
        prec -= static_cast<int>(t);
        unit %= pow_z(p, prec);
    }
    PadicNumber x;
    x.p_ = p;
    x.zero_ = false;
    x.val_ = val;
    x.prec_ = prec;
    x.unit_ = unit;
    return x;
}

PadicNumber PadicNumber::from_integer(const mpz_class& n, long p, int prec) {
    if (n == 0) return exact_zero(p);
    long v = padic::valuation(n, p);
    return from_parts(p, v, n / pow_z(p, v), prec);
}

PadicNumber PadicNumber::from_rational(const mpz_class& num, const mpz_class& den, long p,
                                       int prec) {
    if (den == 0) throw DomainError("from_rational: zero denominator");
    if (num == 0) return exact_zero(p);
    long vn = padic::valuation(num, p);
    long vd = padic::valuation(den, p);
    mpz_class n = num / pow_z(p, vn);
    mpz_class d = den / pow_z(p, vd);
    mpz_class mod = pow_z(p, prec);
    mpz_class u = (n % mod) * mod_inverse(d % mod, mod);
    return from_parts(p, vn - vd, u, prec);
}

PadicNumber PadicNumber::from_rational(const Rational& q, long p, int prec) {
    return from_rational(mpz_class(q.get_num()), mpz_class(q.get_den()), p, prec);
}

PadicNumber PadicNumber::embed_abs(const Rational& q, long p, long abs_prec) {
    if (q == 0) return exact_zero(p);
    long v = padic::valuation(q, p);
    long k = abs_prec - v;
    if (k <= 0) return zero(p, abs_prec);
    // "effectively exact" absolute precisions are capped to keep moduli sane
    k = std::min<long>(k, 512);
    return from_rational(q, p, static_cast<int>(k));
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    PadicNumber r = *this;
    r.unit_ = pow_z(p_, prec_) - unit_;
    return r;
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    a.require_same_prime(b);
    if (a.zero_ && b.zero_)
        return PadicNumber::zero(a.p_, std::min(a.abs_, b.abs_));
    if (a.zero_) return b.truncated(a.abs_);
    if (b.zero_) return a.truncated(b.abs_);
    long m = std::min(a.val_, b.val_);
    long abs = std::min(a.abs_precision(), b.abs_precision());
    long digits = abs - m;
    if (digits <= 0) return PadicNumber::zero(a.p_, abs);
    mpz_class mod = pow_z(a.p_, digits);
    mpz_class s = a.unit_ * pow_z(a.p_, a.val_ - m) + b.unit_ * pow_z(a.p_, b.val_ - m);
    s %= mod;
    return PadicNumber::from_parts(a.p_, m, s, static_cast<int>(digits));
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    a.require_same_prime(b);
    if (a.zero_ && b.zero_)
        return PadicNumber::zero(a.p_, clamp_prec(a.abs_ + b.abs_));
    if (a.zero_) return PadicNumber::zero(a.p_, clamp_prec(a.abs_ + b.val_));
    if (b.zero_) return PadicNumber::zero(a.p_, clamp_prec(b.abs_ + a.val_));
    int k = std::min(a.prec_, b.prec_);
    mpz_class u = (a.unit_ * b.unit_) % pow_z(a.p_, k);
    return PadicNumber::from_parts(a.p_, a.val_ + b.val_, u, k);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    a.require_same_prime(b);
    if (b.zero_)
        throw PrecisionError("division by a value indistinguishable from 0: insufficient precision");
    if (a.zero_) return PadicNumber::zero(a.p_, clamp_prec(a.abs_ - b.val_));
    int k = std::min(a.prec_, b.prec_);
    mpz_class mod = pow_z(a.p_, k);
    mpz_class u = (a.unit_ % mod) * mod_inverse(b.unit_ % mod, mod);
    return PadicNumber::from_parts(a.p_, a.val_ - b.val_, u, k);
}

PadicNumber PadicNumber::pow_int(const mpz_class& e) const {
    if (e == 0) return one(p_, zero_ ? 1 : prec_);
    if (zero_) {
        if (e < 0) throw PrecisionError("pow_int: negative power of (indistinguishable) zero");
        mpz_class scaled = abs_ * e;
        long a = scaled.fits_slong_p() ? scaled.get_si() : kExactPrec;
        return zero(p_, clamp_prec(a));
    }
    mpz_class mod = pow_z(p_, prec_);
    mpz_class base = unit_;
    mpz_class exp = e;
    if (e < 0) {
        base = mod_inverse(base, mod);
        exp = -e;
    }
    mpz_class u;
    mpz_powm(u.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    mpz_class v = val_ * e;
    if (!v.fits_slong_p()) throw DomainError("pow_int: valuation overflow");
    return from_parts(p_, v.get_si(), u, prec_);
}

PadicNumber PadicNumber::shifted(long t) const {
    PadicNumber r = *this;
    if (zero_)
        r.abs_ = clamp_prec(abs_ + t);
    else
        r.val_ += t;
    return r;
}

PadicNumber PadicNumber::truncated(long abs_prec) const {
    if (zero_) return zero(p_, std::min(abs_, abs_prec));
    if (abs_prec >= abs_precision()) return *this;
    if (abs_prec <= val_) return zero(p_, abs_prec);
    int k = static_cast<int>(abs_prec - val_);
    return from_parts(p_, val_, unit_ % pow_z(p_, k), k);
}

PadicNumber PadicNumber::mul_exact(const Rational& q) const {
    if (q == 0) return zero_ ? exact_zero(p_) : exact_zero(p_);
    if (zero_) {
        return zero(p_, clamp_prec(abs_ + padic::valuation(q, p_)));
    }
    return *this * from_rational(q, p_, prec_);
}

PadicNumber PadicNumber::div_exact(const Rational& q) const {
    if (q == 0) throw DomainError("div_exact: rational zero divisor");
    Rational inv = 1 / q;
    return mul_exact(inv);
}

PadicNumber PadicNumber::add_exact(const Rational& q) const {
    if (q == 0) return *this;
    return *this + embed_abs(q, p_, abs_precision());
}

std::vector<long> PadicNumber::digits() const {
    std::vector<long> d;
    if (zero_) return d;
    mpz_class u = unit_;
    for (int i = 0; i < prec_; ++i) {
        mpz_class digit = u % p_;
        d.push_back(digit.get_si());
        u /= p_;
    }
    return d;
}

std::string superscript(long e) {
    static const char* sup[10] = {"⁰", "¹", "²", "³", "⁴",
                                  "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    if (e < 0) {
        s += "⁻";
        e = -e;
    }
    std::string dec = std::to_string(e);
    for (char c : dec) s += sup[c - '0'];
    return s;
}

namespace {

std::string power_term(long p, long e) {
    if (e == 1) return std::to_string(p);
    return std::to_string(p) + superscript(e);
}

}  // namespace

std::string PadicNumber::to_string() const {
    if (is_exact_zero()) return "0";
    std::ostringstream out;
    if (zero_) {
        out << "O(" << power_term(p_, abs_) << ")";
        return out.str();
    }
    auto d = digits();
    bool first = true;
    for (int i = 0; i < prec_; ++i) {
        long digit = d[i];
        if (digit == 0) continue;
        long e = val_ + i;
        if (!first) out << " + ";
        first = false;
        if (e == 0)
            out << digit;
        else if (digit == 1)
            out << power_term(p_, e);
        else
            out << digit << "·" << power_term(p_, e);
    }
    if (!first) out << " + ";
    out << "O(" << power_term(p_, abs_precision()) << ")";
    return out.str();
}

}  // namespace padic
