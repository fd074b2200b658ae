#pragma once

#include <padic/number.hpp>
#include <padic/rational.hpp>

#include <cstdint>

namespace padic::detail {

// Arithmetic mod p^K on machine words; used by the level-sum loops where
// constructing PadicNumbers per residue would dominate the runtime.
struct RingU64 {
    using elem = std::uint64_t;
    std::uint64_t mod;

    static bool fits(long p, int K) {
        long double m = 1;
        for (int i = 0; i < K; ++i) {
            m *= p;
            if (m >= 9.0e18) return false;  // headroom below 2^63 for add
        }
        return true;
    }

    elem from_long(long x) const {
        long r = x % static_cast<long>(mod);
        if (r < 0) r += static_cast<long>(mod);
        return static_cast<elem>(r);
    }
    elem from_mpz(const mpz_class& x) const {
        mpz_class r = x % mpz_class_mod();
        if (r < 0) r += mpz_class_mod();
        return r.get_ui();
    }
    mpz_class mpz_class_mod() const { return mpz_class(static_cast<unsigned long>(mod)); }
    mpz_class to_mpz(elem x) const { return mpz_class(static_cast<unsigned long>(x)); }

    elem add(elem a, elem b) const {
        elem s = a + b;
        return s >= mod ? s - mod : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + mod - b; }
    elem mul(elem a, elem b) const {
        return static_cast<elem>((static_cast<unsigned __int128>(a) * b) % mod);
    }
    elem pow(elem base, std::uint64_t e) const {
        elem r = 1 % mod;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    elem pow(elem base, const mpz_class& e) const {
        if (e < 0) throw DomainError("RingU64::pow: negative exponent");
        if (!e.fits_ulong_p()) throw DomainError("RingU64::pow: exponent too large");
        return pow(base, static_cast<std::uint64_t>(e.get_ui()));
    }
    elem inv(elem a) const {
        // extended Euclid; mod is odd so gcd(a, mod) == 1 for units
        __int128 t = 0, newt = 1;
        __int128 r = static_cast<__int128>(mod), newr = static_cast<__int128>(a);
        while (newr != 0) {
            __int128 q = r / newr;
            __int128 tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (r != 1) throw DomainError("RingU64::inv: not a unit");
        if (t < 0) t += static_cast<__int128>(mod);
        return static_cast<elem>(t);
    }
};

struct RingMpz {
    using elem = mpz_class;
    mpz_class mod;

    elem from_long(long x) const {
        mpz_class r = mpz_class(x) % mod;
        if (r < 0) r += mod;
        return r;
    }
    elem from_mpz(const mpz_class& x) const {
        mpz_class r = x % mod;
        if (r < 0) r += mod;
        return r;
    }
    mpz_class to_mpz(const elem& x) const { return x; }

    elem add(const elem& a, const elem& b) const {
        mpz_class s = a + b;
        if (s >= mod) s -= mod;
        return s;
    }
    elem sub(const elem& a, const elem& b) const {
        mpz_class s = a - b;
        if (s < 0) s += mod;
        return s;
    }
    elem mul(const elem& a, const elem& b) const { return (a * b) % mod; }
    elem pow(const elem& base, const mpz_class& e) const {
        if (e < 0) throw DomainError("RingMpz::pow: negative exponent");
        mpz_class r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        return r;
    }
    elem pow(const elem& base, std::uint64_t e) const { return pow(base, mpz_class(static_cast<unsigned long>(e))); }
    elem inv(const elem& a) const { return mod_inverse(a, mod); }
};

/// omega(m) mod p^K = m^{p^{K-1}} mod p^K for a unit residue m.
template <class Ring>
typename Ring::elem teich_residue(const Ring& ring, const typename Ring::elem& m,
                                  const mpz_class& p_pow_km1) {
    return ring.pow(m, p_pow_km1);
}

}  // namespace padic::detail
