#include <padic/bernoulli.hpp>

#include <mutex>
#include <vector>

namespace padic {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0, B_1, ...

void extend_bernoulli(unsigned long n) {
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    while (g_bernoulli.size() <= n) {
        unsigned long m = g_bernoulli.size();  // computing B_m
        Rational acc(0);
        for (unsigned long j = 0; j < m; ++j)
            acc += Rational(binomial_z(m + 1, j)) * g_bernoulli[j];
        Rational b = -acc / Rational(static_cast<long>(m) + 1);
        b.canonicalize();
        g_bernoulli.push_back(b);
    }
}

}  // namespace

Rational bernoulli_number(unsigned long n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(n);
    return g_bernoulli[n];
}

Rational bernoulli_polynomial(unsigned long n, const Rational& x) {
    Rational acc(0);
    Rational xpow(1);
    // sum over j descending in the power of x: C(n,j) B_j x^{n-j}
    std::vector<Rational> b(n + 1);
    {
        std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
        extend_bernoulli(n);
        for (unsigned long j = 0; j <= n; ++j) b[j] = g_bernoulli[j];
    }
    for (long j = static_cast<long>(n); j >= 0; --j) {
        acc += Rational(binomial_z(n, j)) * b[j] * xpow;
        xpow *= x;
    }
    acc.canonicalize();
    return acc;
}

PadicNumber gen_bernoulli(unsigned long n, long k, const PadicContext& ctx, int prec) {
    long p = ctx.prime;
    long kk = ((k % (p - 1)) + (p - 1)) % (p - 1);
    if (kk == 0)
        throw DomainError("gen_bernoulli: k = 0 mod (p-1); use unit_moment instead");
    // working digits cover the p^{n-1} shift and the p^{-n} in B_n(a/p)
    int work = prec + static_cast<int>(n) + 2;
    PadicNumber sum = PadicNumber::zero(p, work);
    for (long a = 1; a < p; ++a) {
        PadicNumber w = teichmuller(PadicNumber::from_integer(a, p, work));
        PadicNumber chi = w.pow_int(-kk);
        Rational bn = bernoulli_polynomial(n, Rational(a, p));
        sum += chi * PadicNumber::embed_abs(bn, p, work);
    }
    PadicNumber r = sum.shifted(static_cast<long>(n) - 1).truncated(prec);
    return r;
}

PadicNumber unit_moment(unsigned long j, const PadicContext& ctx, int prec) {
    long p = ctx.prime;
    if (j == 0) {
        return PadicNumber::embed_abs(Rational(p - 1, p), p, prec);
    }
    if (j % static_cast<unsigned long>(p - 1) == 0) {
        Rational m = (Rational(1) - Rational(pow_z(p, j - 1))) * bernoulli_number(j);
        m.canonicalize();
        return PadicNumber::embed_abs(m, p, prec);
    }
    return gen_bernoulli(j, static_cast<long>(j), ctx, prec);
}

PadicNumber gamma_p_int(const mpz_class& n, const PadicContext& ctx, int prec) {
    if (n < 0) throw DomainError("gamma_p_int: negative argument");
    long p = ctx.prime;
    mpz_class mod = pow_z(p, prec);
    mpz_class acc = 1;
    for (mpz_class m = 1; m < n; ++m) {
        if (m % p == 0) continue;
        acc = (acc * m) % mod;
    }
    if (mpz_odd_p(mpz_class(n).get_mpz_t())) acc = mod - (acc % mod);
    return PadicNumber::from_parts(p, 0, acc, prec);
}

}  // namespace padic
