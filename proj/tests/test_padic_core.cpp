#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <padic/analytic.hpp>
#include <padic/number.hpp>

#include <random>

using namespace padic;

namespace {

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

PadicNumber random_value(std::mt19937_64& rng, long p, int k) {
    std::uniform_int_distribution<long> vdist(-2, 2);
    return random_unit(rng, p, k).shifted(vdist(rng));
}

PadicNumber random_one_unit(std::mt19937_64& rng, long p, int k) {
    PadicNumber u = random_unit(rng, p, k);
    // force u = 1 mod p
    mpz_class unit = u.unit();
    unit -= unit % p;
    unit += 1;
    return PadicNumber::from_parts(p, 0, unit, k);
}

}  // namespace

TEST_CASE("from_rational examples") {
    PadicNumber a = PadicNumber::from_rational(1, 1, 5, 3);
    CHECK(a.valuation() == 0);
    CHECK(a.unit() == 1);

    // oracle: extended Euclid gives 2 * 63 = 126 = 1 mod 125
    CHECK((2 * 63) % 125 == 1);
    PadicNumber b = PadicNumber::from_rational(1, 2, 5, 3);
    CHECK(b.valuation() == 0);
    CHECK(b.unit() == 63);

    PadicNumber c = PadicNumber::from_rational(1, 10, 5, 3);
    CHECK(c.valuation() == -1);
    CHECK(c.unit() == 63);

    CHECK_THROWS_AS(PadicNumber::from_rational(1, 0, 5, 3), DomainError);
}

TEST_CASE("arithmetic basics and precision propagation") {
    PadicNumber x = PadicNumber::from_rational(7, 3, 5, 4);
    PadicNumber z = x + (-x);
    CHECK(z.is_zero());
    CHECK(z.abs_precision() == x.valuation() + 4);

    PadicNumber half = PadicNumber::from_rational(1, 2, 5, 3);
    PadicNumber two = PadicNumber::from_integer(2, 5, 3);
    CHECK(half * two == PadicNumber::one(5, 3));

    // (1 + 5) + (4 + 3*5) = 6 + 19 = 25 = 5^2 exactly (integer add mod 125)
    PadicNumber s = PadicNumber::from_integer(6, 5, 3) + PadicNumber::from_integer(19, 5, 3);
    CHECK(s.valuation() == 2);
    CHECK(s.unit() == 1);

    // division by an unresolvable zero fails closed
    PadicNumber zero = PadicNumber::zero(5, 3);
    CHECK_THROWS_AS(x / zero, PrecisionError);

    // valuation cancellation loses absolute precision, not more
    PadicNumber u = PadicNumber::from_integer(1 + 5, 5, 3);
    PadicNumber v = -PadicNumber::from_integer(1 + 5 + 25, 5, 3);
    PadicNumber w = u + v;  // -25 known mod 5^3
    CHECK(w.valuation() == 2);
    CHECK(w.abs_precision() == 3);
}

TEST_CASE("unit_decompose examples") {
    PadicNumber one = PadicNumber::one(5, 3);
    UnitDecomposition d1 = unit_decompose(one);
    CHECK(d1.valuation == 0);
    CHECK(d1.teichmuller == one);
    CHECK(d1.one_unit == one);

    // iterate m -> m^5 mod 125: 2 -> 32 -> 57 fixed; 57^4 = 1 mod 125
    PadicNumber two = PadicNumber::from_integer(2, 5, 3);
    UnitDecomposition d2 = unit_decompose(two);
    CHECK(d2.teichmuller.unit() == 57);
    CHECK(d2.teichmuller.pow_int(4) == PadicNumber::one(5, 3));
    CHECK(d2.one_unit.unit() == (2 * mod_inverse(57, 125)) % 125);
    CHECK(d2.teichmuller * d2.one_unit == two);

    PadicNumber six = PadicNumber::from_integer(6, 5, 3);
    UnitDecomposition d6 = unit_decompose(six);
    CHECK(d6.teichmuller == PadicNumber::one(5, 3));
    CHECK(d6.one_unit == six);

    CHECK_THROWS_AS(unit_decompose(PadicNumber::zero(5, 3)), DomainError);
}

TEST_CASE("iwasawa_log examples") {
    CHECK(iwasawa_log(PadicNumber::one(5, 4)).is_zero());

    PadicNumber w2 = teichmuller(PadicNumber::from_integer(2, 5, 4));
    CHECK(iwasawa_log(w2).is_zero());

    PadicNumber six = PadicNumber::from_integer(6, 5, 6);
    PadicNumber lg = iwasawa_log(six);
    CHECK(exp_p(lg) == one_unit_part(six));

    CHECK_THROWS_AS(iwasawa_log(PadicNumber::from_integer(10, 5, 4)), DomainError);
}

TEST_CASE("exp_p examples") {
    PadicNumber z = PadicNumber::zero(5, 4);
    CHECK(exp_p(z) == PadicNumber::one(5, 4));

    PadicNumber onep = PadicNumber::from_integer(6, 5, 5);
    CHECK(exp_p(iwasawa_log(onep)) == onep);

    // oracle: 1 + 5 + 25/2 + 125/6 = 1 + 5 + 25*63 = 81 mod 125
    PadicNumber e5 = exp_p(PadicNumber::from_integer(5, 5, 3));
    CHECK(e5.congruent(PadicNumber::from_integer(81, 5, 3), 3));

    CHECK_THROWS_AS(exp_p(PadicNumber::from_integer(2, 5, 4)), DomainError);
}

TEST_CASE("one_unit_power examples") {
    PadicNumber u = PadicNumber::from_integer(6, 5, 4);
    PadicNumber zero = PadicNumber::from_integer(0, 5, 4);
    PadicNumber one = PadicNumber::one(5, 4);

    CHECK(one_unit_power(u, zero, PowerMethod::exp_log) == one);
    CHECK(one_unit_power(u, one, PowerMethod::binomial) == u);

    PadicNumber sq = one_unit_power(u, PadicNumber::from_integer(2, 5, 4), PowerMethod::exp_log);
    CHECK(sq == PadicNumber::from_integer(36, 5, 4));
    CHECK(one_unit_power_int(u, 2) == PadicNumber::from_integer(36, 5, 4));

    CHECK_THROWS_AS(one_unit_power(PadicNumber::from_integer(2, 5, 4), one, PowerMethod::exp_log),
                    DomainError);
    CHECK_THROWS_AS(
        one_unit_power(u, PadicNumber::from_rational(1, 5, 5, 4), PowerMethod::exp_log),
        DomainError);
}

TEST_CASE("padic_binom examples") {
    for (unsigned long m : {0ul, 1ul, 3ul, 6ul}) {
        PadicNumber mm = PadicNumber::from_integer(static_cast<long>(m), 7, 5);
        CHECK(padic_binom(mm, m) == PadicNumber::one(7, 5));
    }
    PadicNumber minus1 = PadicNumber::from_integer(-1, 7, 5);
    for (unsigned long n : {1ul, 2ul, 5ul}) {
        PadicNumber expect = PadicNumber::from_integer(n % 2 == 0 ? 1 : -1, 7, 5);
        CHECK(padic_binom(minus1, n) == expect);
    }
    // binom(1/2, 2) = (1/2)(-1/2)/2 = -1/8
    PadicNumber half = PadicNumber::from_rational(1, 2, 5, 6);
    CHECK(padic_binom(half, 2) == PadicNumber::from_rational(-1, 8, 5, 6));
}

TEST_CASE("to_digits formatting") {
    CHECK(PadicNumber::from_rational(1, 2, 5, 3).to_string() ==
          "3 + 2·5 + 2·5² + O(5³)");
    CHECK(PadicNumber::zero(5, 4).to_string() == "O(5⁴)");
    CHECK(PadicNumber::exact_zero(5).to_string() == "0");
    CHECK(PadicNumber::from_integer(1, 5, 2).to_string() == "1 + O(5²)");
    CHECK(PadicNumber::from_integer(25, 5, 1).to_string() == "5² + O(5³)");
    // negative valuation renders with a superscript minus
    CHECK(PadicNumber::from_rational(1, 5, 5, 1).to_string() == "5⁻¹ + O(5⁰)");
}

TEST_CASE("json-ready digits round-trip") {
    PadicNumber x = PadicNumber::from_rational(22, 7, 5, 6);
    auto d = x.digits();
    mpz_class unit = 0, pw = 1;
    for (long digit : d) {
        unit += digit * pw;
        pw *= 5;
    }
    CHECK(PadicNumber::from_parts(5, x.valuation(), unit, x.precision()) == x);
}

TEST_CASE("properties: ultrametric and decomposition") {
    for (long p : {3L, 5L, 7L}) {
        std::mt19937_64 rng(42 + static_cast<unsigned long>(p));
        for (int iter = 0; iter < 120; ++iter) {
            PadicNumber x = random_value(rng, p, 6);
            PadicNumber y = random_value(rng, p, 6);

            // ultrametric |x+y| <= max(|x|,|y|), equality on distinct norms
            PadicNumber s = x + y;
            long vs = s.lower_valuation();
            CHECK(vs >= std::min(x.valuation(), y.valuation()));
            if (x.valuation() != y.valuation())
                CHECK(s.valuation() == std::min(x.valuation(), y.valuation()));

            PadicNumber ux = random_unit(rng, p, 6);
            PadicNumber uy = random_unit(rng, p, 6);
            UnitDecomposition dx = unit_decompose(ux);
            UnitDecomposition dy = unit_decompose(uy);

            // omega(x)^{p-1} = 1, omega(x) = x mod p
            CHECK(dx.teichmuller.pow_int(p - 1) == PadicNumber::one(p, 6));
            CHECK(dx.teichmuller.congruent(ux, 1));

            // multiplicativity of both parts
            UnitDecomposition dxy = unit_decompose(ux * uy);
            CHECK(dxy.teichmuller == dx.teichmuller * dy.teichmuller);
            CHECK(dxy.one_unit == dx.one_unit * dy.one_unit);

            // log is additive on units; exp/log round-trip
            CHECK(iwasawa_log(ux * uy) == iwasawa_log(ux) + iwasawa_log(uy));
            CHECK(exp_p(iwasawa_log(ux)) == dx.one_unit);
        }
    }
}

TEST_CASE("properties: one-unit powers") {
    for (long p : {3L, 5L, 7L}) {
        std::mt19937_64 rng(1000 + static_cast<unsigned long>(p));
        for (int iter = 0; iter < 100; ++iter) {
            PadicNumber u = random_one_unit(rng, p, 6);
            PadicNumber s = random_unit(rng, p, 6).shifted(iter % 3);  // v_p(s) in {0,1,2}
            PadicNumber t = random_unit(rng, p, 6);

            PadicNumber via_exp = one_unit_power(u, s, PowerMethod::exp_log);
            PadicNumber via_binom = one_unit_power(u, s, PowerMethod::binomial);
            CHECK(via_exp == via_binom);

            // u^{s+t} = u^s u^t
            PadicNumber lhs = one_unit_power(u, s + t, PowerMethod::exp_log);
            PadicNumber rhs = via_exp * one_unit_power(u, t, PowerMethod::binomial);
            CHECK(lhs == rhs);

            // integer exponents match the group-theoretic route
            long e = static_cast<long>(iter % 17) - 8;
            PadicNumber by_series =
                one_unit_power(u, PadicNumber::from_integer(e, p, 6), PowerMethod::binomial);
            CHECK(by_series == one_unit_power_int(u, e));
            CHECK(one_unit_power_int(u, e) == u.pow_int(e));
        }
    }
}

TEST_CASE("properties: from_rational respects arithmetic") {
    for (long p : {3L, 5L, 7L}) {
        std::mt19937_64 rng(77 + static_cast<unsigned long>(p));
        std::uniform_int_distribution<long> num(-50, 50);
        std::uniform_int_distribution<long> den(1, 50);
        for (int iter = 0; iter < 100; ++iter) {
            Rational a(num(rng), den(rng));
            Rational b(num(rng), den(rng));
            a.canonicalize();
            b.canonicalize();
            PadicNumber pa = PadicNumber::from_rational(a, p, 6);
            PadicNumber pb = PadicNumber::from_rational(b, p, 6);
            CHECK(PadicNumber::from_rational(a + b, p, 6) == pa + pb);
            CHECK(PadicNumber::from_rational(a * b, p, 6) == pa * pb);
            if (b != 0) CHECK(PadicNumber::from_rational(a / b, p, 6) == pa / pb);
        }
    }
}
