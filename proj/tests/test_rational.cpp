#include <doctest.h>

#include <random>

#include "twisted/rational.hpp"

using namespace twisted;

TEST_CASE("rat reduces and normalizes signs") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat(0, 7) == Rational(0));
    CHECK(rat(0, 7).den() == 1);
    CHECK(rat(3, -6).den() == 2);
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational string form") {
    CHECK(rat(1, 2).str() == "1/2");
    CHECK(rat(-1, 2).str() == "-1/2");
    CHECK(rat(6, 3).str() == "2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("7/3") == rat(7, 3));
    CHECK(Rational::parse("-4") == Rational(-4));
}

TEST_CASE("frac_part") {
    CHECK(frac_part(rat(7, 3)) == rat(1, 3));
    CHECK(frac_part(rat(4, 2)) == Rational(0));
    CHECK(frac_part(rat(9, 4)) == rat(1, 4));
    CHECK_THROWS_AS(frac_part(rat(-1, 2)), std::invalid_argument);
}

TEST_CASE("frac_part properties on random rationals") {
    std::mt19937 rng(20260824);
    std::uniform_int_distribution<long> num(0, 10000), den(1, 500);
    for (int t = 0; t < 500; ++t) {
        Rational x = rat(num(rng), den(rng));
        Rational f = frac_part(x);
        CHECK(f >= Rational(0));
        CHECK(f < Rational(1));
        CHECK((x - f).is_integer());
    }
}

// exhaustive-search oracle kept independent of the extended-Euclid path
static long inverse_by_search(long s, long N) {
    for (long r = 1; r < N; ++r)
        if ((r * s) % N == 1) return r;
    return -1;
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 2) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(2, 3) == 2);
    CHECK_THROWS_AS(mod_inverse(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(mod_inverse(0, 5), std::invalid_argument);

    for (long N = 2; N <= 60; ++N)
        for (long s = 1; s < N; ++s) {
            if (std::gcd(s, N) != 1) continue;
            Int lambda = mod_inverse(Int(s), Int(N));
            CHECK(lambda == inverse_by_search(s, N));
            CHECK((lambda * s) % N == 1);
        }
}

static Int factorial(long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

TEST_CASE("multinomial") {
    CHECK(multinomial(0, {0, 0}) == 1);
    CHECK(multinomial(2, {1, 0, 1}) == 2);
    CHECK(multinomial(4, {2, 2}) == 6);
    CHECK_THROWS_AS(multinomial(3, {1, 1}), std::invalid_argument);

    // direct factorial oracle
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> part(0, 6);
    for (int t = 0; t < 200; ++t) {
        std::vector<long> parts(4);
        long n = 0;
        for (auto& p : parts) {
            p = part(rng);
            n += p;
        }
        Int expected = factorial(n);
        for (long p : parts) expected /= factorial(p);
        CHECK(multinomial(n, parts) == expected);
    }
}

TEST_CASE("arithmetic laws on random rationals") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 200);
    auto rnd = [&] { return rat(num(rng), den(rng)); };
    for (int t = 0; t < 500; ++t) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
    }
}
