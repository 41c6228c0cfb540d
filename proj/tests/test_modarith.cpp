#include <doctest.h>

#include <stdexcept>

#include "zmgb/modarith.hpp"

using namespace zmgb;

namespace {

// Independent oracle: exponent of q in x, by repeated exact division.
Int brute_valuation(Int x, const Int& q) {
    Int v = 0;
    while (x % q == 0) {
        x /= q;
        ++v;
    }
    return v;
}

Int factorial(unsigned long k) {
    Int f = 1;
    for (unsigned long i = 2; i <= k; ++i)
        f *= i;
    return f;
}

} // namespace

TEST_CASE("gcd on small pairs") {
    CHECK(gcd(12, 8) == 4);
    CHECK(gcd(7, 1) == 1);
    CHECK(gcd(24, 36) == 12);

    // oracle for (24, 36): largest d dividing both
    Int best = 0;
    for (Int d = 1; d <= 24; ++d)
        if (24 % d == 0 && 36 % d == 0)
            best = d;
    CHECK(gcd(24, 36) == best);

    CHECK(gcd(5, 0) == 5);
    CHECK(gcd(0, 5) == 5);
    CHECK(gcd(0, 0) == 0);
}

TEST_CASE("integer divisibility") {
    CHECK(divides(3, 12));
    CHECK_FALSE(divides(5, 12));
    CHECK(divides(1, 7));
    CHECK(divides(0, 0));
    CHECK_FALSE(divides(0, 3));
}

TEST_CASE("factorial_valuation against brute-force factorization of k!") {
    CHECK(factorial_valuation(4, 2) == 3); // 4! = 24 = 2^3 * 3
    CHECK(factorial_valuation(0, 2) == 0);
    CHECK(factorial_valuation(10, 2) == 8);

    for (unsigned long k = 0; k <= 12; ++k)
        for (unsigned long q : {2, 3, 5, 7, 11})
            CHECK(factorial_valuation(k, q) == brute_valuation(factorial(k), q));

    CHECK_THROWS_AS(factorial_valuation(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(factorial_valuation(5, 6), std::invalid_argument);
}

TEST_CASE("valuation") {
    CHECK(valuation(24, 2) == 3);
    CHECK(valuation(24, 3) == 1);
    CHECK(valuation(7, 2) == 0);
    for (Int x = 1; x <= 200; ++x)
        for (Int q : {2, 3, 5})
            CHECK(valuation(x, q) == brute_valuation(x, q));
}

TEST_CASE("smarandache on small moduli") {
    CHECK(smarandache(Modulus(6)) == 3);  // 6 does not divide 2! = 2, divides 3! = 6
    CHECK(smarandache(Modulus(2)) == 2);
    CHECK(smarandache(Modulus(8)) == 4);  // v_2(3!) = 1 < 3, v_2(4!) = 3
    CHECK(smarandache(Modulus(4)) == 4);

    // m | mu! and m does not divide (mu-1)!
    for (unsigned long m = 2; m <= 50; ++m) {
        const Int mu = smarandache(Modulus(m));
        CHECK(divides(m, factorial(mu.get_ui())));
        CHECK_FALSE(divides(m, factorial(mu.get_ui() - 1)));
    }
}

TEST_CASE("smarandache on word-width powers of two") {
    const Int two = 2;
    Int m;
    mpz_pow_ui(m.get_mpz_t(), two.get_mpz_t(), 32);
    CHECK(smarandache(Modulus(m)) == 34);
    mpz_pow_ui(m.get_mpz_t(), two.get_mpz_t(), 8);
    CHECK(smarandache(Modulus(m)) == 10);
    mpz_pow_ui(m.get_mpz_t(), two.get_mpz_t(), 16);
    CHECK(smarandache(Modulus(m)) == 18);
}

TEST_CASE("divides_mod examples") {
    const Modulus m6(6);
    CHECK(divides_mod(2, 4, m6));       // k = 2
    CHECK(divides_mod(4, 2, m6));       // 4 * 2 = 8 = 2 mod 6
    CHECK_FALSE(divides_mod(3, 2, m6)); // 3k mod 6 is always 0 or 3
}

TEST_CASE("divides_mod equals the existential definition, exhaustively") {
    for (unsigned long mv = 2; mv <= 30; ++mv) {
        const Modulus m(mv);
        for (unsigned long a = 0; a < mv; ++a)
            for (unsigned long b = 0; b < mv; ++b) {
                bool witness = false;
                for (unsigned long k = 0; k < mv && !witness; ++k)
                    witness = (a * k) % mv == b;
                CHECK(divides_mod(a, b, m) == witness);
            }
    }
}

TEST_CASE("divides_mod is reflexive and transitive") {
    for (unsigned long mv = 2; mv <= 30; ++mv) {
        const Modulus m(mv);
        for (unsigned long a = 0; a < mv; ++a)
            CHECK(divides_mod(a, a, m));
        for (unsigned long a = 0; a < mv; ++a)
            for (unsigned long b = 0; b < mv; ++b) {
                if (!divides_mod(a, b, m))
                    continue;
                for (unsigned long c = 0; c < mv; ++c)
                    if (divides_mod(b, c, m))
                        CHECK(divides_mod(a, c, m));
            }
    }
}

TEST_CASE("modulus factorization") {
    const Modulus m(12);
    REQUIRE(m.factorization().size() == 2);
    CHECK(m.factorization()[0] == PrimePower{2, 2});
    CHECK(m.factorization()[1] == PrimePower{3, 1});

    // factorization multiplies back to m and lists only primes
    for (unsigned long mv = 2; mv <= 200; ++mv) {
        Int product = 1;
        const Modulus mod(mv);
        for (const PrimePower& pp : mod.factorization()) {
            CHECK(is_probable_prime(pp.prime));
            for (unsigned e = 0; e < pp.exponent; ++e)
                product *= pp.prime;
        }
        CHECK(product == mv);
    }

    const Int two = 2;
    Int big;
    mpz_pow_ui(big.get_mpz_t(), two.get_mpz_t(), 32);
    const Modulus m32(big);
    REQUIRE(m32.factorization().size() == 1);
    CHECK(m32.factorization()[0] == PrimePower{2, 32});

    CHECK_THROWS_AS(Modulus(Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(Int(0)), std::invalid_argument);
}

TEST_CASE("divisors are ascending and complete") {
    const std::vector<Int> d12 = divisors(Modulus(12));
    CHECK(d12 == std::vector<Int>{1, 2, 3, 4, 6, 12});

    for (unsigned long mv = 2; mv <= 60; ++mv) {
        std::vector<Int> expected;
        for (unsigned long d = 1; d <= mv; ++d)
            if (mv % d == 0)
                expected.push_back(d);
        CHECK(divisors(Modulus(mv)) == expected);
    }
}

TEST_CASE("units of Z/m") {
    const Modulus m(12);
    std::vector<Int> units;
    for (unsigned long u = 0; u < 12; ++u)
        if (is_unit(u, m))
            units.push_back(u);
    CHECK(units == std::vector<Int>{1, 5, 7, 11});
}
