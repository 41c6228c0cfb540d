#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "test_util.hpp"
#include "zmgb/normalform.hpp"
#include "zmgb/vanishing.hpp"

using namespace zmgb;
using testutil::next_point;
using testutil::random_poly;
using testutil::value_table;

namespace {

Int pow_int(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// All polynomials over Z/m in one variable with degree <= deg.
template <typename Fn>
void for_each_poly(const Modulus& m, std::uint32_t deg, Fn&& fn) {
    std::vector<std::uint32_t> coeffs(deg + 1, 0);
    do {
        Polynomial f(m, 1);
        for (std::uint32_t d = 0; d <= deg; ++d)
            f = f + Polynomial::monomial(m, 1, coeffs[d], ExponentVector{d});
        fn(f);
    } while (next_point(coeffs, static_cast<std::uint32_t>(m.value().get_ui())));
}

} // namespace

TEST_CASE("coefficient bounds") {
    const Modulus m4(4);
    CHECK(coefficient_bound(m4, ExponentVector{0}) == 4);
    CHECK(coefficient_bound(m4, ExponentVector{1}) == 4);
    CHECK(coefficient_bound(m4, ExponentVector{2}) == 2);
    CHECK(coefficient_bound(m4, ExponentVector{3}) == 2); // gcd(4, 6) = 2
    CHECK(coefficient_bound(m4, ExponentVector{4}) == 1); // gcd(4, 24) = 4

    CHECK(is_reduced(Polynomial::monomial(m4, 1, 2, ExponentVector{1})));
    CHECK_FALSE(is_reduced(Polynomial::monomial(m4, 1, 2, ExponentVector{2})));
    CHECK(is_reduced(Polynomial(m4, 1)));
}

TEST_CASE("reduction examples") {
    const Modulus m2(2);
    const Polynomial f2 = Polynomial::monomial(m2, 1, 1, ExponentVector{2}) +
                          Polynomial::variable(m2, 1, 0);
    CHECK(reduced_nf(f2).is_zero()); // x^2 + x vanishes on {0, 1}

    CHECK(reduced_nf(Polynomial(m2, 1)).is_zero());

    const Modulus m4(4);
    const Polynomial f4 = Polynomial::monomial(m4, 1, 2, ExponentVector{2});
    CHECK(reduced_nf(f4) == Polynomial::monomial(m4, 1, 2, ExponentVector{1}));

    // 6/gcd(6, 4!) = 1 forces the x^4 coefficient to zero
    const Modulus m6(6);
    const Polynomial f6 = Polynomial::monomial(m6, 1, 1, ExponentVector{4});
    CHECK(reduced_nf(f6).coefficient(ExponentVector{4}) == 0);
}

TEST_CASE("reduction is sound, bounded, canonical and idempotent") {
    std::mt19937 rng(37);
    for (unsigned long mv : {2, 4, 6, 8, 12}) {
        const Modulus m(mv);
        for (std::size_t nvars = 1; nvars <= 2; ++nvars) {
            for (int trial = 0; trial < 50; ++trial) {
                const Polynomial f = random_poly(rng, m, nvars, 5, 5);
                const Polynomial h = reduced_nf(f);
                CHECK(is_vanishing(f - h));
                CHECK(is_reduced(h));
                CHECK(reduced_nf(f, MonomialOrder::deglex) == h);
                CHECK(reduced_nf(f, MonomialOrder::degrevlex) == h);
                CHECK(reduced_nf(h) == h);
            }
        }
    }
}

TEST_CASE("reduction separates exactly the value-table classes for m = 4") {
    const Modulus m4(4);
    std::map<std::vector<Int>, Polynomial> nf_by_table;
    for_each_poly(m4, 4, [&](const Polynomial& f) {
        const Polynomial h = reduced_nf(f);
        CHECK(is_reduced(h));
        const std::vector<Int> table = value_table(f);
        CHECK(table == value_table(h));
        auto [it, fresh] = nf_by_table.emplace(table, h);
        if (!fresh)
            CHECK(it->second == h); // same function, same normal form
    });
    // distinct normal forms count the polynomial functions
    CHECK(nf_by_table.size() == 64);
}

TEST_CASE("function counting, closed formula vs value tables") {
    CHECK(count_polynomial_functions(Modulus(4), 1) == 64);  // 4 * 4 * 2 * 2
    CHECK(count_polynomial_functions(Modulus(3), 1) == 27);  // field: all functions
    CHECK(count_polynomial_functions(Modulus(6), 1) == 108); // 6 * 6 * 3

    // oracle: enumerate every reduced representative and count distinct tables
    for (unsigned long mv : {2, 3, 4, 6, 8}) {
        const Modulus m(mv);
        const std::uint32_t mu = static_cast<std::uint32_t>(smarandache(m).get_ui());
        std::vector<unsigned long> bounds;
        for (std::uint32_t d = 0; d < mu; ++d)
            bounds.push_back(coefficient_bound(m, ExponentVector{d}).get_ui());

        std::map<std::vector<Int>, Polynomial> by_table;
        std::vector<std::uint32_t> coeffs(mu, 0);
        Int representatives = 0;
        for (;;) {
            Polynomial f(m, 1);
            for (std::uint32_t d = 0; d < mu; ++d)
                f = f + Polynomial::monomial(m, 1, coeffs[d], ExponentVector{d});
            ++representatives;
            by_table.emplace(value_table(f), f);
            // mixed-radix odometer over the per-degree bounds
            std::size_t i = 0;
            while (i < coeffs.size() && ++coeffs[i] >= bounds[i])
                coeffs[i++] = 0;
            if (i == coeffs.size())
                break;
        }
        const Int n = count_polynomial_functions(m, 1);
        CHECK(n == representatives);        // every representative is distinct
        CHECK(n == Int(by_table.size()));   // and realizes a distinct function
    }
}

TEST_CASE("counting at word width") {
    // m = 2^32: product of 2^32 / gcd(2^32, alpha!) over alpha in [0, 34)
    const Int n32 = count_polynomial_functions(Modulus(pow_int(2, 32)), 1);
    CHECK(n32 == pow_int(2, 610));
    CHECK(n32.get_str().size() == 184);

    CHECK(count_polynomial_functions(Modulus(pow_int(2, 8)), 1) == pow_int(2, 50));
    CHECK(pow_int(2, 50).get_str().size() == 16);
    CHECK(count_polynomial_functions(Modulus(pow_int(2, 16)), 1) == pow_int(2, 170));
    CHECK(pow_int(2, 170).get_str().size() == 52);
}

TEST_CASE("total function count factors through the polynomial ones") {
    // m^(m^n) = N * product of gcd(m, alpha!) over the full box {0..m-1}^n
    for (unsigned long mv = 2; mv <= 6; ++mv) {
        const Modulus m(mv);
        Int gcd_product = 1;
        for (std::uint32_t d = 0; d < mv; ++d)
            gcd_product *= gcd_with_factorial(m, ExponentVector{d});
        const Int total = pow_int(mv, mv);
        CHECK(total == count_polynomial_functions(m, 1) * gcd_product);
    }
}

TEST_CASE("functional equality") {
    const Modulus m4(4);
    const Polynomial f = Polynomial::monomial(m4, 1, 2, ExponentVector{2});
    const Polynomial g = Polynomial::monomial(m4, 1, 2, ExponentVector{1});
    CHECK(functionally_equal(f, g));
    CHECK(functionally_equal(f, f));

    const Polynomial x = Polynomial::variable(m4, 1, 0);
    CHECK_FALSE(functionally_equal(x, x + Polynomial::constant(m4, 1, 1)));

    // cross-check against exhaustive evaluation
    std::mt19937 rng(41);
    for (unsigned long mv : {2, 3, 6, 8}) {
        const Modulus m(mv);
        for (int trial = 0; trial < 60; ++trial) {
            const Polynomial a = random_poly(rng, m, 1, 5, 4);
            const Polynomial b = random_poly(rng, m, 1, 5, 4);
            CHECK(functionally_equal(a, b) == (value_table(a) == value_table(b)));
        }
    }
}
