#include <doctest.h>

#include <algorithm>
#include <vector>

#include "zmgb/recursive.hpp"

using namespace zmgb;

TEST_CASE("exponent enlargements carry at least one more factor of q") {
    // v_3((3,3)!) = 2 = v_3(6 * (2,2)!) + 1
    const auto b1 = candidate_B(ExponentVector{2, 2}, 6, 3);
    CHECK(std::find(b1.begin(), b1.end(), ExponentVector{1, 1}) != b1.end());

    // v_2(2!) = 1 > v_2(1 * 0!) = 0
    const auto b2 = candidate_B(ExponentVector{0}, 1, 2);
    CHECK(std::find(b2.begin(), b2.end(), ExponentVector{2}) != b2.end());

    // v_5(4!) = 0
    const auto b3 = candidate_B(ExponentVector{3}, 2, 5);
    CHECK(std::find(b3.begin(), b3.end(), ExponentVector{1}) == b3.end());

    CHECK_THROWS_AS(candidate_B(ExponentVector{1}, 1, 4), std::invalid_argument);
}

TEST_CASE("enlargement candidates satisfy the defining condition, and only they") {
    for (unsigned long q : {2, 3, 5}) {
        const ExponentVector alpha{2, 1};
        const Int a = 6;
        const auto found = candidate_B(alpha, a, q);
        std::vector<std::uint32_t> p(2, 0);
        const std::uint32_t side = static_cast<std::uint32_t>(q) + 1;
        for (;;) {
            std::size_t i = 0;
            while (i < p.size() && ++p[i] >= side)
                p[i++] = 0;
            if (i == p.size())
                break;
            const ExponentVector beta{std::vector<std::uint32_t>(p)};
            Int lhs = 0, rhs = valuation(a, q) + 1;
            for (std::size_t j = 0; j < 2; ++j) {
                lhs += factorial_valuation(alpha[j] + beta[j], q);
                rhs += factorial_valuation(alpha[j], q);
            }
            const bool expected = lhs >= rhs;
            CHECK((std::find(found.begin(), found.end(), beta) != found.end()) == expected);
        }
    }
}

TEST_CASE("recursive construction reproduces the direct one") {
    for (unsigned long mv : {4, 6, 8, 9, 12, 16, 18, 24, 30, 36, 72})
        for (std::size_t nvars = 1; nvars <= 2; ++nvars) {
            const Modulus m(mv);
            CHECK(rec_comp(m, nvars) == build_basis(m, nvars));
        }
}

TEST_CASE("recursive construction, known memberships") {
    CHECK(rec_comp(Modulus(6), 1) == build_basis(Modulus(6), 1));
    CHECK(rec_comp(Modulus(12), 2).contains(BasisEntry{ExponentVector{3, 0}, 2}));
    CHECK(rec_comp(Modulus(72), 2).contains(BasisEntry{ExponentVector{3, 3}, 2}));
}

TEST_CASE("prime base case") {
    for (unsigned long q : {2, 3, 5, 7})
        for (std::size_t nvars = 1; nvars <= 3; ++nvars) {
            const GroebnerBasis g = rec_comp(Modulus(q), nvars);
            REQUIRE(g.size() == nvars);
            for (std::size_t i = 0; i < nvars; ++i)
                CHECK(g.contains(BasisEntry{
                    ExponentVector::unit(nvars, i, static_cast<std::uint32_t>(q)), 1}));
        }
}

TEST_CASE("deterministic output") {
    for (unsigned long mv : {12, 30, 72})
        CHECK(rec_comp(Modulus(mv), 2) == rec_comp(Modulus(mv), 2));
}

TEST_CASE("every emitted entry passes membership on its own") {
    for (unsigned long mv : {8, 12, 30, 36}) {
        const GroebnerBasis g = rec_comp(Modulus(mv), 2);
        for (const BasisEntry& e : g.entries())
            CHECK(in_S(Modulus(mv), e.alpha, e.a));
    }
}

TEST_CASE("the lift over-generates and the filter reports the rejects") {
    std::vector<BasisEntry> rejected;
    const GroebnerBasis g = rec_comp(Modulus(6), 1, &rejected);
    CHECK(g == build_basis(Modulus(6), 1));
    CHECK(!rejected.empty());
    for (const BasisEntry& e : rejected) {
        CHECK_FALSE(in_S(Modulus(6), e.alpha, e.a));
        CHECK_FALSE(g.contains(e));
    }
}
