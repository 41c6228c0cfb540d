#include "zmgb/recursive.hpp"

#include <algorithm>
#include <stdexcept>

namespace zmgb {

namespace {

Int prime_valuation_of_factorials(const ExponentVector& alpha, const Int& q) {
    Int total = 0, power, k;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        k = alpha[i];
        power = q;
        while (power <= k) {
            total += k / power;
            power *= q;
        }
    }
    return total;
}

Int prime_valuation(Int x, const Int& q) {
    Int v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
        ++v;
    }
    return v;
}

bool next_box_point(std::vector<std::uint32_t>& p, std::uint32_t side) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (++p[i] < side)
            return true;
        p[i] = 0;
    }
    return false;
}

} // namespace

std::vector<ExponentVector> candidate_B(const ExponentVector& alpha, const Int& a,
                                        const Int& q) {
    if (!is_probable_prime(q))
        throw std::invalid_argument("non-prime base");
    if (a < 1)
        throw std::invalid_argument("coefficient must be positive");
    if (!q.fits_uint_p() || q.get_ui() >= 100'000'000)
        throw std::runtime_error("enlargement box too large for this prime");

    const Int target = prime_valuation(a, q) + prime_valuation_of_factorials(alpha, q) + 1;
    const std::uint32_t side = static_cast<std::uint32_t>(q.get_ui()) + 1;
    const std::size_t n = alpha.size();

    std::vector<ExponentVector> out;
    std::vector<std::uint32_t> p(n, 0);
    while (next_box_point(p, side)) { // skips the zero vector
        ExponentVector beta{std::vector<std::uint32_t>(p)};
        if (prime_valuation_of_factorials(alpha + beta, q) >= target)
            out.push_back(std::move(beta));
    }
    return out;
}

GroebnerBasis rec_comp(const Modulus& M, std::size_t nvars,
                       std::vector<BasisEntry>* rejected) {
    if (nvars == 0)
        throw std::invalid_argument("polynomial ring needs at least one variable");

    // deterministic choice: always peel the largest prime factor
    const Int q = std::max_element(M.factorization().begin(), M.factorization().end(),
                                   [](const PrimePower& x, const PrimePower& y) {
                                       return x.prime < y.prime;
                                   })
                      ->prime;

    if (M.value() == q) {
        if (!q.fits_uint_p() || q.get_ui() >= 100'000'000)
            throw std::runtime_error("prime too large for explicit exponents");
        std::vector<BasisEntry> prime_entries;
        for (std::size_t i = 0; i < nvars; ++i)
            prime_entries.push_back(
                BasisEntry{ExponentVector::unit(nvars, i, static_cast<std::uint32_t>(q.get_ui())),
                           Int(1)});
        return GroebnerBasis(M, nvars, std::move(prime_entries));
    }

    // Inner levels filter against their own modulus; only the final lift's
    // rejections are relative to M, so only those are reported.
    const GroebnerBasis lower = rec_comp(Modulus(M.value() / q), nvars, nullptr);

    std::vector<BasisEntry> candidates;
    for (const BasisEntry& e : lower.entries()) {
        if (in_S(M, e.alpha, e.a)) {
            candidates.push_back(e);
            continue;
        }
        candidates.push_back(BasisEntry{e.alpha, e.a * q});
        for (const ExponentVector& beta : candidate_B(e.alpha, e.a, q)) {
            ExponentVector enlarged = e.alpha + beta;
            Int b = M.value() / gcd_with_factorial(M, enlarged);
            candidates.push_back(BasisEntry{std::move(enlarged), std::move(b)});
        }
    }

    // The lift over-generates; only pairs passing the S_M conditions stay.
    std::vector<BasisEntry> kept;
    for (BasisEntry& e : candidates) {
        if (in_S(M, e.alpha, e.a))
            kept.push_back(std::move(e));
        else if (rejected)
            rejected->push_back(std::move(e));
    }
    return GroebnerBasis(M, nvars, std::move(kept));
}

} // namespace zmgb
