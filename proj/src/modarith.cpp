#include "zmgb/modarith.hpp"

#include <algorithm>
#include <stdexcept>

namespace zmgb {

bool is_probable_prime(const Int& x) {
    // 30 Miller-Rabin rounds; deterministic for anything desk-scale.
    return mpz_probab_prime_p(x.get_mpz_t(), 30) != 0;
}

std::vector<PrimePower> factorize(Int x) {
    if (x < 1)
        throw std::invalid_argument("factorize: argument must be positive");

    std::vector<PrimePower> out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e > 0)
            out.push_back(PrimePower{p, e});
        return e > 0;
    };

    strip(2);
    strip(3);
    Int p = 5;
    unsigned step = 2; // alternate +2, +4: candidates 5, 7, 11, 13, ...
    while (x > 1 && p * p <= x) {
        if (is_probable_prime(x))
            break;
        if (strip(p) && x == 1)
            break;
        p += step;
        step = 6 - step;
    }
    if (x > 1)
        out.push_back(PrimePower{x, 1});
    return out;
}

Modulus::Modulus(Int m) : m_(std::move(m)) {
    if (m_ < 2)
        throw std::invalid_argument("modulus must be >= 2");
    factors_ = factorize(m_);
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool divides(const Int& a, const Int& b) {
    if (a == 0)
        return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

Int valuation(Int x, const Int& q) {
    if (x == 0)
        throw std::invalid_argument("valuation of zero");
    if (q < 2)
        throw std::invalid_argument("valuation base must be >= 2");
    Int v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
        ++v;
    }
    return v;
}

Int factorial_valuation(const Int& k, const Int& q) {
    if (!is_probable_prime(q))
        throw std::invalid_argument("non-prime base");
    if (k < 0)
        throw std::invalid_argument("factorial of negative integer");
    Int total = 0;
    Int power = q;
    while (power <= k) {
        total += k / power;
        power *= q;
    }
    return total;
}

namespace {

// v_q(k!) without the primality re-check, for internal callers that
// already hold a prime from a factorization.
Int legendre(const Int& k, const Int& q) {
    Int total = 0;
    Int power = q;
    while (power <= k) {
        total += k / power;
        power *= q;
    }
    return total;
}

} // namespace

Int smarandache(const Modulus& m) {
    // mu(m) = max over prime powers q^e || m of min{k : v_q(k!) >= e}.
    Int result = 2;
    for (const auto& [q, e] : m.factorization()) {
        Int lo = 1, hi = Int(e) * q; // v_q((e*q)!) >= e always
        while (lo < hi) {
            Int mid = (lo + hi) / 2;
            if (legendre(mid, q) >= e)
                hi = mid;
            else
                lo = mid + 1;
        }
        result = std::max(result, lo);
    }
    return result;
}

bool divides_mod(const Int& a, const Int& b, const Modulus& m) {
    // gcd(0, m) = m, so 0 |_m b iff m | b.
    return divides(gcd(a, m.value()), b);
}

bool is_unit(const Int& a, const Modulus& m) {
    return gcd(a, m.value()) == 1;
}

std::vector<Int> divisors(const std::vector<PrimePower>& factors) {
    std::vector<Int> out{1};
    for (const auto& [q, e] : factors) {
        const std::size_t n = out.size();
        Int power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= q;
            for (std::size_t j = 0; j < n; ++j)
                out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> divisors(const Modulus& m) {
    return divisors(m.factorization());
}

} // namespace zmgb
