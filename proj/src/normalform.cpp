#include "zmgb/normalform.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace zmgb {

Int coefficient_bound(const Modulus& m, const ExponentVector& alpha) {
    return m.value() / gcd_with_factorial(m, alpha);
}

Polynomial reduced_nf(const Polynomial& f, MonomialOrder order) {
    const Modulus& m = f.modulus();
    const std::size_t n = f.nvars();
    Polynomial work = f;
    Polynomial h(m, n);
    // p_{alpha,c} recurs across reduction steps; c is determined by alpha.
    std::map<ExponentVector, Polynomial, LexDescending> expanded;

    while (!work.is_zero()) {
        const Term lt = work.leading_term(order);
        const Int c = coefficient_bound(m, lt.exponents);
        const Int k = lt.coeff / c;
        const Int r = lt.coeff - k * c;

        if (r != 0)
            h = h + Polynomial::monomial(m, n, r, lt.exponents);

        if (k != 0) {
            auto it = expanded.find(lt.exponents);
            if (it == expanded.end())
                it = expanded.emplace(lt.exponents, build_p(lt.exponents, c, m)).first;
            work = work - it->second.scaled(k);
        }
        work = work - Polynomial::monomial(m, n, r, lt.exponents);
    }
    return h;
}

bool is_reduced(const Polynomial& f) {
    for (const auto& [alpha, c] : f.terms())
        if (c >= coefficient_bound(f.modulus(), alpha))
            return false;
    return true;
}

Int count_polynomial_functions(const Modulus& m, std::size_t nvars) {
    if (nvars == 0)
        throw std::invalid_argument("polynomial ring needs at least one variable");
    // Factors differ from 1 only where every coordinate is below mu; the
    // factor depends on the multiset of coordinates, so walk nondecreasing
    // tuples and raise each factor to the number of its rearrangements.
    const Int mu = smarandache(m); // mu <= m always
    if (!mu.fits_uint_p() || mu.get_ui() >= 100'000'000)
        throw std::runtime_error("counting box too large for this modulus");
    const std::uint32_t side = static_cast<std::uint32_t>(mu.get_ui());

    Int total = 1;
    std::vector<std::uint32_t> tuple(nvars, 0);
    Int nfact;
    mpz_fac_ui(nfact.get_mpz_t(), nvars);

    std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t pos,
                                                               std::uint32_t minval) {
        if (pos == nvars) {
            Int factor = m.value() / gcd_with_factorial(m, ExponentVector(tuple));
            if (factor == 1)
                return;
            Int arrangements = nfact, runfact;
            std::size_t i = 0;
            while (i < nvars) {
                std::size_t j = i;
                while (j < nvars && tuple[j] == tuple[i])
                    ++j;
                mpz_fac_ui(runfact.get_mpz_t(), j - i);
                arrangements /= runfact;
                i = j;
            }
            if (!arrangements.fits_ulong_p())
                throw std::runtime_error("function count too large to materialize");
            Int power;
            mpz_pow_ui(power.get_mpz_t(), factor.get_mpz_t(), arrangements.get_ui());
            total *= power;
            return;
        }
        for (std::uint32_t v = minval; v < side; ++v) {
            tuple[pos] = v;
            walk(pos + 1, v);
        }
    };
    walk(0, 0);
    return total;
}

bool functionally_equal(const Polynomial& f, const Polynomial& g) {
    return reduced_nf(f - g, MonomialOrder::lex).is_zero();
}

} // namespace zmgb
