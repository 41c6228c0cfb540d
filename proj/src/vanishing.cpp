#include "zmgb/vanishing.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zmgb {

namespace {

std::string describe_entry(const ExponentVector& alpha, const Int& a) {
    std::ostringstream os;
    os << "(alpha=(";
    for (std::size_t i = 0; i < alpha.size(); ++i)
        os << (i ? "," : "") << alpha[i];
    os << "), a=" << a.get_str() << ")";
    return os.str();
}

// Sum of v_q(alpha_i!) over all coordinates.
Int factorial_valuation_sum(const ExponentVector& alpha, const Int& q) {
    Int total = 0;
    Int power, k;
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

Int valuation_of(Int x, const Int& q) {
    Int v = 0;
    while (x != 0 && mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
        ++v;
    }
    return v;
}

// Odometer over {0..side-1}^n; returns false after the last point.
bool next_point(std::vector<std::uint32_t>& p, std::uint32_t side) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (++p[i] < side)
            return true;
        p[i] = 0;
    }
    return false;
}

} // namespace

GroebnerBasis::GroebnerBasis(Modulus m, std::size_t nvars, std::vector<BasisEntry> entries)
    : modulus_(std::move(m)), nvars_(nvars), entries_(std::move(entries)) {
    for (const auto& e : entries_)
        if (e.alpha.size() != nvars_)
            throw std::invalid_argument("exponent vector length mismatch");
    std::sort(entries_.begin(), entries_.end(), BasisEntryCanonicalLess{});
    entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

bool GroebnerBasis::contains(const BasisEntry& e) const {
    return std::binary_search(entries_.begin(), entries_.end(), e, BasisEntryCanonicalLess{});
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(build_p(e.alpha, e.a, modulus_));
    return out;
}

Polynomial build_p(const ExponentVector& alpha, const Int& a, const Modulus& m) {
    const std::size_t n = alpha.size();
    Polynomial f = Polynomial::constant(m, n, a);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(m, n, i);
        for (std::uint32_t l = 1; l <= alpha[i]; ++l)
            f = f * (xi - Polynomial::constant(m, n, l));
    }
    return f;
}

bool is_vanishing(const Polynomial& f, std::uint64_t budget) {
    const Int& m = f.modulus().value();
    Int points;
    mpz_pow_ui(points.get_mpz_t(), m.get_mpz_t(), f.nvars());
    if (points > Int(budget))
        throw std::runtime_error("exhaustion budget exceeded: " + points.get_str() +
                                 " evaluation points");
    if (f.is_zero())
        return true;

    const std::uint32_t side = static_cast<std::uint32_t>(m.get_ui());
    std::vector<std::uint32_t> p(f.nvars(), 0);
    std::vector<Int> point(f.nvars());
    do {
        for (std::size_t i = 0; i < p.size(); ++i)
            point[i] = p[i];
        if (f.evaluate(point) != 0)
            return false;
    } while (next_point(p, side));
    return true;
}

Polynomial partial_difference(const Polynomial& f, std::size_t i) {
    if (i >= f.nvars())
        throw std::invalid_argument("variable index out of range");
    // Substitute x_i -> x_i + 1 termwise and subtract f: the term c*x^alpha
    // contributes c*binom(alpha_i, j)*x_i^j for j < alpha_i.
    std::vector<Term> out;
    Int binom;
    for (const auto& [alpha, c] : f.terms()) {
        const std::uint32_t k = alpha[i];
        for (std::uint32_t j = 0; j < k; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), k, j);
            out.push_back(Term{c * binom, alpha.with(i, j)});
        }
    }
    return Polynomial::from_terms(f.modulus(), f.nvars(), out);
}

Polynomial nabla(const Polynomial& f, const ExponentVector& beta) {
    if (beta.size() != f.nvars())
        throw std::invalid_argument("exponent vector length mismatch");
    Polynomial g = f;
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::uint32_t rep = 0; rep < beta[i]; ++rep)
            g = partial_difference(g, i);
    return g;
}

bool divides_coeff_factorial(const Modulus& m, const Int& a, const ExponentVector& alpha) {
    if (a == 0)
        return true;
    for (const auto& [q, e] : m.factorization()) {
        if (valuation_of(a, q) + factorial_valuation_sum(alpha, q) < e)
            return false;
    }
    return true;
}

Int gcd_with_factorial(const Modulus& m, const ExponentVector& alpha) {
    Int g = 1, qpow;
    for (const auto& [q, e] : m.factorization()) {
        Int v = factorial_valuation_sum(alpha, q);
        unsigned long exp = v < e ? static_cast<unsigned long>(v.get_ui()) : e;
        mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), exp);
        g *= qpow;
    }
    return g;
}

bool in_S(const Modulus& m, const ExponentVector& alpha, const Int& a) {
    if (a < 1 || a >= m.value() || !divides(a, m.value()))
        return false;
    if (!divides_coeff_factorial(m, a, alpha))
        return false;
    // alpha minimal: no immediate predecessor keeps the divisibility
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0)
            continue;
        if (divides_coeff_factorial(m, a, alpha.with(i, alpha[i] - 1)))
            return false;
    }
    // a minimal: no proper divisor of a keeps the divisibility
    for (const Int& b : divisors(factorize(a))) {
        if (b == a)
            continue;
        if (divides_coeff_factorial(m, b, alpha))
            return false;
    }
    return true;
}

std::vector<BasisEntry> enumerate_S(const Modulus& m, std::size_t nvars) {
    if (nvars == 0)
        throw std::invalid_argument("polynomial ring needs at least one variable");
    const Int mu = smarandache(m);
    if (!mu.fits_uint_p() || mu.get_ui() >= 100'000'000)
        throw std::runtime_error("enumeration box too large for this modulus");
    const std::uint32_t side = static_cast<std::uint32_t>(mu.get_ui()) + 1;

    double box = 1;
    for (std::size_t i = 0; i < nvars; ++i)
        box *= side;
    if (box > 1e8)
        throw std::runtime_error("enumeration box too large for this modulus");

    std::vector<Int> proper = divisors(m);
    proper.pop_back(); // drop m itself

    std::vector<BasisEntry> found;
    std::vector<std::uint32_t> point(nvars, 0);
    do {
        ExponentVector alpha{std::vector<std::uint32_t>(point)};
        for (const Int& a : proper)
            if (in_S(m, alpha, a))
                found.push_back(BasisEntry{alpha, a});
    } while (next_point(point, side));
    std::sort(found.begin(), found.end(), BasisEntryCanonicalLess{});
    return found;
}

GroebnerBasis build_basis(const Modulus& m, std::size_t nvars) {
    return GroebnerBasis(m, nvars, enumerate_S(m, nvars));
}

VerifyReport verify_minimal_strong(std::span<const Polynomial> basis, MonomialOrder order,
                                   std::span<const Polynomial> witnesses,
                                   std::uint64_t budget) {
    VerifyReport report;
    if (basis.empty() && witnesses.empty())
        return report; // vacuously holds

    const Modulus* m = nullptr;
    if (!basis.empty())
        m = &basis.front().modulus();
    else
        m = &witnesses.front().modulus();

    for (std::size_t w = 0; w < witnesses.size(); ++w) {
        if (!witnesses[w].is_zero() && !is_vanishing(witnesses[w], budget))
            throw std::invalid_argument("witness " + std::to_string(w) +
                                        " is not a vanishing polynomial");
    }

    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!is_vanishing(basis[i], budget)) {
            report.all_vanishing = false;
            if (report.detail.empty())
                report.detail = "basis element " + std::to_string(i) + " does not vanish";
            break;
        }
    }

    std::vector<Term> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis)
        lts.push_back(g.leading_term(order));

    for (std::size_t i = 0; i < lts.size() && report.pairwise_minimal; ++i) {
        for (std::size_t j = 0; j < lts.size(); ++j) {
            if (i == j)
                continue;
            if (term_divides(lts[i], lts[j], *m)) {
                report.pairwise_minimal = false;
                if (report.detail.empty())
                    report.detail = "leading term of element " + std::to_string(i) +
                                    " divides leading term of element " + std::to_string(j);
                break;
            }
        }
    }

    for (std::size_t w = 0; w < witnesses.size(); ++w) {
        if (witnesses[w].is_zero())
            continue;
        Term lt = witnesses[w].leading_term(order);
        bool covered = false;
        for (const Term& g : lts) {
            if (term_divides(g, lt, *m)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            report.strong_on_witnesses = false;
            if (report.detail.empty())
                report.detail = "no basis leading term divides witness " + std::to_string(w);
            break;
        }
    }
    return report;
}

bool leading_terms_match_up_to_units(std::span<const Term> lhs, std::span<const Term> rhs,
                                     const Modulus& m) {
    if (lhs.size() != rhs.size())
        return false;
    // Associate classes of Z/m are indexed by gcd with m, so pair terms by
    // (monomial, gcd(coeff, m)) multiset equality.
    auto key_counts = [&](std::span<const Term> terms) {
        std::map<std::pair<std::vector<std::uint32_t>, Int>, std::size_t> counts;
        for (const Term& t : terms) {
            Int c;
            mpz_mod(c.get_mpz_t(), t.coeff.get_mpz_t(), m.value().get_mpz_t());
            counts[{t.exponents.entries(), gcd(c, m.value())}]++;
        }
        return counts;
    };
    return key_counts(lhs) == key_counts(rhs);
}

} // namespace zmgb
