#include "zmgb/poly.hpp"

#include <stdexcept>

namespace zmgb {

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i, std::uint32_t k) {
    if (i >= n)
        throw std::invalid_argument("variable index out of range");
    ExponentVector v(n);
    v.e_[i] = k;
    return v;
}

std::uint64_t ExponentVector::total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e_)
        d += x;
    return d;
}

Int ExponentVector::factorial() const {
    Int f = 1, fi;
    for (auto x : e_) {
        mpz_fac_ui(fi.get_mpz_t(), x);
        f *= fi;
    }
    return f;
}

bool ExponentVector::leq(const ExponentVector& b) const {
    if (e_.size() != b.e_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > b.e_[i])
            return false;
    return true;
}

bool ExponentVector::strictly_less(const ExponentVector& b) const {
    return leq(b) && *this != b;
}

ExponentVector ExponentVector::operator+(const ExponentVector& b) const {
    if (e_.size() != b.e_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    std::vector<std::uint32_t> sum(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        sum[i] = e_[i] + b.e_[i];
    return ExponentVector(std::move(sum));
}

ExponentVector ExponentVector::with(std::size_t i, std::uint32_t v) const {
    ExponentVector copy = *this;
    copy.e_.at(i) = v;
    return copy;
}

int lex_compare(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("exponent vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int order_compare(MonomialOrder order, const ExponentVector& a, const ExponentVector& b) {
    switch (order) {
    case MonomialOrder::lex:
        return lex_compare(a, b);
    case MonomialOrder::deglex: {
        auto da = a.total_degree(), db = b.total_degree();
        if (da != db)
            return da < db ? -1 : 1;
        return lex_compare(a, b);
    }
    case MonomialOrder::degrevlex: {
        auto da = a.total_degree(), db = b.total_degree();
        if (da != db)
            return da < db ? -1 : 1;
        // equal degree: larger is the one with the smaller exponent in the
        // last coordinate where they differ
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i])
                return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }
    }
    throw std::logic_error("unreachable");
}

bool term_divides(const Term& s, const Term& t, const Modulus& m) {
    return divides_mod(s.coeff, t.coeff, m) && s.exponents.leq(t.exponents);
}

Polynomial::Polynomial(const Modulus& m, std::size_t nvars) : modulus_(m), nvars_(nvars) {
    if (nvars == 0)
        throw std::invalid_argument("polynomial ring needs at least one variable");
}

void Polynomial::insert_reduced(const ExponentVector& alpha, Int c) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), modulus_.value().get_mpz_t());
    if (c == 0)
        return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, std::move(c));
        return;
    }
    it->second += c;
    mpz_mod(it->second.get_mpz_t(), it->second.get_mpz_t(),
            modulus_.value().get_mpz_t());
    if (it->second == 0)
        terms_.erase(it);
}

Polynomial Polynomial::constant(const Modulus& m, std::size_t nvars, const Int& c) {
    Polynomial f(m, nvars);
    f.insert_reduced(ExponentVector(nvars), c);
    return f;
}

Polynomial Polynomial::monomial(const Modulus& m, std::size_t nvars, const Int& coeff,
                                const ExponentVector& alpha) {
    if (alpha.size() != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    Polynomial f(m, nvars);
    f.insert_reduced(alpha, coeff);
    return f;
}

Polynomial Polynomial::variable(const Modulus& m, std::size_t nvars, std::size_t i) {
    return monomial(m, nvars, 1, ExponentVector::unit(nvars, i));
}

Polynomial Polynomial::from_terms(const Modulus& m, std::size_t nvars,
                                  std::span<const Term> terms) {
    Polynomial f(m, nvars);
    for (const Term& t : terms) {
        if (t.exponents.size() != nvars)
            throw std::invalid_argument("exponent vector length mismatch");
        f.insert_reduced(t.exponents, t.coeff);
    }
    return f;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [alpha, c] : terms_)
        d = std::max(d, alpha.total_degree());
    return d;
}

Int Polynomial::coefficient(const ExponentVector& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::require_same_ring(const Polynomial& g) const {
    if (!(modulus_ == g.modulus_) || nvars_ != g.nvars_)
        throw std::invalid_argument("ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_ring(g);
    Polynomial sum = *this;
    for (const auto& [alpha, c] : g.terms_)
        sum.insert_reduced(alpha, c);
    return sum;
}

Polynomial Polynomial::operator-() const {
    Polynomial neg(modulus_, nvars_);
    for (const auto& [alpha, c] : terms_)
        neg.terms_.emplace(alpha, modulus_.value() - c);
    return neg;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    return *this + (-g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ring(g);
    Polynomial prod(modulus_, nvars_);
    for (const auto& [alpha, a] : terms_)
        for (const auto& [beta, b] : g.terms_)
            prod.insert_reduced(alpha + beta, a * b);
    return prod;
}

Polynomial Polynomial::scaled(const Int& c) const {
    Polynomial result(modulus_, nvars_);
    for (const auto& [alpha, a] : terms_)
        result.insert_reduced(alpha, a * c);
    return result;
}

bool Polynomial::operator==(const Polynomial& g) const {
    return modulus_ == g.modulus_ && nvars_ == g.nvars_ && terms_ == g.terms_;
}

Int Polynomial::evaluate(std::span<const Int> point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("evaluation point length mismatch");
    const Int& m = modulus_.value();
    std::vector<Int> reduced(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
        mpz_mod(reduced[i].get_mpz_t(), point[i].get_mpz_t(), m.get_mpz_t());

    Int acc = 0, factor, e;
    for (const auto& [alpha, c] : terms_) {
        Int termval = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (alpha[i] == 0)
                continue;
            e = alpha[i];
            mpz_powm(factor.get_mpz_t(), reduced[i].get_mpz_t(), e.get_mpz_t(),
                     m.get_mpz_t());
            termval *= factor;
            mpz_mod(termval.get_mpz_t(), termval.get_mpz_t(), m.get_mpz_t());
        }
        acc += termval;
    }
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    return acc;
}

Term Polynomial::leading_term(MonomialOrder order) const {
    if (terms_.empty())
        throw std::domain_error("zero polynomial has no leading term");
    if (order == MonomialOrder::lex) {
        const auto& [alpha, c] = *terms_.begin();
        return Term{c, alpha};
    }
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order_compare(order, it->first, best->first) > 0)
            best = it;
    return Term{best->second, best->first};
}

} // namespace zmgb
