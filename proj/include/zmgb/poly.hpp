#ifndef ZMGB_POLY_HPP
#define ZMGB_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "zmgb/modarith.hpp"

namespace zmgb {

/// Multi-index alpha of fixed length n. Carries the componentwise partial
/// order, addition, the factorial alpha_1! * ... * alpha_n! and the total
/// degree |alpha|.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<std::uint32_t> e) : e_(e) {}
    explicit ExponentVector(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    /// k * e_i in n variables.
    static ExponentVector unit(std::size_t n, std::size_t i, std::uint32_t k = 1);

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& entries() const { return e_; }

    std::uint64_t total_degree() const;
    Int factorial() const;

    /// alpha <= beta componentwise.
    bool leq(const ExponentVector& b) const;
    /// alpha <= beta componentwise and alpha != beta.
    bool strictly_less(const ExponentVector& b) const;

    ExponentVector operator+(const ExponentVector& b) const;
    /// Copy with coordinate i replaced by v.
    ExponentVector with(std::size_t i, std::uint32_t v) const;

    bool operator==(const ExponentVector&) const = default;

private:
    std::vector<std::uint32_t> e_;
};

enum class MonomialOrder { lex, deglex, degrevlex };

/// Negative, zero or positive as x^a <, =, > x^b under lex with
/// x_1 > x_2 > ... > x_n.
int lex_compare(const ExponentVector& a, const ExponentVector& b);

/// Negative, zero or positive as x^a <, =, > x^b under the given order.
int order_compare(MonomialOrder order, const ExponentVector& a, const ExponentVector& b);

/// Comparator placing the lex-largest monomial first; the canonical
/// internal storage order of Polynomial, independent of query orders.
struct LexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return lex_compare(a, b) > 0;
    }
};

struct Term {
    Int coeff;
    ExponentVector exponents;

    bool operator==(const Term&) const = default;
};

/// s | t in the term sense: coeff(s) |_m coeff(t) and exponents
/// componentwise <=.
bool term_divides(const Term& s, const Term& t, const Modulus& m);

/// Sparse polynomial over Z/m in a fixed number of variables. Stored
/// coefficients are always in [1, m-1]; the zero polynomial has no terms.
/// Immutable value type: all arithmetic returns new polynomials.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Int, LexDescending>;

    /// The zero polynomial.
    Polynomial(const Modulus& m, std::size_t nvars);

    static Polynomial constant(const Modulus& m, std::size_t nvars, const Int& c);
    static Polynomial monomial(const Modulus& m, std::size_t nvars, const Int& coeff,
                               const ExponentVector& alpha);
    /// x_i (0-based index).
    static Polynomial variable(const Modulus& m, std::size_t nvars, std::size_t i);
    static Polynomial from_terms(const Modulus& m, std::size_t nvars,
                                 std::span<const Term> terms);

    const Modulus& modulus() const { return modulus_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const; // 0 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    /// Coefficient of x^alpha, zero if absent.
    Int coefficient(const ExponentVector& alpha) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial scaled(const Int& c) const;

    bool operator==(const Polynomial& g) const;

    /// f(point) mod m; point entries are reduced into [0, m).
    Int evaluate(std::span<const Int> point) const;

    /// The term maximal under the given order. Throws std::domain_error
    /// on the zero polynomial.
    Term leading_term(MonomialOrder order = MonomialOrder::lex) const;

private:
    Modulus modulus_;
    std::size_t nvars_;
    TermMap terms_;

    void insert_reduced(const ExponentVector& alpha, Int c);
    void require_same_ring(const Polynomial& g) const;
};

} // namespace zmgb

#endif
