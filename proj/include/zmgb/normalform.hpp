#ifndef ZMGB_NORMALFORM_HPP
#define ZMGB_NORMALFORM_HPP

#include "zmgb/vanishing.hpp"

namespace zmgb {

/// The coefficient bound m / gcd(m, alpha!) of the unique reduced
/// representative; computed on prime valuations.
Int coefficient_bound(const Modulus& m, const ExponentVector& alpha);

/// Reduced normal form of f modulo the ideal of vanishing polynomials:
/// repeatedly peel the leading term a*x^alpha, split a = k*c + r against
/// c = m/gcd(m, alpha!), emit r*x^alpha and subtract k*p_{alpha,c}. The
/// result is the unique representative with every coefficient below its
/// bound, hence independent of the order argument.
Polynomial reduced_nf(const Polynomial& f, MonomialOrder order = MonomialOrder::lex);

/// True iff every coefficient a_alpha satisfies a_alpha < m/gcd(m, alpha!).
bool is_reduced(const Polynomial& f);

/// Number of polynomial functions (Z/m)^n -> Z/m: the product of
/// m/gcd(m, alpha!) over alpha in {0..m-1}^n. Only the box with all
/// coordinates below smarandache(m) is materialized; the rest of the index
/// set contributes factor 1.
Int count_polynomial_functions(const Modulus& m, std::size_t nvars);

/// Functional equality: the reduced normal form of f - g is zero.
bool functionally_equal(const Polynomial& f, const Polynomial& g);

} // namespace zmgb

#endif
