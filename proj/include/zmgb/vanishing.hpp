#ifndef ZMGB_VANISHING_HPP
#define ZMGB_VANISHING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zmgb/poly.hpp"

namespace zmgb {

/// A pair (alpha, a) with a a proper divisor of m, m | a * alpha!, and both
/// alpha and a minimal for that property. The basis polynomial it denotes is
/// p_{alpha,a} = a * prod_i (x_i - 1)...(x_i - alpha_i).
struct BasisEntry {
    ExponentVector alpha;
    Int a;

    bool operator==(const BasisEntry&) const = default;
};

/// Canonical entry order: lex-descending on alpha, then ascending a.
struct BasisEntryCanonicalLess {
    bool operator()(const BasisEntry& x, const BasisEntry& y) const {
        int c = lex_compare(x.alpha, y.alpha);
        if (c != 0)
            return c > 0;
        return x.a < y.a;
    }
};

/// The basis G_m for a fixed ring (m, n): deduplicated entries in canonical
/// order. Expanded polynomials are built on demand.
class GroebnerBasis {
public:
    GroebnerBasis(Modulus m, std::size_t nvars, std::vector<BasisEntry> entries);

    const Modulus& modulus() const { return modulus_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<BasisEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(const BasisEntry& e) const;

    /// Expanded basis polynomials, in entry order.
    std::vector<Polynomial> polynomials() const;

    bool operator==(const GroebnerBasis& other) const = default;

private:
    Modulus modulus_;
    std::size_t nvars_;
    std::vector<BasisEntry> entries_;
};

/// Expand a * prod_i prod_{l=1..alpha_i} (x_i - l). Vanishing whenever
/// m | a * alpha!; the builder itself accepts any pair. For a != 0 mod m the
/// leading term under every global order is a * x^alpha.
Polynomial build_p(const ExponentVector& alpha, const Int& a, const Modulus& m);

inline constexpr std::uint64_t kDefaultExhaustionBudget = 10'000'000;

/// Brute-force vanishing oracle: evaluates f at every point of (Z/m)^n.
/// Throws std::runtime_error if m^n exceeds the budget.
bool is_vanishing(const Polynomial& f, std::uint64_t budget = kDefaultExhaustionBudget);

/// h(..., x_i + 1, ...) - h(..., x_i, ...); i is 0-based.
Polynomial partial_difference(const Polynomial& f, std::size_t i);

/// Iterated partial differences, one coordinate at a time; order of
/// application does not matter.
Polynomial nabla(const Polynomial& f, const ExponentVector& beta);

/// m | a * alpha! decided on prime valuations (no factorial is expanded).
bool divides_coeff_factorial(const Modulus& m, const Int& a, const ExponentVector& alpha);

/// gcd(m, alpha!) via the prime factorization of m.
Int gcd_with_factorial(const Modulus& m, const ExponentVector& alpha);

/// Membership of (alpha, a) in S_m: proper divisor, m | a * alpha!, alpha
/// minimal (checked on immediate predecessors; divisibility in alpha is
/// monotone, so that suffices) and a minimal over its proper divisors.
bool in_S(const Modulus& m, const ExponentVector& alpha, const Int& a);

/// All of S_m, found in the box [0, mu]^n with mu = smarandache(m); any
/// coordinate above mu already violates alpha-minimality.
std::vector<BasisEntry> enumerate_S(const Modulus& m, std::size_t nvars);

/// G_m as a canonical basis object. Output depends only on (m, n), never on
/// a monomial order.
GroebnerBasis build_basis(const Modulus& m, std::size_t nvars);

/// Outcome of the structural basis checks; holds() only when all three pass.
struct VerifyReport {
    bool all_vanishing = true;      // every basis element is in I_0
    bool pairwise_minimal = true;   // no leading term divides another's
    bool strong_on_witnesses = true;// every witness LT is divisible
    std::string detail;             // first failure, human readable

    bool holds() const { return all_vanishing && pairwise_minimal && strong_on_witnesses; }
};

/// Checks (a) every basis polynomial vanishes (oracle), (b) pairwise
/// leading-term non-divisibility, (c) each nonzero witness has its leading
/// term divided by some basis leading term. Witnesses must already lie in
/// I_0; a non-vanishing witness throws with the culprit's index.
VerifyReport verify_minimal_strong(std::span<const Polynomial> basis, MonomialOrder order,
                                   std::span<const Polynomial> witnesses,
                                   std::uint64_t budget = kDefaultExhaustionBudget);

/// True iff the two term sets can be paired monomial by monomial with
/// coefficients related by units of Z/m. Associates in Z/m are exactly the
/// residues with the same gcd with m.
bool leading_terms_match_up_to_units(std::span<const Term> lhs, std::span<const Term> rhs,
                                     const Modulus& m);

} // namespace zmgb

#endif
