#ifndef ZMGB_RECURSIVE_HPP
#define ZMGB_RECURSIVE_HPP

#include "zmgb/vanishing.hpp"

namespace zmgb {

/// Exponent enlargements for the recursive step: all beta with
/// 0 < beta <= (q,...,q) componentwise such that (alpha+beta)! carries at
/// least one more factor q than a*alpha! does.
std::vector<ExponentVector> candidate_B(const ExponentVector& alpha, const Int& a,
                                        const Int& q);

/// Recursive construction of the basis along the prime factorization of M:
/// peel the largest prime factor q, recurse on M/q, then lift each entry by
/// keeping it, multiplying its coefficient by q, or enlarging its exponent
/// through candidate_B with coefficient M/gcd(M, (alpha+beta)!). Lifted
/// candidates that fail S_M membership are discarded; pass `rejected` to
/// collect them. The result equals build_basis(M, nvars).
GroebnerBasis rec_comp(const Modulus& M, std::size_t nvars,
                       std::vector<BasisEntry>* rejected = nullptr);

} // namespace zmgb

#endif
