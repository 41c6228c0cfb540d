#ifndef ZMGB_MODARITH_HPP
#define ZMGB_MODARITH_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace zmgb {

/// Arbitrary-precision integer. All residue and counting arithmetic in this
/// library is exact; machine words are used only as verified internal
/// shortcuts.
using Int = mpz_class;

struct PrimePower {
    Int prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Factor a positive integer by trial division (6k+-1 wheel) with a
/// probable-prime early exit after each stripped factor. Intended for
/// desk-scale inputs and moduli of the form 2^k * small.
std::vector<PrimePower> factorize(Int x);

/// The ring parameter m >= 2 together with its prime factorization,
/// computed once at construction. Immutable.
class Modulus {
public:
    explicit Modulus(Int m);
    explicit Modulus(unsigned long m) : Modulus(Int(m)) {}

    const Int& value() const { return m_; }
    const std::vector<PrimePower>& factorization() const { return factors_; }

    bool operator==(const Modulus& other) const { return m_ == other.m_; }

private:
    Int m_;
    std::vector<PrimePower> factors_;
};

/// gcd(a, 0) = a; gcd(0, 0) = 0 by convention (never reached through the
/// public API since every modulus is >= 2).
Int gcd(const Int& a, const Int& b);

/// a | b over the integers. divides(0, b) holds only for b = 0.
bool divides(const Int& a, const Int& b);

/// Exponent of q in x, for x != 0 and q >= 2.
Int valuation(Int x, const Int& q);

/// Exponent of the prime q in k! (Legendre: sum of floor(k/q^i)).
/// Throws std::invalid_argument("non-prime base") if q is not prime.
Int factorial_valuation(const Int& k, const Int& q);

bool is_probable_prime(const Int& x);

/// Smallest k >= 1 with m | k! (the Smarandache-Kempner function).
Int smarandache(const Modulus& m);

/// Divisibility in Z/m: a |_m b iff some multiple of a is congruent to b,
/// which reduces to gcd(a, m) | b over the integers.
bool divides_mod(const Int& a, const Int& b, const Modulus& m);

/// True iff a is invertible mod m.
bool is_unit(const Int& a, const Modulus& m);

/// All divisors of the factored value, ascending.
std::vector<Int> divisors(const std::vector<PrimePower>& factors);

/// All divisors of m, ascending.
std::vector<Int> divisors(const Modulus& m);

} // namespace zmgb

#endif
