#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tamagawa {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation's mathematical precondition is violated.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Prime-exponent factorization of |n|. `complete` is false when a composite
/// cofactor survived the effort budget; the cofactor is then recorded so the
/// identity  product(p^e) * cofactor == |n|  always holds.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;  // sorted by prime
    Int cofactor = 1;                               // 1 when complete
    bool complete = true;

    Int reconstruct() const;
};

// p-adic valuation of n (n != 0, p prime).
unsigned vp(const Int& n, const Int& p);
// valuation of a rational (may be negative); q != 0.
long vp(const Rat& q, const Int& p);

bool is_prime(const Int& n);

/// Trial division to 10^6, then Pollard rho (Brent) with a bounded number of
/// iterations. Incompleteness is reported, never silent.
Factorization factorize(const Int& n);

/// Omega(n) = number of prime factors counted with multiplicity.
/// nullopt when the factorization is incomplete ("unknown", never a guess).
std::optional<unsigned> big_omega(const Int& n);
std::optional<unsigned> big_omega(const Factorization& f);

std::optional<bool> is_squarefree(const Int& n);
std::optional<bool> is_squarefree(const Factorization& f);

/// number of distinct prime divisors; nullopt when incomplete.
std::optional<unsigned> num_distinct_primes(const Int& n);

// Legendre symbol (a/p) for an odd prime p.
int legendre(const Int& a, const Int& p);

// x with x*a == 1 mod m (gcd(a, m) = 1).
Int invmod(const Int& a, const Int& m);

Int pow_int(const Int& base, unsigned long e);

/// ceil(log2 |m|), m != 0; exact via bit length.
unsigned log2_ceil(const Int& m);

}  // namespace tamagawa
