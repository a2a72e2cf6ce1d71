#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kdescent/eisenstein.hpp"

namespace kdescent {

struct IntegerFactor {
    mpz_class prime;
    unsigned long exponent;
};

/// Prime factorization of |n| (n != 0), ascending by prime. Trial division
/// up to 10^6, then Brent's variant of Pollard rho on the remaining cofactor.
std::vector<IntegerFactor> factor_integer(const mpz_class& n);

/// Exact integer cube root, if n is a perfect cube (negative n allowed).
std::optional<mpz_class> exact_cube_root(const mpz_class& n);

/// Exact cube root of a rational, if one exists.
std::optional<mpq_class> exact_cube_root(const mpq_class& q);

/// The canonical prime of norm p for a rational prime p = 1 (mod 3).
/// The other prime above p is canonical_associate(result.conj()).
EisensteinInt split_prime(const mpz_class& p);

struct PrimePower {
    EisensteinInt prime;
    unsigned long exponent;
};

/// unit * prod prime^exponent. Primes are canonical associates, distinct,
/// and sorted by (norm, a, b).
struct Factorization {
    EisensteinInt unit{1};
    std::vector<PrimePower> factors;

    EisensteinInt expand() const;
};

/// Throws UndefinedValue for 0.
Factorization factor(const EisensteinInt& alpha);

struct CubeTest {
    bool is_cube;
    std::optional<EisensteinRational> root; // present iff is_cube, root^3 == input
};

/// Whether a is a cube in Q(w). 0 is a cube with root 0.
CubeTest is_cube(const EisensteinRational& a);

} // namespace kdescent
