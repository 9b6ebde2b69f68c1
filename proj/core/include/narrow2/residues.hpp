#pragma once

#include <cstdint>

#include "narrow2/primes.hpp"

namespace narrow2 {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(std::uint64_t a, std::uint64_t n);

// Legendre symbol (a/p) in {-1, 0, 1}. Throws ArgumentError unless p is an
// odd prime.
int legendre(const Integer& a, std::uint64_t p);

// Unchecked variants: the modulus is prime by construction.
int legendre(std::uint64_t a, PrimeP1Mod4 p) noexcept;
int legendre(const Integer& a, PrimeP1Mod4 p) noexcept;

// The smaller square root s of a modulo the odd prime p, 0 < s < p.
// Throws NonResidueError when (a/p) != 1.
std::uint64_t sqrt_mod(const Integer& a, std::uint64_t p);

// Tonelli-Shanks without validation. p prime (2 allowed), a a square mod p
// (0 allowed). Returns the smaller root in [0, p).
std::uint64_t sqrt_mod_unchecked(std::uint64_t a, std::uint64_t p);

// a mod p in [0, p) for arbitrary-precision a.
std::uint64_t residue(const Integer& a, std::uint64_t p);

}  // namespace narrow2
