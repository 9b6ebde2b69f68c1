#include "narrow2/residues.hpp"

#include <string>
#include <utility>

#include "narrow2/errors.hpp"
#include "narrow2/modarith.hpp"

namespace narrow2 {

using detail::mulmod;
using detail::powmod;

int jacobi(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::uint64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

std::uint64_t residue(const Integer& a, std::uint64_t p) {
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

int legendre(const Integer& a, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw ArgumentError("legendre: modulus " + std::to_string(p) + " is not an odd prime");
  }
  return jacobi(residue(a, p), p);
}

int legendre(std::uint64_t a, PrimeP1Mod4 p) noexcept { return jacobi(a % p.value(), p.value()); }

int legendre(const Integer& a, PrimeP1Mod4 p) noexcept {
  return jacobi(residue(a, p.value()), p.value());
}

std::uint64_t sqrt_mod_unchecked(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  std::uint64_t root;
  if (p % 4 == 3) {
    root = powmod(a, (p + 1) / 4, p);
  } else {
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (jacobi(z, p) != -1) ++z;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    std::uint64_t t = powmod(a, q, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mulmod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
      m = i;
      c = mulmod(b, b, p);
      t = mulmod(t, c, p);
      r = mulmod(r, b, p);
    }
    root = r;
  }
  return std::min(root, p - root);
}

std::uint64_t sqrt_mod(const Integer& a, std::uint64_t p) {
  if (legendre(a, p) != 1) {
    throw NonResidueError("sqrt_mod: " + a.get_str() + " is not a nonzero square mod " +
                          std::to_string(p));
  }
  return sqrt_mod_unchecked(residue(a, p), p);
}

}  // namespace narrow2
