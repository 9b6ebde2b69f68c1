#include "narrow2/units.hpp"

#include <string>

#include "narrow2/errors.hpp"
#include "narrow2/modarith.hpp"

namespace narrow2 {

namespace {

using i128 = __int128;

void check_radicand(std::uint64_t d) {
  if (d < 2 || !is_squarefree(d)) {
    throw ArgumentError("fundamental_unit: " + std::to_string(d) +
                        " is not a squarefree integer >= 2");
  }
}

// Walks the expansion of (P0 + sqrt(d))/Q0 and hands each partial quotient to
// `step`. Stops at the first k >= 1 with Q_k = Q0 and returns k.
template <typename Step>
std::uint64_t expand(std::uint64_t d, i128 p0, i128 q0, Step&& step) {
  const i128 root = isqrt(d);
  i128 p = p0, q = q0;
  for (std::uint64_t k = 0;; ++k) {
    const i128 a = (p + root) / q;
    step(a);
    p = a * q - p;
    q = (static_cast<i128>(d) - p * p) / q;
    if (q == q0) return k + 1;
  }
}

}  // namespace

QuadraticUnit fundamental_unit(std::uint64_t d) {
  check_radicand(d);
  const bool one_mod_four = d % 4 == 1;
  const long p0 = one_mod_four ? 1 : 0;
  const long q0 = one_mod_four ? 2 : 1;
  Integer pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
  const std::uint64_t k = expand(d, p0, q0, [&](i128 a) {
    const Integer big_a(static_cast<unsigned long>(a));
    Integer pn = big_a * pm1 + pm2;
    Integer qn = big_a * qm1 + qm2;
    pm2 = std::move(pm1);
    pm1 = std::move(pn);
    qm2 = std::move(qm1);
    qm1 = std::move(qn);
  });
  // pm1/qm1 hold the convergent of index k - 1.
  QuadraticUnit unit;
  unit.d = d;
  unit.norm = (k % 2 == 0) ? 1 : -1;
  unit.u = q0 * pm1 - p0 * qm1;
  unit.v = qm1;
  unit.half = one_mod_four;
  if (unit.half && mpz_even_p(unit.u.get_mpz_t()) && mpz_even_p(unit.v.get_mpz_t())) {
    unit.u /= 2;
    unit.v /= 2;
    unit.half = false;
  }
  return unit;
}

QuadraticUnitMod fundamental_unit_mod(std::uint64_t d, std::uint64_t l) {
  check_radicand(d);
  if (l < 3 || l % 2 == 0 || !is_prime(l)) {
    throw ArgumentError("fundamental_unit_mod: " + std::to_string(l) + " is not an odd prime");
  }
  const std::uint64_t m = 2 * l;
  const bool one_mod_four = d % 4 == 1;
  const std::uint64_t p0 = one_mod_four ? 1 : 0;
  const std::uint64_t q0 = one_mod_four ? 2 : 1;
  std::uint64_t pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
  const std::uint64_t k = expand(d, p0, q0, [&](i128 a) {
    const std::uint64_t am = static_cast<std::uint64_t>(a % m);
    const std::uint64_t pn = (detail::mulmod(am, pm1, m) + pm2) % m;
    const std::uint64_t qn = (detail::mulmod(am, qm1, m) + qm2) % m;
    pm2 = pm1;
    pm1 = pn;
    qm2 = qm1;
    qm1 = qn;
  });
  QuadraticUnitMod unit;
  unit.d = d;
  unit.l = l;
  unit.norm = (k % 2 == 0) ? 1 : -1;
  std::uint64_t u = (q0 * pm1 % m + m - p0 * qm1 % m) % m;
  std::uint64_t v = qm1;
  unit.half = one_mod_four;
  // m is even, so parity survives the reduction.
  if (unit.half && u % 2 == 0 && v % 2 == 0) {
    u /= 2;
    v /= 2;
    unit.half = false;
  }
  unit.u = u % l;
  unit.v = v % l;
  return unit;
}

}  // namespace narrow2
