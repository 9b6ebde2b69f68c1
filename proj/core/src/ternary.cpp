#include "narrow2/ternary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "narrow2/errors.hpp"
#include "narrow2/modarith.hpp"
#include "narrow2/residues.hpp"

namespace narrow2 {

namespace {

std::string pair_str(std::uint64_t a, std::uint64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

struct Factored {
  std::vector<std::uint64_t> a_primes;
  std::vector<std::uint64_t> b_primes;
};

Factored validate(std::uint64_t a, std::uint64_t b) {
  if (a < 2 || b < 2) {
    throw ArgumentError("solve_ternary" + pair_str(a, b) + ": coefficients must be at least 2");
  }
  if (std::gcd(a, b) != 1) {
    throw ArgumentError("solve_ternary" + pair_str(a, b) + ": coefficients are not coprime");
  }
  Factored f{factorize(a), factorize(b)};
  for (const auto* primes : {&f.a_primes, &f.b_primes}) {
    if (std::adjacent_find(primes->begin(), primes->end()) != primes->end()) {
      throw ArgumentError("solve_ternary" + pair_str(a, b) + ": coefficient is not squarefree");
    }
    for (std::uint64_t p : *primes) {
      if (p % 4 != 1) {
        throw ArgumentError("solve_ternary" + pair_str(a, b) + ": prime " + std::to_string(p) +
                            " is not 1 mod 4");
      }
    }
  }
  for (std::uint64_t q : f.a_primes) {
    if (jacobi(b % q, q) != 1) {
      throw ArgumentError("solve_ternary" + pair_str(a, b) + ": " + std::to_string(b) +
                          " is not a square mod " + std::to_string(q));
    }
  }
  for (std::uint64_t q : f.b_primes) {
    if (jacobi(a % q, q) != 1) {
      throw ArgumentError("solve_ternary" + pair_str(a, b) + ": " + std::to_string(a) +
                          " is not a square mod " + std::to_string(q));
    }
  }
  return f;
}

bool z_is_odd(const TernarySolution& s) { return mpz_odd_p(s.z.get_mpz_t()) != 0; }

// Visits odd z ascending, y ascending, inside the Holzer box z <= sqrt(a),
// y <= sqrt(b).
std::optional<TernarySolution> box_search(std::uint64_t a, std::uint64_t b,
                                          std::uint64_t budget) {
  const std::uint64_t zmax = isqrt(a);
  const std::uint64_t ymax = isqrt(b);
  const unsigned __int128 work =
      static_cast<unsigned __int128>(zmax / 2 + 1) * static_cast<unsigned __int128>(ymax + 1);
  if (work > budget) return std::nullopt;
  for (std::uint64_t z = 1; z <= zmax; z += 2) {
    for (std::uint64_t y = 0; y <= ymax; ++y) {
      if (std::gcd(y, z) != 1 && y != 0) continue;
      const std::uint64_t rhs = a * y * y + b * z * z;
      const std::uint64_t x = isqrt(rhs);
      if (x * x == rhs && std::gcd(x, std::gcd(y, z)) == 1) {
        return TernarySolution{a, b, Integer(x), Integer(y), Integer(z)};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lattice fallback. Every primitive solution satisfies x = r*y (mod b) and
// x = s*z (mod a) for square roots r of a mod b and s of b mod a. For a fixed
// choice of roots these congruences cut out a lattice of index ab, and the
// form x^2 + a*y^2 + b*z^2 lets us enumerate its short vectors. Some choice
// of roots admits a solution with x^2 <= ab, y^2 <= b, z^2 <= a, so the
// radius 3ab always suffices.

using Vec3 = std::array<Integer, 3>;

struct Weighted {
  Integer a, b;
  Integer dot(const Vec3& u, const Vec3& v) const {
    return u[0] * v[0] + a * u[1] * v[1] + b * u[2] * v[2];
  }
  mpq_class dot(const std::array<mpq_class, 3>& u, const std::array<mpq_class, 3>& v) const {
    return u[0] * v[0] + mpq_class(a) * u[1] * v[1] + mpq_class(b) * u[2] * v[2];
  }
};

struct GramSchmidt {
  std::array<std::array<mpq_class, 3>, 3> mu;
  std::array<mpq_class, 3> norm;
};

GramSchmidt gram_schmidt(const std::array<Vec3, 3>& basis, const Weighted& w) {
  GramSchmidt gs;
  std::array<std::array<mpq_class, 3>, 3> star;
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < 3; ++c) star[i][c] = mpq_class(basis[i][c]);
    for (int j = 0; j < i; ++j) {
      std::array<mpq_class, 3> bi;
      for (int c = 0; c < 3; ++c) bi[c] = mpq_class(basis[i][c]);
      gs.mu[i][j] = w.dot(bi, star[j]) / gs.norm[j];
      for (int c = 0; c < 3; ++c) star[i][c] -= gs.mu[i][j] * star[j][c];
    }
    gs.norm[i] = w.dot(star[i], star[i]);
  }
  return gs;
}

Integer round_rational(const mpq_class& q) {
  Integer num = 2 * q.get_num() + q.get_den();
  Integer den = 2 * q.get_den();
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

void lll_reduce(std::array<Vec3, 3>& basis, const Weighted& w) {
  const mpq_class delta(99, 100);
  int k = 1;
  while (k < 3) {
    GramSchmidt gs = gram_schmidt(basis, w);
    for (int j = k - 1; j >= 0; --j) {
      const Integer q = round_rational(gs.mu[k][j]);
      if (q != 0) {
        for (int c = 0; c < 3; ++c) basis[k][c] -= q * basis[j][c];
        gs = gram_schmidt(basis, w);
      }
    }
    if (gs.norm[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      k = std::max(k - 1, 1);
    }
  }
}

std::uint64_t crt_combine(const std::vector<std::uint64_t>& moduli,
                          const std::vector<std::uint64_t>& residues, std::uint64_t modulus) {
  unsigned __int128 acc = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const std::uint64_t q = moduli[i];
    const std::uint64_t cofactor = modulus / q;
    const std::uint64_t inv = detail::invmod(cofactor % q, q);
    const std::uint64_t coeff = detail::mulmod(residues[i], inv, q);
    acc = (acc + static_cast<unsigned __int128>(coeff) * cofactor) % modulus;
  }
  return static_cast<std::uint64_t>(acc);
}

struct Candidate {
  TernarySolution sol;
  Integer weight;
};

bool better(const Candidate& lhs, const Candidate& rhs) {
  const bool lo = z_is_odd(lhs.sol), ro = z_is_odd(rhs.sol);
  if (lo != ro) return lo;
  if (lhs.weight != rhs.weight) return lhs.weight < rhs.weight;
  return std::tie(lhs.sol.z, lhs.sol.y, lhs.sol.x) < std::tie(rhs.sol.z, rhs.sol.y, rhs.sol.x);
}

std::optional<Candidate> enumerate_lattice(std::array<Vec3, 3> basis, const Weighted& w,
                                           const Integer& radius) {
  lll_reduce(basis, w);
  const GramSchmidt gs = gram_schmidt(basis, w);
  std::array<double, 3> nrm;
  std::array<std::array<double, 3>, 3> mu{};
  for (int i = 0; i < 3; ++i) {
    nrm[i] = gs.norm[i].get_d();
    for (int j = 0; j < i; ++j) mu[i][j] = gs.mu[i][j].get_d();
  }
  const double bound = radius.get_d() * (1 + 1e-9);
  std::optional<Candidate> best;

  auto span = [](double center, double rem, double norm) {
    const double r = rem > 0 ? std::sqrt(rem / norm) : 0.0;
    return std::pair<long long, long long>{static_cast<long long>(std::ceil(center - r)) - 1,
                                           static_cast<long long>(std::floor(center + r)) + 1};
  };

  const auto [lo3, hi3] = span(0.0, bound, nrm[2]);
  for (long long c3 = lo3; c3 <= hi3; ++c3) {
    const double rem3 = bound - nrm[2] * double(c3) * double(c3);
    const double center2 = -mu[2][1] * double(c3);
    const auto [lo2, hi2] = span(center2, rem3, nrm[1]);
    for (long long c2 = lo2; c2 <= hi2; ++c2) {
      const double t2 = double(c2) + mu[2][1] * double(c3);
      const double rem2 = rem3 - nrm[1] * t2 * t2;
      const double center1 = -(mu[1][0] * double(c2) + mu[2][0] * double(c3));
      const auto [lo1, hi1] = span(center1, rem2, nrm[0]);
      for (long long c1 = lo1; c1 <= hi1; ++c1) {
        Vec3 v;
        for (int c = 0; c < 3; ++c) {
          v[c] = Integer(static_cast<long>(c1)) * basis[0][c] +
                 Integer(static_cast<long>(c2)) * basis[1][c] +
                 Integer(static_cast<long>(c3)) * basis[2][c];
        }
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        const Integer weight = w.dot(v, v);
        if (weight > radius) continue;
        if (v[0] * v[0] - w.a * v[1] * v[1] - w.b * v[2] * v[2] != 0) continue;
        Candidate cand{primitive_form(TernarySolution{0, 0, v[0], v[1], v[2]}), weight};
        if (!best || better(cand, *best)) best = std::move(cand);
      }
    }
  }
  return best;
}

TernarySolution lattice_search(std::uint64_t a, std::uint64_t b, const Factored& f) {
  const std::uint64_t modulus = a * b;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> roots;
  // Roots of a modulo the primes of b, then roots of b modulo the primes of a.
  for (std::uint64_t q : f.b_primes) {
    primes.push_back(q);
    roots.push_back(sqrt_mod_unchecked(a % q, q));
  }
  for (std::uint64_t q : f.a_primes) {
    primes.push_back(q);
    roots.push_back(sqrt_mod_unchecked(b % q, q));
  }
  const std::size_t nb = f.b_primes.size();
  const Weighted w{Integer(a), Integer(b)};
  const Integer radius = 3 * Integer(a) * Integer(b);

  // Negating every root reflects the lattice through x -> -x, so the first
  // root's sign stays fixed.
  const std::size_t patterns = std::size_t{1} << (primes.size() - 1);
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    std::vector<std::uint64_t> r_res(primes.size(), 0), s_res(primes.size(), 0);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const bool flip = i > 0 && ((mask >> (i - 1)) & 1);
      const std::uint64_t root = flip ? primes[i] - roots[i] : roots[i];
      (i < nb ? r_res : s_res)[i] = root;
    }
    const std::uint64_t big_r = crt_combine(primes, r_res, modulus);
    const std::uint64_t big_s = crt_combine(primes, s_res, modulus);
    std::array<Vec3, 3> basis = {Vec3{Integer(modulus), Integer(0), Integer(0)},
                                 Vec3{Integer(big_r), Integer(1), Integer(0)},
                                 Vec3{Integer(big_s), Integer(0), Integer(1)}};
    if (auto found = enumerate_lattice(basis, w, radius)) {
      found->sol.a = a;
      found->sol.b = b;
      return found->sol;
    }
  }
  throw SearchExhaustedError("solve_ternary" + pair_str(a, b) +
                             ": lattice enumeration found no solution");
}

std::vector<TernarySolution> walk(const TernarySolution& base, std::size_t count, int radius,
                                  bool skip_base) {
  std::vector<TernarySolution> out;
  if (count == 0) return out;
  const Integer a(base.a), b(base.b);
  for (int r = 1; r <= radius; ++r) {
    for (int i = -r; i <= r; ++i) {
      for (int j = -r; j <= r; ++j) {
        for (int k = -r; k <= r; ++k) {
          if (std::max({std::abs(i), std::abs(j), std::abs(k)}) != r) continue;
          const Integer ri(i), rj(j), rk(k);
          const Integer q = ri * ri - a * rj * rj - b * rk * rk;
          const Integer bil = base.x * ri - a * base.y * rj - b * base.z * rk;
          TernarySolution p{base.a, base.b, q * base.x - 2 * bil * ri, q * base.y - 2 * bil * rj,
                            q * base.z - 2 * bil * rk};
          if (p.x == 0 && p.y == 0 && p.z == 0) continue;
          p = primitive_form(std::move(p));
          if (!z_is_odd(p)) continue;
          if (skip_base && p == base) continue;
          if (std::find(out.begin(), out.end(), p) != out.end()) continue;
          out.push_back(std::move(p));
          if (out.size() == count) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

TernarySolution primitive_form(TernarySolution s) {
  s.x = abs(s.x);
  s.y = abs(s.y);
  s.z = abs(s.z);
  Integer g;
  mpz_gcd(g.get_mpz_t(), s.x.get_mpz_t(), s.y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.z.get_mpz_t());
  if (g > 1) {
    s.x /= g;
    s.y /= g;
    s.z /= g;
  }
  return s;
}

bool is_normalized(const TernarySolution& s) {
  if (s.x <= 0 || s.y < 0 || s.z <= 0 || !z_is_odd(s)) return false;
  if (s.x * s.x != Integer(s.a) * s.y * s.y + Integer(s.b) * s.z * s.z) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), s.x.get_mpz_t(), s.y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.z.get_mpz_t());
  return g == 1;
}

TernarySolution solve_ternary(std::uint64_t a, std::uint64_t b, const TernaryOptions& options) {
  const Factored f = validate(a, b);
  if (auto found = box_search(a, b, options.brute_force_budget)) return *found;
  TernarySolution sol = lattice_search(a, b, f);
  if (z_is_odd(sol)) return sol;
  auto odd = walk(sol, 1, options.walk_radius, false);
  if (odd.empty()) {
    throw SearchExhaustedError("solve_ternary" + pair_str(a, b) +
                               ": no solution with odd z near " + sol.x.get_str() + ", " +
                               sol.y.get_str() + ", " + sol.z.get_str());
  }
  return odd.front();
}

std::vector<TernarySolution> alternate_ternary_solutions(const TernarySolution& base,
                                                         std::size_t count, int walk_radius) {
  return walk(base, count, walk_radius, true);
}

}  // namespace narrow2
