#include "narrow2/maximality.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "narrow2/errors.hpp"
#include "narrow2/residues.hpp"

namespace narrow2 {

std::uint64_t AcceptableVector::omega_total() const {
  std::uint64_t total = 0;
  for (const auto& f : factors) total += f.size();
  return total;
}

AcceptableVector parse_acceptable(const std::vector<std::uint64_t>& entries) {
  AcceptableVector v;
  v.entries = entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::uint64_t a = entries[i];
    const std::string where = "entry " + std::to_string(i + 1) + " (" + std::to_string(a) + ")";
    if (a < 2) throw AcceptabilityError(i, where + " is smaller than 2");
    auto f = factorize(a);
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw AcceptabilityError(i, where + " is not squarefree");
    }
    for (std::uint64_t p : f) {
      if (p % 4 != 1) {
        throw AcceptabilityError(i, where + " has the prime factor " + std::to_string(p) +
                                        " = " + std::to_string(p % 4) + " mod 4");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(entries[j], a) != 1) {
        throw AcceptabilityError(i, where + " shares a prime with entry " + std::to_string(j + 1));
      }
    }
    v.factors.push_back(std::move(f));
  }
  return v;
}

std::int64_t torsion_bound(const AcceptableVector& v) {
  const std::size_t n = v.size();
  if (n == 0) return 0;
  if (n > 60) throw ArgumentError("torsion_bound: dimension too large");
  const std::int64_t half = std::int64_t{1} << (n - 1);
  return static_cast<std::int64_t>(v.omega_total()) * half - 2 * half + 1;
}

std::int64_t ray_class_bound(const AcceptableVector& v, std::uint64_t c) {
  if (c == 0) throw ArgumentError("ray_class_bound: modulus must be positive");
  const auto f = factorize(c);
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw ArgumentError("ray_class_bound: modulus " + std::to_string(c) + " is not squarefree");
  }
  for (std::uint64_t l : f) {
    if (l % 4 != 1) {
      throw ArgumentError("ray_class_bound: modulus prime " + std::to_string(l) +
                          " is not 1 mod 4");
    }
  }
  for (std::uint64_t a : v.entries) {
    if (std::gcd(a, c) != 1) {
      throw ArgumentError("ray_class_bound: modulus " + std::to_string(c) +
                          " shares a prime with entry " + std::to_string(a));
    }
  }
  const std::int64_t scale = std::int64_t{1} << v.size();
  return torsion_bound(v) + scale * static_cast<std::int64_t>(f.size());
}

ConsistencyResult is_strongly_quadratically_consistent(const AcceptableVector& v) {
  ConsistencyResult out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      for (std::uint64_t p : v.factors[i]) {
        for (std::uint64_t q : v.factors[j]) {
          if (jacobi(p % q, q) != 1) {
            out.consistent = false;
            out.failures.push_back({p, q, i, j});
          }
        }
      }
    }
  }
  return out;
}

std::string kind_name(Condition::Kind kind) {
  return kind == Condition::Kind::legendre ? "legendre" : "redei";
}

MaximalityReport is_maximal(const AcceptableVector& v, RedeiCache* cache,
                            const MaximalityOptions& options) {
  const std::size_t n = v.size();
  if (n == 0) throw ArgumentError("is_maximal: empty vector");
  if (n > 3) {
    throw UnsupportedDimensionError("unsupported dimension " + std::to_string(n) +
                                    ": maximality is certified for n <= 3 only");
  }
  MaximalityReport report;
  report.n = n;
  report.omega_total = v.omega_total();
  report.bound = torsion_bound(v);

  auto record = [&](Condition c) {
    if (!c.passed) report.failed_conditions.push_back(c);
    report.transcript.push_back(std::move(c));
  };

  // Cross Legendre symbols. For primes = 1 mod 4 the symbol is symmetric, so
  // each unordered pair is listed once.
  bool consistent = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::uint64_t p : v.factors[i]) {
        for (std::uint64_t q : v.factors[j]) {
          const int value = jacobi(p % q, q);
          consistent = consistent && value == 1;
          record({Condition::Kind::legendre, {p, q}, value, value == 1});
        }
      }
    }
  }

  if (n == 3 && consistent) {
    RedeiCache local;
    RedeiCache& memo = cache ? *cache : local;
    static constexpr std::array<std::array<std::size_t, 3>, 6> kOrders = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& [i, j, k] : kOrders) {
      for (std::uint64_t p : v.factors[j]) {
        for (std::uint64_t r : v.factors[k]) {
          int value = 0;
          if (options.prime_by_prime) {
            for (std::uint64_t q : v.factors[i]) value ^= memo.prime_symbol(q, p, r);
          } else {
            auto ctx = memo.context(v.entries[i], p);
            value = redei_symbol(*ctx, r);
          }
          record({Condition::Kind::redei, {v.entries[i], p, r}, value, value == 0});
        }
      }
    }
  }

  report.verdict = report.failed_conditions.empty();
  return report;
}

}  // namespace narrow2
