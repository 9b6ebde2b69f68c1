#include "narrow2/expansion.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "narrow2/errors.hpp"

namespace narrow2 {

namespace {

void check_rank(unsigned t) {
  if (t > kMaxExpansionRank) {
    throw ArgumentError("expansion group rank " + std::to_string(t) + " exceeds " +
                        std::to_string(kMaxExpansionRank));
  }
}

void check_same(unsigned a, unsigned b) {
  if (a != b) {
    throw ArgumentError("expansion elements over index sets of size " + std::to_string(a) +
                        " and " + std::to_string(b));
  }
}

// Bit S set iff i is not in S, for S ranging over subsets of a 6-element set.
constexpr std::uint64_t kLacks[kMaxExpansionRank] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

std::uint64_t full_mask(unsigned t) {
  const unsigned bits = 1u << t;
  return bits == 64 ? ~0ull : ((1ull << bits) - 1);
}

}  // namespace

std::vector<std::uint32_t> subsets_in_order(unsigned t) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << t); ++s) out.push_back(s);
  auto members = [](std::uint32_t s) {
    std::vector<int> m;
    for (int i = 0; s >> i; ++i) {
      if ((s >> i) & 1) m.push_back(i);
    }
    return m;
  };
  std::sort(out.begin(), out.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return members(a) < members(b);
  });
  return out;
}

NilpotentElement operator+(NilpotentElement lhs, const NilpotentElement& rhs) {
  check_same(lhs.t, rhs.t);
  lhs.coeffs ^= rhs.coeffs;
  return lhs;
}

NilpotentElement operator*(const NilpotentElement& lhs, const NilpotentElement& rhs) {
  check_same(lhs.t, rhs.t);
  NilpotentElement out{lhs.t, 0};
  const std::uint32_t n = 1u << lhs.t;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (!lhs.coefficient(s)) continue;
    for (std::uint32_t r = 0; r < n; ++r) {
      if ((s & r) == 0 && rhs.coefficient(r)) out.coeffs ^= 1ull << (s | r);
    }
  }
  return out;
}

NilpotentElement act(std::uint32_t u, NilpotentElement alpha) {
  for (unsigned i = 0; i < alpha.t; ++i) {
    if ((u >> i) & 1) alpha.coeffs ^= (alpha.coeffs & kLacks[i]) << (1u << i);
  }
  alpha.coeffs &= full_mask(alpha.t);
  return alpha;
}

ExpansionElement identity_element(unsigned t) {
  check_rank(t);
  return ExpansionElement{NilpotentElement{t, 0}, 0};
}

ExpansionElement monomial_element(unsigned t, std::uint32_t subset) {
  check_rank(t);
  if (subset >= (1u << t)) throw ArgumentError("monomial outside the index set");
  return ExpansionElement{NilpotentElement{t, 1ull << subset}, 0};
}

ExpansionElement vector_element(unsigned t, std::uint32_t u) {
  check_rank(t);
  if (u >= (1u << t)) throw ArgumentError("vector outside F2^T");
  return ExpansionElement{NilpotentElement{t, 0}, u};
}

ExpansionElement multiply(const ExpansionElement& g, const ExpansionElement& h) {
  check_same(g.algebra.t, h.algebra.t);
  return ExpansionElement{g.algebra + act(g.vector, h.algebra), g.vector ^ h.vector};
}

ExpansionElement inverse(const ExpansionElement& g) {
  return ExpansionElement{act(g.vector, g.algebra), g.vector};
}

ExpansionElement central_element(unsigned t) {
  if (t == 0) throw ArgumentError("central_element needs a nonempty index set");
  return monomial_element(t, (1u << t) - 1);
}

CharacterValues project_characters(const ExpansionElement& g) {
  CharacterValues out;
  for (unsigned i = 0; i < g.algebra.t; ++i) out.pi.push_back((g.vector >> i) & 1);
  out.chi_tilde = g.algebra.coefficient(0) ? 1 : 0;
  return out;
}

bool check_cochain_recursion(const CochainTable& table,
                             const std::vector<std::pair<std::size_t, std::size_t>>& samples) {
  const std::uint32_t subsets = 1u << table.t;
  auto entry = [&](std::uint32_t s, std::size_t e) {
    if (s >= table.phi.size() || e >= table.phi[s].size() || table.phi[s][e] < 0) {
      throw IncompleteDataError("cochain table has no value for phi_" + std::to_string(s) +
                                " at element " + std::to_string(e));
    }
    return table.phi[s][e];
  };
  auto chi = [&](std::uint32_t u, std::size_t e) {
    int v = 1;
    for (unsigned i = 0; i < table.t; ++i) {
      if (!((u >> i) & 1)) continue;
      if (i >= table.characters.size() || e >= table.characters[i].size() ||
          table.characters[i][e] < 0) {
        throw IncompleteDataError("cochain table has no value for chi_" + std::to_string(i) +
                                  " at element " + std::to_string(e));
      }
      v &= table.characters[i][e];
    }
    return v;
  };
  for (const auto& [s, t] : samples) {
    if (s >= table.domain_size || t >= table.domain_size) {
      throw IncompleteDataError("sample outside the cochain domain");
    }
    const int st = table.product_of(s, t);
    if (st < 0) {
      throw IncompleteDataError("cochain table has no product for elements " +
                                std::to_string(s) + " and " + std::to_string(t));
    }
    for (std::uint32_t S = 0; S < subsets; ++S) {
      int rhs = entry(S, s) ^ entry(S, t);
      for (std::uint32_t U = S; U != 0; U = (U - 1) & S) rhs ^= chi(U, s) & entry(S & ~U, t);
      if (entry(S, static_cast<std::size_t>(st)) != rhs) return false;
    }
  }
  return true;
}

ExpansionElement table_image(const CochainTable& table, std::size_t element) {
  ExpansionElement g = identity_element(table.t);
  for (std::uint32_t s = 0; s < (1u << table.t); ++s) {
    if (table.phi.at(s).at(element) == 1) g.algebra.coeffs |= 1ull << s;
  }
  for (unsigned i = 0; i < table.t; ++i) {
    if (table.characters.at(i).at(element) == 1) g.vector |= 1u << i;
  }
  return g;
}

}  // namespace narrow2
