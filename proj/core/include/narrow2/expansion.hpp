#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace narrow2 {

// Subsets of T = {0, ..., t-1} are bitmasks. Canonical order is by size,
// then lexicographically on the sorted members.
std::vector<std::uint32_t> subsets_in_order(unsigned t);

// Element of F2[t_0, ..., t_{n-1}] / (t_i^2). Bit S of `coeffs` is the
// coefficient of the monomial t_S.
struct NilpotentElement {
  unsigned t = 0;
  std::uint64_t coeffs = 0;

  bool coefficient(std::uint32_t subset) const { return (coeffs >> subset) & 1; }
  bool operator==(const NilpotentElement&) const = default;
};

NilpotentElement operator+(NilpotentElement lhs, const NilpotentElement& rhs);
NilpotentElement operator*(const NilpotentElement& lhs, const NilpotentElement& rhs);

// Multiplication by prod_i (1 + t_i)^{u_i}, i.e. the action of u in F2^T.
NilpotentElement act(std::uint32_t u, NilpotentElement alpha);

// (alpha, u) in F2[F2^T] x| F2^T.
struct ExpansionElement {
  NilpotentElement algebra;
  std::uint32_t vector = 0;

  bool operator==(const ExpansionElement&) const = default;
};

inline constexpr unsigned kMaxExpansionRank = 6;

ExpansionElement identity_element(unsigned t);
ExpansionElement monomial_element(unsigned t, std::uint32_t subset);  // (t_S, 0)
ExpansionElement vector_element(unsigned t, std::uint32_t u);         // (0, u)

// (a, u)(b, v) = (a + u.b, u + v). Throws ArgumentError on mismatched T.
ExpansionElement multiply(const ExpansionElement& g, const ExpansionElement& h);
ExpansionElement inverse(const ExpansionElement& g);

// (t_T, 0). Throws ArgumentError for t = 0.
ExpansionElement central_element(unsigned t);

struct CharacterValues {
  std::vector<int> pi;  // one per member of T
  int chi_tilde = 0;    // augmentation of the algebra part
};

CharacterValues project_characters(const ExpansionElement& g);

// Extensional description of candidate cochains phi_S on a finite domain of
// group elements 0..N-1. Missing entries are -1.
struct CochainTable {
  unsigned t = 0;
  std::size_t domain_size = 0;
  std::vector<int> product;                   // N*N, index of sigma*tau
  std::vector<std::vector<int>> phi;          // [subset mask][element]
  std::vector<std::vector<int>> characters;   // [i][element], chi_i

  int product_of(std::size_t sigma, std::size_t tau) const {
    return product[sigma * domain_size + tau];
  }
};

// Checks, for every sampled (sigma, tau) and every S,
//   phi_S(st) = phi_S(s) + phi_S(t) + sum_{0 != U <= S} chi_U(s) phi_{S-U}(t).
// Throws IncompleteDataError when a needed entry is missing.
bool check_cochain_recursion(const CochainTable& table,
                             const std::vector<std::pair<std::size_t, std::size_t>>& samples);

// Evaluates the cochains of `table` at an element: the image in the
// expansion group.
ExpansionElement table_image(const CochainTable& table, std::size_t element);

}  // namespace narrow2
