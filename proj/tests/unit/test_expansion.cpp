#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "narrow2/errors.hpp"
#include "narrow2/expansion.hpp"
#include "narrow2/redei.hpp"
#include "oracles.hpp"

using namespace narrow2;

namespace {

ExpansionElement random_element(oracle::Rng& rng, unsigned t) {
  const std::uint64_t mask = (1u << t) == 64 ? ~0ull : ((1ull << (1u << t)) - 1);
  return ExpansionElement{NilpotentElement{t, rng.next() & mask},
                          static_cast<std::uint32_t>(rng.below(1u << t))};
}

// Product in F2[t_1..t_t]/(t_i^2) on sets of monomials.
std::set<std::uint32_t> poly_mul(const std::set<std::uint32_t>& a, const std::set<std::uint32_t>& b) {
  std::set<std::uint32_t> out;
  for (std::uint32_t s : a) {
    for (std::uint32_t r : b) {
      if (s & r) continue;
      const std::uint32_t m = s | r;
      if (!out.erase(m)) out.insert(m);
    }
  }
  return out;
}

std::set<std::uint32_t> monomials(const NilpotentElement& e) {
  std::set<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << e.t); ++s) {
    if (e.coefficient(s)) out.insert(s);
  }
  return out;
}

}  // namespace

TEST(Expansion, SubsetOrder) {
  EXPECT_EQ(subsets_in_order(3), (std::vector<std::uint32_t>{0, 1, 2, 4, 3, 5, 6, 7}));
  EXPECT_EQ(subsets_in_order(0), (std::vector<std::uint32_t>{0}));
}

TEST(Expansion, HandExamples) {
  const auto e1 = vector_element(1, 1);
  const auto t1 = monomial_element(1, 1);
  EXPECT_EQ(multiply(e1, e1), identity_element(1));
  EXPECT_EQ(multiply(t1, t1), identity_element(1));
  EXPECT_EQ(multiply(multiply(e1, t1), inverse(e1)), t1);
  EXPECT_EQ(central_element(1), t1);
  EXPECT_EQ(central_element(2), monomial_element(2, 3));
  EXPECT_THROW(central_element(0), ArgumentError);
  EXPECT_THROW(multiply(e1, identity_element(2)), ArgumentError);
  EXPECT_THROW(identity_element(kMaxExpansionRank + 1), ArgumentError);
}

TEST(Expansion, ActionIsMultiplicationByOnePlusT) {
  oracle::Rng rng(3);
  for (unsigned t = 1; t <= kMaxExpansionRank; ++t) {
    for (int i = 0; i < 100; ++i) {
      const auto g = random_element(rng, t);
      const std::uint32_t u = static_cast<std::uint32_t>(rng.below(1u << t));
      std::set<std::uint32_t> expected = monomials(g.algebra);
      for (unsigned k = 0; k < t; ++k) {
        if ((u >> k) & 1) expected = poly_mul(expected, {0u, 1u << k});
      }
      ASSERT_EQ(monomials(act(u, g.algebra)), expected);
    }
  }
}

TEST(Expansion, AlgebraProductMatchesReference) {
  oracle::Rng rng(13);
  for (unsigned t = 1; t <= kMaxExpansionRank; ++t) {
    for (int i = 0; i < 50; ++i) {
      const auto a = random_element(rng, t).algebra, b = random_element(rng, t).algebra;
      ASSERT_EQ(monomials(a * b), poly_mul(monomials(a), monomials(b)));
    }
  }
}

TEST(Expansion, GroupAxioms) {
  oracle::Rng rng(17);
  for (unsigned t = 0; t <= kMaxExpansionRank; ++t) {
    const auto id = identity_element(t);
    for (int i = 0; i < 200; ++i) {
      const auto g = random_element(rng, t), h = random_element(rng, t), k = random_element(rng, t);
      ASSERT_EQ(multiply(multiply(g, h), k), multiply(g, multiply(h, k)));
      ASSERT_EQ(multiply(g, id), g);
      ASSERT_EQ(multiply(id, g), g);
      ASSERT_EQ(multiply(g, inverse(g)), id);
      ASSERT_EQ(multiply(inverse(g), g), id);
    }
  }
}

TEST(Expansion, CentralElementCommutes) {
  oracle::Rng rng(19);
  for (unsigned t = 1; t <= kMaxExpansionRank; ++t) {
    const auto z = central_element(t);
    for (int i = 0; i < 100; ++i) {
      const auto g = random_element(rng, t);
      ASSERT_EQ(multiply(multiply(z, g), multiply(inverse(z), inverse(g))), identity_element(t));
    }
  }
}

TEST(Expansion, CharactersAreHomomorphisms) {
  oracle::Rng rng(23);
  EXPECT_EQ(project_characters(vector_element(1, 1)).pi, std::vector<int>{1});
  EXPECT_EQ(project_characters(vector_element(1, 1)).chi_tilde, 0);
  EXPECT_EQ(project_characters(monomial_element(1, 0)).chi_tilde, 1);
  EXPECT_EQ(project_characters(identity_element(2)).pi, (std::vector<int>{0, 0}));
  for (unsigned t = 1; t <= 4; ++t) {
    for (int i = 0; i < 100; ++i) {
      const auto g = random_element(rng, t), h = random_element(rng, t);
      const auto cg = project_characters(g), ch = project_characters(h);
      const auto cgh = project_characters(multiply(g, h));
      ASSERT_EQ(cgh.chi_tilde, cg.chi_tilde ^ ch.chi_tilde);
      for (unsigned k = 0; k < t; ++k) ASSERT_EQ(cgh.pi[k], cg.pi[k] ^ ch.pi[k]);
    }
  }
}

namespace {

// Cochain table of the whole group for |T| = t, read off the coordinates.
CochainTable group_table(unsigned t) {
  std::vector<ExpansionElement> elements;
  for (std::uint64_t c = 0; c < (1ull << (1u << t)); ++c) {
    for (std::uint32_t u = 0; u < (1u << t); ++u) elements.push_back({NilpotentElement{t, c}, u});
  }
  CochainTable table;
  table.t = t;
  table.domain_size = elements.size();
  table.product.assign(elements.size() * elements.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto p = multiply(elements[i], elements[j]);
      const auto it = std::find(elements.begin(), elements.end(), p);
      table.product[i * elements.size() + j] = static_cast<int>(it - elements.begin());
    }
  }
  table.phi.assign(1u << t, std::vector<int>(elements.size()));
  table.characters.assign(t, std::vector<int>(elements.size()));
  for (std::size_t e = 0; e < elements.size(); ++e) {
    for (std::uint32_t s = 0; s < (1u << t); ++s) table.phi[s][e] = elements[e].algebra.coefficient(s);
    for (unsigned i = 0; i < t; ++i) table.characters[i][e] = (elements[e].vector >> i) & 1;
  }
  return table;
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace

TEST(Expansion, CoordinatesSatisfyRecursion) {
  for (unsigned t = 1; t <= 2; ++t) {
    const auto table = group_table(t);
    EXPECT_TRUE(check_cochain_recursion(table, all_pairs(table.domain_size)));
    for (std::size_t e = 0; e < table.domain_size; ++e) {
      ASSERT_EQ(table_image(table, e).algebra.t, t);
    }
  }
}

TEST(Expansion, RedeiTableSatisfiesRecursion) {
  const auto table = redei_cochain_table();
  EXPECT_EQ(table.t, 1u);
  EXPECT_EQ(table.domain_size, 8u);
  EXPECT_TRUE(check_cochain_recursion(table, all_pairs(8)));
  EXPECT_TRUE(check_cochain_recursion(table, {}));
  for (std::size_t s = 0; s < 8; ++s) {
    for (std::size_t t = 0; t < 8; ++t) {
      ASSERT_EQ(table_image(table, static_cast<std::size_t>(table.product_of(s, t))),
                multiply(table_image(table, s), table_image(table, t)));
    }
  }
}

TEST(Expansion, PerturbedTableFails) {
  auto table = redei_cochain_table();
  const auto pairs = all_pairs(8);
  for (std::size_t e = 1; e < 8; ++e) {
    auto broken = table;
    broken.phi[1][e] ^= 1;
    EXPECT_FALSE(check_cochain_recursion(broken, pairs)) << e;
  }
}

TEST(Expansion, MissingEntriesThrow) {
  auto table = redei_cochain_table();
  table.phi[1][3] = -1;
  EXPECT_THROW(check_cochain_recursion(table, all_pairs(8)), IncompleteDataError);
  auto no_product = redei_cochain_table();
  no_product.product[9] = -1;
  EXPECT_THROW(check_cochain_recursion(no_product, {{1, 1}}), IncompleteDataError);
}
