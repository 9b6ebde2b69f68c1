#include <gtest/gtest.h>

#include "narrow2/additive.hpp"
#include "narrow2/errors.hpp"
#include "narrow2/serialize.hpp"
#include "oracles.hpp"

using namespace narrow2;

namespace {

// Own mixed-radix bookkeeping: coordinate i ranges over n_i^2 codes when i is
// in S and over n_i otherwise; coordinate 0 is most significant.
struct Ambient {
  std::vector<std::size_t> radix;
  explicit Ambient(const AdditiveSystem& s, std::uint32_t S) {
    for (unsigned i = 0; i < s.d; ++i) {
      const std::size_t n = s.ground_sets[i].size();
      radix.push_back(((S >> i) & 1) ? n * n : n);
    }
  }
  std::size_t size() const {
    std::size_t t = 1;
    for (std::size_t r : radix) t *= r;
    return t;
  }
  std::size_t index(const std::vector<std::size_t>& codes) const {
    std::size_t x = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) x = x * radix[i] + codes[i];
    return x;
  }
  std::vector<std::size_t> codes(std::size_t x) const {
    std::vector<std::size_t> out(radix.size());
    for (std::size_t i = radix.size(); i-- > 0;) {
      out[i] = x % radix[i];
      x /= radix[i];
    }
    return out;
  }
};

// Membership of every C_S recomputed from C_empty by the closure rule, in
// increasing order of |S|.
std::vector<std::vector<bool>> recount_membership(const AdditiveSystem& s) {
  const std::uint32_t count = 1u << s.d;
  std::vector<std::vector<bool>> c(count);
  std::vector<std::vector<bool>> acc(count);
  for (unsigned size = 0; size <= s.d; ++size) {
    for (std::uint32_t S = 0; S < count; ++S) {
      if (static_cast<unsigned>(__builtin_popcount(S)) != size) continue;
      const Ambient amb(s, S);
      c[S].assign(amb.size(), false);
      acc[S].assign(amb.size(), false);
      for (std::size_t x = 0; x < amb.size(); ++x) {
        bool in = true;
        if (S == 0) {
          in = s.c[0][x] != 0;
        } else {
          auto codes = amb.codes(x);
          for (unsigned j = 0; j < s.d && in; ++j) {
            if (!((S >> j) & 1)) continue;
            const std::size_t n = s.ground_sets[j].size();
            const std::uint32_t T = S & ~(1u << j);
            const Ambient lower(s, T);
            auto special = codes;
            for (std::size_t e : {codes[j] / n, codes[j] % n}) {
              special[j] = e;
              in = in && acc[T][lower.index(special)];
            }
          }
        }
        c[S][x] = in;
        acc[S][x] = in && s.f[S][x] == 0;
      }
    }
  }
  return c;
}

std::size_t accepted_count(const AdditiveSystem& s, std::uint32_t S) {
  const auto c = recount_membership(s);
  std::size_t hits = 0;
  for (std::size_t x = 0; x < c[S].size(); ++x) hits += c[S][x] && s.f[S][x] == 0;
  return hits;
}

AdditiveSystem random_case(oracle::Rng& rng, unsigned max_d, std::size_t max_size, unsigned max_dim) {
  const unsigned d = static_cast<unsigned>(rng.below(max_d + 1));
  std::vector<std::size_t> sizes;
  for (unsigned i = 0; i < d; ++i) sizes.push_back(1 + rng.below(max_size));
  return random_bilinear_system(rng.next(), d, sizes, max_dim);
}

}  // namespace

TEST(Additive, ZeroSystemIsValidAndFull) {
  for (unsigned d = 0; d <= 3; ++d) {
    const auto s = zero_system(std::vector<std::size_t>(d, 3), 1);
    EXPECT_TRUE(validate(s).valid);
    EXPECT_EQ(density_empty(s), 1);
    const auto r = verify_shrinking(s);
    EXPECT_EQ(r.lhs, 1);
    EXPECT_TRUE(r.holds);
    if (d >= 1) {
      const auto e = equivalence_structure(s, std::vector<std::size_t>(d - 1, 0));
      EXPECT_TRUE(e.is_equivalence);
      EXPECT_EQ(e.blocks.size(), 1u);
      EXPECT_EQ(e.v.size(), 3u);
    }
  }
}

TEST(Additive, EmptyAcceptedSetHasDensityZero) {
  auto s = zero_system({2, 2}, 1);
  for (auto& v : s.f[0]) v = 1;
  derive_membership(s);
  EXPECT_TRUE(validate(s).valid);
  EXPECT_EQ(density_empty(s), 0);
  EXPECT_EQ(verify_shrinking(s).lhs, 0);
}

TEST(Additive, DimensionZeroCase) {
  auto s = zero_system({}, 0);
  auto r = verify_shrinking(s);
  EXPECT_EQ(r.lhs, r.delta);
  EXPECT_EQ(r.rhs, r.delta);
  EXPECT_TRUE(r.holds);

  // With a nontrivial value group the right side is delta / a.
  s = zero_system({}, 2);
  r = verify_shrinking(s);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_EQ(r.rhs, mpq_class(1, 4));

  s.f[0][0] = 3;
  r = verify_shrinking(s);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_EQ(r.rhs, 0);
  EXPECT_TRUE(r.holds);
}

TEST(Additive, SingleCoordinateDiagonalVanishes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_bilinear_system(seed, 1, {2}, 2);
    ASSERT_EQ(s.f[1].size(), 4u);
    EXPECT_EQ(s.f[1][0], 0u);  // (x1_0, x1_0)
    EXPECT_EQ(s.f[1][3], 0u);  // (x1_1, x1_1)
  }
}

TEST(Additive, GeneratorIsReproducible) {
  const auto a = dump(additive_to_json(random_bilinear_system(7, 2, {3, 3}, 2)));
  const auto b = dump(additive_to_json(random_bilinear_system(7, 2, {3, 3}, 2)));
  EXPECT_EQ(a, b);
  const auto c = dump(additive_to_json(random_bilinear_system(8, 2, {3, 3}, 2)));
  EXPECT_NE(a, c);
}

TEST(Additive, RandomSystemsMatchRecount) {
  oracle::Rng rng(71);
  for (int i = 0; i < 150; ++i) {
    const auto s = random_case(rng, 3, 4, 2);
    ASSERT_TRUE(validate(s).valid) << i;
    const auto c = recount_membership(s);
    for (std::uint32_t S = 0; S < (1u << s.d); ++S) {
      for (std::size_t x = 0; x < c[S].size(); ++x) ASSERT_EQ(c[S][x], s.c[S][x] != 0);
    }
    const std::size_t amb0 = Ambient(s, 0).size();
    const std::size_t ambf = Ambient(s, s.full()).size();
    mpq_class delta(accepted_count(s, 0), amb0), lhs(accepted_count(s, s.full()), ambf);
    delta.canonicalize();
    lhs.canonicalize();
    EXPECT_EQ(density_empty(s), delta);
    const auto r = verify_shrinking(s);
    EXPECT_EQ(r.lhs, lhs);
    EXPECT_TRUE(r.holds) << r.lhs << " < " << r.rhs;
  }
}

TEST(Additive, DiagonalOfAcceptedPointsVanishes) {
  oracle::Rng rng(73);
  for (int i = 0; i < 60; ++i) {
    const auto s = random_case(rng, 3, 4, 2);
    if (s.d == 0) continue;
    const std::uint32_t full = s.full();
    const unsigned last = s.d - 1;
    const std::uint32_t lower = full & ~(1u << last);
    const Ambient lo(s, lower), hi(s, full);
    const std::size_t n = s.ground_sets[last].size();
    for (std::size_t y = 0; y < lo.size(); ++y) {
      if (!s.accepted(lower, y)) continue;
      auto codes = lo.codes(y);
      codes[last] = codes[last] * n + codes[last];
      EXPECT_EQ(s.f[full][hi.index(codes)], 0u);
    }
  }
}

TEST(Additive, EquivalenceBlocksMatchW) {
  oracle::Rng rng(79);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_case(rng, 3, 4, 2);
    if (s.d == 0) continue;
    std::vector<std::size_t> x;
    for (unsigned k = 0; k + 1 < s.d; ++k) {
      const std::size_t n = s.ground_sets[k].size();
      x.push_back(rng.below(n * n));
    }
    const auto e = equivalence_structure(s, x);
    ASSERT_TRUE(e.is_equivalence);
    ASSERT_TRUE(e.violations.empty());
    std::size_t squares = 0, members = 0;
    for (const auto& block : e.blocks) {
      squares += block.size() * block.size();
      members += block.size();
    }
    EXPECT_EQ(e.w_size, squares);
    EXPECT_EQ(members, e.v.size());
  }
}

TEST(Additive, EquivalenceArgumentChecks) {
  const auto s = zero_system({2, 2}, 0);
  EXPECT_THROW(equivalence_structure(s, {}), ArgumentError);
  EXPECT_THROW(equivalence_structure(s, {4}), ArgumentError);
  EXPECT_THROW(equivalence_structure(zero_system({}, 0), {}), ArgumentError);
}

TEST(Additive, AsymmetricRelationIsReported) {
  auto s = zero_system({3}, 1);
  s.f[1][0 * 3 + 1] = 1;  // (x1_0, x1_1) rejected, (x1_1, x1_0) kept
  EXPECT_FALSE(validate(s).valid);
  const auto e = equivalence_structure(s, {});
  EXPECT_FALSE(e.is_equivalence);
  bool symmetry = false;
  for (const auto& v : e.violations) symmetry = symmetry || v.rfind("symmetry", 0) == 0;
  EXPECT_TRUE(symmetry);
}

TEST(Additive, DiagonalMutationsAreDetected) {
  oracle::Rng rng(83);
  int mutated = 0;
  for (int i = 0; i < 80; ++i) {
    const auto s = random_case(rng, 3, 4, 2);
    for (std::uint32_t S = 1; S < (1u << s.d); ++S) {
      const Ambient amb(s, S);
      for (std::size_t x = 0; x < amb.size(); ++x) {
        if (!s.c[S][x]) continue;
        const auto codes = amb.codes(x);
        bool diagonal = false;
        for (unsigned j = 0; j < s.d; ++j) {
          const std::size_t n = s.ground_sets[j].size();
          diagonal = diagonal || (((S >> j) & 1) && codes[j] / n == codes[j] % n);
        }
        if (!diagonal || rng.below(4) != 0) continue;
        auto broken = s;
        broken.f[S][x] ^= 1;
        const auto r = validate(broken);
        ASSERT_FALSE(r.valid);
        ASSERT_FALSE(r.violations.empty());
        ++mutated;
      }
    }
  }
  EXPECT_GT(mutated, 50);
}

TEST(Additive, OffDiagonalMutationsAreDetected) {
  oracle::Rng rng(89);
  int mutated = 0;
  for (int i = 0; i < 80; ++i) {
    const auto s = random_case(rng, 3, 4, 2);
    if (s.d == 0) continue;
    const std::uint32_t S = s.full();
    const Ambient amb(s, S);
    for (std::size_t x = 0; x < amb.size(); ++x) {
      if (!s.c[S][x] || rng.below(3) != 0) continue;
      const auto codes = amb.codes(x);
      // A triple ((a,b), (b,a), (a,a)) through x in some coordinate.
      bool participates = false;
      for (unsigned j = 0; j < s.d && !participates; ++j) {
        const std::size_t n = s.ground_sets[j].size();
        const std::size_t a = codes[j] / n, b = codes[j] % n;
        auto other = codes, diag = codes;
        other[j] = b * n + a;
        diag[j] = a * n + a;
        participates = s.c[S][amb.index(other)] && s.c[S][amb.index(diag)];
      }
      if (!participates) continue;
      auto broken = s;
      broken.f[S][x] ^= 1;
      ASSERT_FALSE(validate(broken).valid);
      ++mutated;
    }
  }
  EXPECT_GT(mutated, 50);
}

TEST(Additive, MembershipTamperingIsDetected) {
  auto s = random_bilinear_system(5, 2, {3, 3}, 1);
  s.c[3][0] ^= 1;
  const auto r = validate(s);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.violations.front().kind, "closure");
  EXPECT_THROW(verify_shrinking(s), ValidationError);

  auto range = zero_system({2}, 0);
  range.f[1][1] = 1;
  EXPECT_EQ(validate(range).violations.front().kind, "range");
}

TEST(Additive, JsonRoundTrip) {
  oracle::Rng rng(97);
  for (int i = 0; i < 30; ++i) {
    const auto s = random_case(rng, 3, 3, 2);
    const Json j = additive_to_json(s);
    const auto back = additive_from_json(j);
    EXPECT_EQ(back.d, s.d);
    EXPECT_EQ(back.ground_sets, s.ground_sets);
    EXPECT_EQ(back.value_dims, s.value_dims);
    EXPECT_EQ(back.f, s.f);
    EXPECT_EQ(back.c, s.c);
    EXPECT_EQ(dump(additive_to_json(back)), dump(j));
  }
}

TEST(Additive, JsonWithoutMembershipIsDerived) {
  Json j = additive_to_json(random_bilinear_system(3, 2, {2, 3}, 1));
  for (auto& entry : j["subsets"]) entry.erase("c");
  const auto s = additive_from_json(j);
  EXPECT_TRUE(s.c_empty_default);
  EXPECT_TRUE(validate(s).valid);
}

TEST(Additive, JsonErrorsCarryLocations) {
  auto location = [](const Json& j) -> std::string {
    try {
      additive_from_json(j);
    } catch (const FormatError& e) {
      return e.location();
    }
    return "";
  };
  const Json good = additive_to_json(zero_system({2}, 0));
  Json missing = good;
  missing.erase("d");
  EXPECT_EQ(location(missing), "$.d");

  Json bad_f = good;
  bad_f["subsets"][1]["f"] = Json::array({0, 0});
  EXPECT_EQ(location(bad_f), "$.subsets[1].f");

  Json two = additive_to_json(zero_system({2, 2}, 0));
  two["subsets"][1].erase("c");
  EXPECT_EQ(location(two), "$.subsets");

  Json wrong_type = good;
  wrong_type["ground_sets"][0][1] = 5;
  EXPECT_EQ(location(wrong_type), "$.ground_sets[0][1]");
  EXPECT_EQ(location(Json::array()), "$");
}
