#include <gtest/gtest.h>

#include "narrow2/errors.hpp"
#include "narrow2/maximality.hpp"
#include "narrow2/rayclass.hpp"
#include "narrow2/units.hpp"
#include "oracles.hpp"

using namespace narrow2;

namespace {

// Image of the fundamental unit of Q(sqrt d) under sqrt d -> s in F_l,
// computed from the exact unit.
std::uint64_t unit_image(std::uint64_t d, std::uint64_t l, std::uint64_t s) {
  const auto e = fundamental_unit(d);
  const Integer L(std::to_string(l));
  const std::uint64_t u = std::stoull(Integer(e.u % L).get_str());
  const std::uint64_t v = std::stoull(Integer(e.v % L).get_str());
  std::uint64_t value = (u + oracle::mulmod(v, s, l)) % l;
  if (e.half) value = oracle::mulmod(value, (l + 1) / 2, l);
  return value;
}

}  // namespace

TEST(Units, SquareModMatchesExactUnit) {
  for (std::uint64_t d : {5u, 13u, 29u, 41u, 61u, 65u, 109u, 221u, 1105u}) {
    for (std::uint64_t l : oracle::primes_1mod4(5, 400)) {
      if (d % l == 0 || oracle::euler(d, l) != 1) continue;
      for (bool larger : {false, true}) {
        std::uint64_t s = *oracle::smallest_sqrt(d, l);
        s = std::min(s, l - s);
        if (larger) s = l - s;
        const std::uint64_t image = unit_image(d, l, s);
        std::uint64_t residue = 0;
        const bool square = unit_is_square_mod(d, l, larger, &residue);
        ASSERT_EQ(residue, image) << d << " " << l;
        ASSERT_EQ(square, oracle::euler(image, l) == 1) << d << " " << l;
      }
    }
  }
}

TEST(Units, ControlPair) {
  // (5, 41) is a maximal pair, yet eps_41 = 32 + 5 sqrt 41 reduces to 2 mod 5.
  EXPECT_TRUE(is_maximal(parse_acceptable({5, 41})).verdict);
  std::uint64_t residue = 0;
  EXPECT_FALSE(unit_is_square_mod(41, 5, false, &residue));
  EXPECT_EQ(residue, 2u);
  EXPECT_TRUE(unit_is_square_mod(29, 5));
}

TEST(RayClass, UnitReportRows) {
  const auto r = verify_unit_reduction(parse_acceptable({29}), 5);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.subfields, std::vector<std::uint64_t>{29});
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_TRUE(r.rows[0].split);
  EXPECT_TRUE(r.rows[0].unit_is_square);
  EXPECT_EQ(r.minus_one_primes, std::vector<std::uint64_t>{5});
  EXPECT_TRUE(r.minus_one_square);
  EXPECT_TRUE(r.full_unit_group);

  const auto three = verify_unit_reduction(parse_acceptable({5, 13, 17}), 29);
  EXPECT_EQ(three.subfields.size(), 7u);
  EXPECT_EQ(three.subfields, (std::vector<std::uint64_t>{5, 13, 17, 65, 85, 221, 1105}));
  EXPECT_FALSE(three.full_unit_group);
}

TEST(RayClass, NonSplitControlGivesFalseRow) {
  // (13/5) = -1, so 5 is inert in Q(sqrt 13).
  const auto r = verify_unit_reduction(parse_acceptable({13}), 5);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_FALSE(r.rows[0].split);
  EXPECT_FALSE(r.rows[0].evaluated);
  EXPECT_FALSE(r.verdict);
}

TEST(RayClass, TrivialModulusIsVacuous) {
  const auto r = verify_unit_reduction(parse_acceptable({13, 17}), 1);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.rows.empty());
}

TEST(RayClass, RootChoiceDoesNotMatter) {
  oracle::Rng rng(101);
  const auto primes = oracle::primes_1mod4(5, 600);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = rng.pick(primes), b = rng.pick(primes), c = rng.pick(primes);
    if (a == b || b == c || a == c) continue;
    const auto v = parse_acceptable({a, b});
    const auto lo = verify_unit_reduction(v, c, {false});
    const auto hi = verify_unit_reduction(v, c, {true});
    EXPECT_EQ(lo.verdict, hi.verdict);
    for (std::size_t k = 0; k < lo.rows.size(); ++k) {
      EXPECT_EQ(lo.rows[k].unit_is_square, hi.rows[k].unit_is_square);
    }
  }
}

TEST(RayClass, PredictionExamples) {
  EXPECT_EQ(predicted_ray_dimension(parse_acceptable({13}), 5).value, 2);
  EXPECT_EQ(predicted_ray_dimension(parse_acceptable({13}), 1).value, 0);
  EXPECT_EQ(predicted_ray_dimension(parse_acceptable({13, 17}), 29).value, 5);
  const auto p = predicted_ray_dimension(parse_acceptable({29}), 5);
  EXPECT_TRUE(p.certified);
  EXPECT_TRUE(p.attained);
  EXPECT_FALSE(predicted_ray_dimension(parse_acceptable({41}), 5).attained);
  EXPECT_THROW(predicted_ray_dimension(parse_acceptable({65}), 13), ArgumentError);
}

TEST(RayClass, PredictionExceedsTorsionBoundByCharacters) {
  oracle::Rng rng(103);
  const auto primes = oracle::primes_1mod4(5, 500);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::uint64_t> used;
    auto fresh = [&] {
      while (true) {
        const std::uint64_t p = rng.pick(primes);
        if (std::find(used.begin(), used.end(), p) == used.end()) {
          used.push_back(p);
          return p;
        }
      }
    };
    const std::size_t n = 1 + rng.below(3);
    std::vector<std::uint64_t> entries;
    for (std::size_t k = 0; k < n; ++k) entries.push_back(fresh());
    std::uint64_t c = 1;
    const std::size_t wc = rng.below(3);
    for (std::size_t k = 0; k < wc; ++k) c *= fresh();
    const auto v = parse_acceptable(entries);
    EXPECT_EQ(predicted_ray_dimension(v, c).value - torsion_bound(v),
              static_cast<std::int64_t>((std::uint64_t{1} << n) * wc));
  }
}

TEST(GpScript, Content) {
  const auto pair = emit_gp_script(parse_acceptable({13, 17}), 1);
  EXPECT_NE(pair.find("EXPECTED narrow_rank 1"), std::string::npos);
  EXPECT_NE(pair.find("bnfnarrow"), std::string::npos);
  EXPECT_EQ(pair.find("bnrinit"), std::string::npos);
  EXPECT_EQ(pair, emit_gp_script(parse_acceptable({13, 17}), 1));

  const auto ray = emit_gp_script(parse_acceptable({5, 13, 17}), 29);
  EXPECT_NE(ray.find("bnrinit"), std::string::npos);
  EXPECT_NE(ray.find("narrow_rank"), std::string::npos);

  EXPECT_THROW(emit_gp_script(parse_acceptable({5, 29, 109, 181}), 1), UnsupportedDimensionError);
}

TEST(GpScript, BoundLineWhenNotMaximal) {
  const auto s = emit_gp_script(parse_acceptable({5, 13}), 1);
  EXPECT_EQ(s.find("EXPECTED narrow_rank"), std::string::npos);
  EXPECT_NE(s.find("BOUND narrow_rank 1"), std::string::npos);
}
