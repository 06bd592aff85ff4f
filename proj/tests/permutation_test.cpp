#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "tsuboi/permutation.hpp"

namespace tsuboi {
namespace {

Permutation P(const char* s) { return parse_cycles(s); }

TEST(Compose, IdentityAndInvolution)
{
  auto s = P("(1 5 2)(3 7)");
  EXPECT_EQ(compose(Permutation{}, s), s);
  EXPECT_EQ(compose(s, Permutation{}), s);
  EXPECT_TRUE(compose(P("(1 2)"), P("(1 2)")).is_identity());
}

TEST(Compose, RightToLeftConvention)
{
  // (3,1,5,6)(1,2,3,4): apply (1 2 3 4) first.
  EXPECT_EQ(compose(P("(3 1 5 6)"), P("(1 2 3 4)")), P("(1 2)(3 4 5 6)"));
  auto c = compose(P("(1 2)"), P("(2 3)"));
  EXPECT_EQ(c(1), 2u);
  EXPECT_EQ(c(2), 3u);
  EXPECT_EQ(c(3), 1u);
}

TEST(Inverse, Basics)
{
  EXPECT_TRUE(inverse(Permutation{}).is_identity());
  EXPECT_EQ(inverse(P("(1 2 3)")), P("(1 3 2)"));
  for (std::uint32_t k = 0; k < 6; ++k)
    EXPECT_EQ(inverse(canonical_iota(k)), canonical_iota(k));
}

TEST(Conjugate, Basics)
{
  auto s = P("(1 4)(2 3 6)");
  EXPECT_EQ(conjugate(s, Permutation{}), s);
  EXPECT_EQ(conjugate(P("(1 2)"), P("(2 3)")), P("(1 3)"));
}

TEST(CycleTypeTest, Canonical)
{
  EXPECT_TRUE(cycle_type(Permutation{}).empty());
  EXPECT_EQ(cycle_type(canonical_iota(3)), (CycleType{2, 2, 2}));
  EXPECT_EQ(cycle_type(canonical_gamma(5)), (CycleType{5}));
  EXPECT_EQ(CycleType({2, 1, 3, 1}).lengths(), (std::vector<std::uint32_t>{3, 2}));
  EXPECT_EQ(CycleType::parse("2+2+2"), CycleType::involution(3));
  EXPECT_EQ((CycleType{3, 2}).to_string(), "3+2");
  EXPECT_THROW(CycleType::parse("2++3"), ParseError);
}

TEST(SupportNorm, Values)
{
  EXPECT_EQ(support_norm(Permutation{}), 0u);
  for (std::uint32_t k = 0; k < 10; ++k)
    EXPECT_EQ(support_norm(canonical_iota(k)), 2 * k);
  EXPECT_EQ(support_norm(P("(1 2 3)")), 3u);
}

TEST(Sign, Values)
{
  EXPECT_EQ(sign(Permutation{}), 1);
  for (std::uint32_t k = 0; k < 8; ++k)
    EXPECT_EQ(sign(canonical_iota(k)), k % 2 ? -1 : 1);
  for (std::uint32_t n = 1; n < 9; ++n)
    EXPECT_EQ(sign(canonical_gamma(n)), (n - 1) % 2 ? -1 : 1);
}

TEST(CanonicalReps, Packing)
{
  EXPECT_TRUE(canonical_iota(0).is_identity());
  EXPECT_EQ(canonical_iota(2), P("(1 2)(3 4)"));
  EXPECT_EQ(canonical_gamma(4), P("(1 2 3 4)"));
  EXPECT_EQ(canonical_rep(CycleType{2, 3}), P("(1 2 3)(4 5)"));
}

TEST(FindConjugator, Cases)
{
  auto s = P("(1 2 3)(5 9)");
  auto h = find_conjugator(s, s);
  ASSERT_TRUE(h);
  EXPECT_EQ(conjugate(s, *h), s);

  auto h2 = find_conjugator(P("(1 2)"), P("(3 4)"));
  ASSERT_TRUE(h2);
  EXPECT_EQ((*h2)(1), 3u);
  EXPECT_EQ((*h2)(2), 4u);
  EXPECT_EQ(conjugate(P("(1 2)"), *h2), P("(3 4)"));

  EXPECT_FALSE(find_conjugator(P("(1 2)"), P("(1 2 3)")));
}

TEST(ParseFormat, Cases)
{
  EXPECT_EQ(P("(1 2)(3 4)"), canonical_iota(2));
  EXPECT_EQ(P("(1,2) (3,4)"), canonical_iota(2));
  EXPECT_TRUE(P("()").is_identity());
  EXPECT_TRUE(P("").is_identity());
  EXPECT_TRUE(P("(7)").is_identity());
  EXPECT_EQ(format_cycles(Permutation{}), "()");
  EXPECT_EQ(format_cycles(P("(4 3)(2 1 5)")), "(1 5 2)(3 4)");
  EXPECT_THROW(P("(1 2)(2 3)"), ParseError);
  EXPECT_THROW(P("(1 2 1)"), ParseError);
  EXPECT_THROW(P("(1 2"), ParseError);
  EXPECT_THROW(P("1 2"), ParseError);
  EXPECT_THROW(P("(0 1)"), ParseError);
  EXPECT_THROW(P("(1 x)"), ParseError);
}

TEST(Permutation, RejectsNonBijection)
{
  EXPECT_THROW(Permutation::from_pairs({{1, 2}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_pairs({{1, 2}, {1, 3}, {2, 1}}), std::invalid_argument);
}

class PermutationProperties : public ::testing::Test {
protected:
  std::mt19937_64 rng{20240611};
};

TEST_F(PermutationProperties, ConjugationPreservesType)
{
  for (int i = 0; i < 300; ++i) {
    auto a = testing::random_sparse_permutation(rng, 12);
    auto h = testing::random_sparse_permutation(rng, 12);
    EXPECT_EQ(cycle_type(conjugate(a, h)), cycle_type(a));
    EXPECT_EQ(conjugate(a, h), compose(h, compose(a, inverse(h))));
    EXPECT_EQ(cycle_type(inverse(a)), cycle_type(a));
  }
}

TEST_F(PermutationProperties, NormAxiomsAndSignHomomorphism)
{
  for (int i = 0; i < 300; ++i) {
    auto a = testing::random_sparse_permutation(rng, 10);
    auto b = testing::random_sparse_permutation(rng, 10);
    auto ab = compose(a, b);
    EXPECT_LE(support_norm(ab), support_norm(a) + support_norm(b));
    EXPECT_EQ(support_norm(inverse(a)), support_norm(a));
    EXPECT_EQ(sign(ab), sign(a) * sign(b));
    EXPECT_TRUE(compose(a, inverse(a)).is_identity());
  }
}

TEST_F(PermutationProperties, ParseFormatRoundTrip)
{
  for (int i = 0; i < 300; ++i) {
    auto a = testing::random_sparse_permutation(rng, 15);
    EXPECT_EQ(parse_cycles(format_cycles(a)), a);
    auto b = i % 2 ? conjugate(a, testing::random_sparse_permutation(rng, 15)) : testing::random_sparse_permutation(rng, 15);
    auto h = find_conjugator(a, b);
    if (cycle_type(a) == cycle_type(b)) {
      ASSERT_TRUE(h);
      EXPECT_EQ(conjugate(a, *h), b);
    } else {
      EXPECT_FALSE(h);
    }
  }
}

} // namespace
} // namespace tsuboi
