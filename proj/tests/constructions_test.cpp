#include <gtest/gtest.h>

#include "tsuboi/constructions.hpp"

using namespace tsuboi;

namespace {

// Every explicit factor must have the base's cycle type and the product must be
// the target; recomputed here without going through verifies().
void expect_sound(const FactorizationWitness& w)
{
  auto elems = w.elements();
  Permutation acc;
  for (auto it = elems.rbegin(); it != elems.rend(); ++it)
    acc = compose(*it, acc);
  EXPECT_EQ(acc, w.target);
  for (const auto& e : elems)
    EXPECT_EQ(cycle_type(e), cycle_type(w.base));
}

} // namespace

TEST(Witness, ChainAndJsonRoundTrip)
{
  auto inner = gamma_from_iota(5);
  auto outer = sigma_from_iota(parse_cycles("(1 2 3)(4 5 6 7 8)"));
  auto mid = involution_witness(*inner.k_out, *outer.k_out);
  auto chained = chain(outer.witness, mid);
  EXPECT_TRUE(chained.verifies());
  EXPECT_EQ(chained.size(), 3 * mid.size());
  auto back = witness_from_json(witness_to_json(chained));
  EXPECT_EQ(back, chained);
  EXPECT_TRUE(back.verifies());
}

TEST(Witness, NegativeExponentChain)
{
  const Permutation b = parse_cycles("(1 2 3)");
  auto inner = make_witness(b, {b, b}, parse_cycles("(1 3 2)"));
  FactorizationWitness outer{parse_cycles("(1 3 2)"), {{Permutation{}, -1}}, b};
  ASSERT_TRUE(outer.verifies());
  auto c = chain(outer, inner);
  EXPECT_TRUE(c.verifies());
}

TEST(Witness, RejectsWrongFactors)
{
  EXPECT_THROW(make_witness(parse_cycles("(1 2)"), {parse_cycles("(1 2 3)")}, parse_cycles("(1 2 3)")), VerificationError);
  EXPECT_THROW(make_witness(parse_cycles("(1 2)"), {parse_cycles("(1 3)")}, parse_cycles("(1 2)")), VerificationError);
}

TEST(Constructions, ThreeConjugatesSmallExample)
{
  auto s1 = parse_cycles("(1 2)(3 4)(5 6)");
  auto s2 = parse_cycles("(1 2)(3 5)(4 6)");
  auto s3 = parse_cycles("(1 2)(3 6)(4 5)");
  EXPECT_EQ(compose(s1, compose(s2, s3)), parse_cycles("(1 2)"));
}

TEST(Constructions, ThreeConjugatesAllSmall)
{
  for (std::uint32_t k = 1; k <= 12; ++k)
    for (std::uint32_t l = 1 + (k + 1) % 2; l <= k; l += 2) {
      auto lw = three_conjugates_iota(l, k);
      EXPECT_TRUE(lw.valid()) << l << " " << k;
      expect_sound(lw.witness);
    }
  EXPECT_THROW(three_conjugates_iota(2, 3), std::invalid_argument);
  EXPECT_THROW(three_conjugates_iota(4, 3), std::invalid_argument);
}

TEST(Constructions, EvenGammaIdentityDisplay)
{
  for (std::uint32_t m = 2; m <= 10; ++m) {
    auto id = even_gamma_identity(m);
    EXPECT_EQ(compose(id.left, id.right), id.claimed) << m;
    EXPECT_EQ(cycle_type(id.left), CycleType({2 * m}));
  }
  // m = 3 by hand.
  EXPECT_EQ(even_gamma_identity(3).claimed, parse_cycles("(1 2)(3 4 6 5 7 8)"));
}

TEST(Constructions, N4IdentityIsRightToLeft)
{
  auto lw = n4_identity();
  EXPECT_TRUE(lw.valid());
  EXPECT_EQ(lw.bound_check.size(), 2u);
  EXPECT_EQ(lw.bound_check[1].lhs, 1); // the other multiplication order gives something else
  EXPECT_TRUE(lw.bound_check[1].holds);
}

TEST(Constructions, GammaSquaresAndTranspositions)
{
  // gamma_2 = iota_1^3
  auto p = parse_cycles("(1 2)");
  EXPECT_EQ(compose(p, compose(p, p)), canonical_gamma(2));
}

TEST(Constructions, GammaPairParityObstruction)
{
  for (std::uint32_t n : {3u, 4u, 5u, 9u, 10u, 11u})
    EXPECT_THROW(iota_from_gamma_pair(n), Error) << n;
  for (std::uint32_t n : {6u, 7u, 8u, 12u}) {
    auto lw = iota_from_gamma_pair(n);
    EXPECT_TRUE(lw.valid()) << n;
    EXPECT_EQ(*lw.k_out, n / 3);
    expect_sound(lw.witness);
  }
}

TEST(Constructions, GammaTripleMeetsBound)
{
  for (std::uint32_t n = 2; n <= 16; ++n) {
    auto lw = iota_from_gamma_triple(n);
    EXPECT_TRUE(lw.valid()) << n;
    EXPECT_GE(*lw.k_out, (n + 5) / 6);
    EXPECT_EQ(lw.witness.size(), 3u);
    expect_sound(lw.witness);
  }
}

TEST(Constructions, Reflections)
{
  for (std::uint32_t m = 2; m <= 20; ++m) {
    auto [r1, r2] = gamma_as_reflections(m);
    EXPECT_EQ(compose(r1, r2), canonical_gamma(m));
    EXPECT_TRUE(cycle_type(r1).is_involution() || r1.is_identity());
    const std::uint32_t n = m % 2 ? (m - 1) / 2 : (m - 2) / 2;
    EXPECT_EQ(cycle_type(r1).lengths().size(), n);
    EXPECT_EQ(cycle_type(r2).lengths().size(), m % 2 ? n : n + 1);
  }
}

TEST(Constructions, GammaFromIota)
{
  for (std::uint32_t n = 2; n <= 30; ++n) {
    auto lw = gamma_from_iota(n);
    EXPECT_TRUE(lw.valid()) << n;
    EXPECT_LE(*lw.k_out, n);
    expect_sound(lw.witness);
  }
  EXPECT_EQ(*gamma_from_iota(7).k_out, 6u);
  EXPECT_EQ(*gamma_from_iota(8).k_out, 7u);
}

TEST(Constructions, SigmaRoundTrips)
{
  for (const char* s : {"(1 2)", "(1 2 3)(4 5)", "(1 2 3 4 5 6 7)(8 9)(10 11 12)", "(2 9 4)(5 7 6 3)"}) {
    auto sigma = parse_cycles(s);
    auto to = iota_from_sigma(sigma);
    EXPECT_TRUE(to.valid()) << s;
    expect_sound(to.witness);
    auto from = sigma_from_iota(sigma);
    EXPECT_TRUE(from.valid()) << s;
    EXPECT_EQ(from.witness.target, sigma);
    expect_sound(from.witness);
  }
}

TEST(Constructions, InvolutionNormAgreesWithBounds)
{
  // Independent lower bound: support and sign.
  for (std::uint32_t k = 1; k <= 9; ++k)
    for (std::uint32_t l = 0; l <= 30; ++l) {
      auto q = involution_norm(k, l);
      if (k % 2 == 0 && l % 2 == 1) {
        EXPECT_FALSE(q);
        continue;
      }
      ASSERT_TRUE(q);
      if (l == 0) {
        EXPECT_EQ(*q, 0u);
        continue;
      }
      EXPECT_GE(*q * k, l);
      EXPECT_EQ((*q * k + l) % 2, 0u);
      auto w = involution_witness(k, l);
      EXPECT_EQ(w.size(), *q) << k << " " << l;
      expect_sound(w);
    }
  EXPECT_EQ(*involution_norm(1, 15), 15u);
  EXPECT_EQ(*involution_norm(3, 27), 9u);
  EXPECT_EQ(*involution_norm(3, 1), 3u);
  EXPECT_EQ(*involution_norm(2, 6), 3u);
}

TEST(Constructions, TranspositionWitness)
{
  auto sigma = parse_cycles("(1 4 2 7)(3 5)(6 8 9)");
  auto w = transposition_witness(sigma);
  EXPECT_EQ(w.size(), 3u + 1u + 2u);
  expect_sound(w);
}

TEST(Constructions, ChainWitness)
{
  auto w = chain_witness(CycleType({5}), CycleType({3, 2}));
  EXPECT_FALSE(w); // even to odd
  auto w2 = chain_witness(CycleType({4}), CycleType({3, 3, 2}));
  ASSERT_TRUE(w2);
  EXPECT_TRUE(w2->verifies());
  EXPECT_EQ(cycle_type(w2->target), CycleType({3, 3, 2}));
}
