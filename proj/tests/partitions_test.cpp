#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "tsuboi/partitions.hpp"

namespace tsuboi {
namespace {

// Independent oracles --------------------------------------------------------

// Partition counts from the standard coin-change recurrence.
std::uint64_t partition_count(std::uint32_t n)
{
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::uint32_t part = 1; part <= n; ++part)
    for (std::uint32_t w = part; w <= n; ++w)
      ways[w] += ways[w - part];
  return ways[n];
}

// Hook-length formula for the dimension of the irreducible indexed by p.
BigInt hook_dimension(const Partition& p)
{
  const auto& parts = p.parts();
  std::vector<std::uint32_t> conj;
  for (std::uint32_t c = 0; !parts.empty() && c < parts[0]; ++c) {
    std::uint32_t len = 0;
    for (auto r : parts)
      len += r > c;
    conj.push_back(len);
  }
  BigInt hooks = 1;
  for (std::uint32_t r = 0; r < parts.size(); ++r)
    for (std::uint32_t c = 0; c < parts[r]; ++c)
      hooks *= (parts[r] - c - 1) + (conj[c] - r - 1) + 1;
  return factorial(p.weight()) / hooks;
}

// All elements of S_n, bucketed by cycle type.
std::map<CycleType, std::vector<Permutation>> elements_by_class(std::uint32_t n)
{
  std::map<CycleType, std::vector<Permutation>> out;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  do {
    auto p = Permutation::from_images(images);
    out[cycle_type(p)].push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// c_{ab}^c = #{x in C_a : x^-1 z in C_b} for a fixed z in C_c.
std::map<CycleType, BigInt> brute_structure_constants(const CycleType& a, const CycleType& b, std::uint32_t n,
                                                      const std::map<CycleType, std::vector<Permutation>>& classes)
{
  std::map<CycleType, BigInt> out;
  for (const auto& [c, elems] : classes) {
    const auto& z = elems.front();
    std::uint64_t count = 0;
    for (const auto& x : classes.at(a))
      if (cycle_type(compose(inverse(x), z)) == b)
        ++count;
    if (count)
      out[c] = count;
  }
  return out;
}

// ---------------------------------------------------------------------------

TEST(EnumeratePartitions, CountsAndOrder)
{
  auto p0 = enumerate_partitions(0);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_TRUE(p0[0].parts().empty());
  EXPECT_EQ(enumerate_partitions(4).size(), partition_count(4));
  EXPECT_EQ(partition_count(4), 5u);
  EXPECT_EQ(enumerate_partitions(8).size(), partition_count(8));
  EXPECT_EQ(partition_count(8), 22u);
  for (std::uint32_t n = 1; n <= 14; ++n) {
    auto ps = enumerate_partitions(n);
    EXPECT_EQ(ps.size(), partition_count(n));
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
    for (const auto& p : ps)
      EXPECT_EQ(p.weight(), n);
  }
  auto p4 = enumerate_partitions(4);
  EXPECT_EQ(p4.front().to_string(), "4");
  EXPECT_EQ(p4[1].to_string(), "3+1");
  EXPECT_EQ(p4.back().to_string(), "1+1+1+1");
}

TEST(BetaSet, EncodeDecode)
{
  for (std::uint32_t n = 0; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n))
      EXPECT_EQ(detail::beta_decode(detail::beta_encode(p)), p);
}

TEST(MnCharacter, TrivialAndSign)
{
  for (std::uint32_t n = 1; n <= 9; ++n) {
    std::vector<std::uint32_t> ones(n, 1);
    for (const auto& mu : enumerate_partitions(n)) {
      EXPECT_EQ(mn_character(Partition{n}, mu), 1);
      EXPECT_EQ(mn_character(Partition(ones), mu), mu.cycle_type().sign());
    }
  }
  EXPECT_THROW(mn_character(Partition{3}, Partition{2}), std::invalid_argument);
}

TEST(MnCharacter, S3TableAndClassCounts)
{
  CharacterTable t(3);
  auto classes = elements_by_class(3);
  ASSERT_EQ(t.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j)
    EXPECT_EQ(t.class_size(j), classes.at(t.partitions()[j].cycle_type()).size());
  // Standard representation: 2, 0, -1 on (1^3), (2,1), (3).
  std::size_t std_row = t.index_of(Partition{2, 1});
  EXPECT_EQ(t.at(std_row, t.index_of(Partition{1, 1, 1})), 2);
  EXPECT_EQ(t.at(std_row, t.index_of(Partition{2, 1})), 0);
  EXPECT_EQ(t.at(std_row, t.index_of(Partition{3})), -1);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      BigInt s = 0;
      for (std::size_t c = 0; c < 3; ++c)
        s += t.class_size(c) * t.at(a, c) * t.at(b, c);
      EXPECT_EQ(s, a == b ? BigInt(6) : BigInt(0));
    }
}

TEST(CharacterTable, OrthogonalityAndHookLengths)
{
  for (std::uint32_t n = 1; n <= 8; ++n) {
    CharacterTable t(n);
    const std::size_t p = t.size();
    const BigInt order = factorial(n);
    for (std::size_t a = 0; a < p; ++a) {
      EXPECT_EQ(t.at(a, p - 1), hook_dimension(t.partitions()[a])) << n;
      for (std::size_t b = a; b < p; ++b) {
        BigInt rows = 0, cols = 0;
        for (std::size_t c = 0; c < p; ++c) {
          rows += t.class_size(c) * t.at(a, c) * t.at(b, c);
          cols += t.at(c, a) * t.at(c, b);
        }
        EXPECT_EQ(rows, a == b ? order : BigInt(0));
        EXPECT_EQ(cols * t.class_size(a), a == b ? order : BigInt(0));
      }
    }
  }
}

TEST(CharacterTable, AgreesWithRecursiveRule)
{
  for (std::uint32_t n = 1; n <= 9; ++n) {
    CharacterTable t(n);
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b)
        EXPECT_EQ(t.at(a, b), mn_character(t.partitions()[a], t.partitions()[b]));
  }
}

TEST(CharacterTable, CsvRoundTrip)
{
  CharacterTable t(5);
  std::stringstream ss(character_table_csv(t));
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, "lambda\\mu,5,4+1,3+2,3+1+1,2+2+1,2+1+1+1,1+1+1+1+1");
  std::stringstream again(character_table_csv(t));
  CharacterTable loaded(5, parse_character_table_csv(again, 5));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      EXPECT_EQ(loaded.at(a, b), t.at(a, b));
}

TEST(ClassSize, Values)
{
  EXPECT_EQ(class_size(CycleType{}, 7), 1);
  EXPECT_EQ(class_size(CycleType{2}, 4), elements_by_class(4).at(CycleType{2}).size());
  EXPECT_EQ(class_size(CycleType{2}, 4), 6);
  BigInt total = 0;
  for (const auto& p : enumerate_partitions(6))
    total += class_size(p.cycle_type(), 6);
  EXPECT_EQ(total, 720);
  EXPECT_THROW(class_size(CycleType{4}, 3), std::invalid_argument);
}

TEST(ProductClasses, SmallCases)
{
  auto id = product_classes(CycleType{}, CycleType{3, 2}, 6, true);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].type, (CycleType{3, 2}));
  // One factorization per element of the class; |C_b| ordered pairs in total.
  EXPECT_EQ(*id[0].count, 1);

  // Products of the 9 ordered pairs of transpositions in S_3.
  auto tt = product_classes(CycleType{2}, CycleType{2}, 3, true);
  ASSERT_EQ(tt.size(), 2u);
  EXPECT_EQ(tt[0].type, (CycleType{3}));
  EXPECT_EQ(*tt[0].count, 3);
  EXPECT_TRUE(tt[1].type.empty());
  EXPECT_EQ(*tt[1].count, 3);

  EXPECT_THROW(product_classes(CycleType{4}, CycleType{2}, 3, false), std::invalid_argument);
}

TEST(ProductClasses, MatchesBruteForceUpToS6)
{
  for (std::uint32_t n = 1; n <= 6; ++n) {
    auto classes = elements_by_class(n);
    for (const auto& [a, ea] : classes)
      for (const auto& [b, eb] : classes) {
        auto brute = brute_structure_constants(a, b, n, classes);
        auto fast = product_classes(a, b, n, true);
        std::map<CycleType, BigInt> got;
        BigInt total = 0;
        for (const auto& cp : fast) {
          got[cp.type] = *cp.count;
          EXPECT_GT(*cp.count, 0);
          total += *cp.count * class_size(cp.type, n);
        }
        EXPECT_EQ(got, brute) << a.to_string() << " * " << b.to_string() << " in S_" << n;
        EXPECT_EQ(total, BigInt(ea.size()) * BigInt(eb.size()));
        for (const auto& [c, count] : got)
          EXPECT_EQ(structure_constant(a, b, c, n), count);
      }
  }
}

TEST(ProductClasses, Commutative)
{
  auto ps = enumerate_partitions(8);
  for (const auto& a : ps)
    for (const auto& b : ps) {
      auto ab = product_classes(a.cycle_type(), b.cycle_type(), 8, true);
      auto ba = product_classes(b.cycle_type(), a.cycle_type(), 8, true);
      ASSERT_EQ(ab.size(), ba.size());
      for (std::size_t i = 0; i < ab.size(); ++i) {
        EXPECT_EQ(ab[i].type, ba[i].type);
        EXPECT_EQ(*ab[i].count, *ba[i].count);
      }
    }
}

TEST(CharacterTable, LargerDegreesBuild)
{
  auto t = character_table(16);
  EXPECT_EQ(t->size(), partition_count(16));
  EXPECT_EQ(t->at(t->index_of(Partition{15, 1}), t->size() - 1), 15);
  EXPECT_EQ(t.get(), character_table(16).get());
}

} // namespace
} // namespace tsuboi
