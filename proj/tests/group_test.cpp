#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "tsuboi/group.hpp"

using namespace tsuboi;

namespace {

// Classes by conjugating with every element.
std::set<std::vector<Elem>> brute_classes(const FiniteGroup& g)
{
  std::set<std::vector<Elem>> out;
  for (Elem a = 0; a < g.order(); ++a) {
    std::set<Elem> cls;
    for (Elem h = 0; h < g.order(); ++h)
      cls.insert(g.mul(g.mul(h, a), g.inverse(h)));
    out.insert({cls.begin(), cls.end()});
  }
  return out;
}

// Normal subgroups as the unions of classes that are closed under products.
std::set<std::vector<Elem>> brute_normal_subgroups(const FiniteGroup& g)
{
  auto cls = brute_classes(g);
  std::vector<std::vector<Elem>> list(cls.begin(), cls.end());
  std::set<std::vector<Elem>> out;
  for (std::uint64_t mask = 0; mask < (1ull << list.size()); ++mask) {
    std::set<Elem> s;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (mask >> i & 1)
        s.insert(list[i].begin(), list[i].end());
    if (!s.count(g.identity()))
      continue;
    bool closed = true;
    for (Elem a : s)
      for (Elem b : s)
        closed = closed && s.count(g.mul(a, b));
    if (closed)
      out.insert({s.begin(), s.end()});
  }
  return out;
}

Elem find(const FiniteGroup& g, const char* cycles)
{
  auto label = format_cycles(parse_cycles(cycles));
  auto i = g.index_of_label(label);
  EXPECT_TRUE(i) << cycles;
  return *i;
}

} // namespace

TEST(Group, Orders)
{
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_EQ(alternating_group(5).order(), 60u);
  EXPECT_EQ(cyclic_group(6).order(), 6u);
  EXPECT_EQ(dihedral_group(8).order(), 8u);
  EXPECT_EQ(dihedral_group(4).order(), 4u);
  EXPECT_EQ(group_by_name("C2xC3").order(), 6u);
  EXPECT_EQ(symmetric_group(1).order(), 1u);
  EXPECT_THROW(group_by_name("Q8"), ParseError);
  EXPECT_THROW(dihedral_group(7), std::invalid_argument);
}

TEST(Group, ClassesMatchBruteForce)
{
  for (const char* name : {"S3", "S4", "A4", "A5", "D8", "D10", "C6", "C2xS3"}) {
    auto g = group_by_name(name);
    std::set<std::vector<Elem>> ours;
    for (const auto& c : conjugacy_classes(g)) {
      ours.insert(c.elements);
      EXPECT_EQ(g.order() % c.elements.size(), 0u);
    }
    EXPECT_EQ(ours, brute_classes(g)) << name;
  }
  std::multiset<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(symmetric_group(3)))
    sizes.insert(c.elements.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 3}));
  for (const auto& c : conjugacy_classes(cyclic_group(5)))
    EXPECT_EQ(c.elements.size(), 1u);
}

TEST(Group, NormalClosure)
{
  auto s4 = symmetric_group(4);
  EXPECT_EQ(normal_closure(s4, s4.identity()).order(), 1u);
  EXPECT_EQ(normal_closure(s4, find(s4, "(1 2)")).order(), 24u);
  EXPECT_EQ(normal_closure(s4, find(s4, "(1 2)(3 4)")).order(), 4u);
  EXPECT_EQ(normal_closure(s4, find(s4, "(1 2 3)")).order(), 12u);
}

TEST(Group, NormalLatticeMatchesBruteForce)
{
  for (const char* name : {"S3", "S4", "A4", "D8", "D12", "C6", "C12", "C2xC2", "C2xS3", "S5"}) {
    auto g = group_by_name(name);
    std::set<std::vector<Elem>> ours;
    for (const auto& n : normal_subgroups(g)) {
      EXPECT_TRUE(is_normal(g, n));
      ours.insert(n.elements);
    }
    EXPECT_EQ(ours, brute_normal_subgroups(g)) << name;
  }
}

TEST(Group, MaximumNormalSubgroup)
{
  for (std::uint32_t n = 2; n <= 6; ++n) {
    auto g = symmetric_group(n);
    auto m = maximum_normal_subgroup(g);
    ASSERT_TRUE(m) << n;
    EXPECT_EQ(m->order(), g.order() / 2);
    EXPECT_EQ(describe_subgroup(g, *m), "A" + std::to_string(n));
  }
  EXPECT_EQ(maximum_normal_subgroup(alternating_group(5))->order(), 1u);
  EXPECT_EQ(maximum_normal_subgroup(cyclic_group(4))->order(), 2u);
  EXPECT_EQ(maximum_normal_subgroup(cyclic_group(9))->order(), 3u);
  EXPECT_FALSE(maximum_normal_subgroup(cyclic_group(6)));
  EXPECT_FALSE(maximum_normal_subgroup(cyclic_group(10)));
  EXPECT_THROW(maximum_normal_subgroup(symmetric_group(1)), std::invalid_argument);
}

TEST(Group, MaximalNormalSubgroups)
{
  auto s4 = symmetric_group(4);
  auto m = maximal_normal_subgroups(s4);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].order(), 12u);
  auto c6 = cyclic_group(6);
  auto mc = maximal_normal_subgroups(c6);
  ASSERT_EQ(mc.size(), 2u);
  EXPECT_EQ(describe_subgroup(c6, mc[0]), "C2");
  EXPECT_EQ(describe_subgroup(c6, mc[1]), "C3");
  auto a5 = maximal_normal_subgroups(alternating_group(5));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].order(), 1u);
  for (const auto& n : maximal_normal_subgroups(group_by_name("D12")))
    EXPECT_TRUE(is_simple(quotient(group_by_name("D12"), n)));
}

TEST(Group, RelativeSimplicityReport)
{
  auto r = relative_simplicity_report(symmetric_group(4));
  ASSERT_TRUE(r.maximum);
  EXPECT_EQ(r.maximum->order(), 12u);
  EXPECT_TRUE(r.outside_generate);
  EXPECT_TRUE(r.quotient_simple);
  ASSERT_TRUE(r.uniform_constant);
  EXPECT_GE(*r.uniform_constant, 3u);
  auto a5 = relative_simplicity_report(alternating_group(5));
  EXPECT_TRUE(a5.quotient_simple);
  auto c6 = relative_simplicity_report(cyclic_group(6));
  EXPECT_FALSE(c6.maximum);
  EXPECT_EQ(c6.maximal.size(), 2u);
}

TEST(Group, QInGroup)
{
  auto s4 = symmetric_group(4);
  const Elem t = find(s4, "(1 2)");
  EXPECT_EQ(q_in_group(s4, t, s4.identity()), 0u);
  EXPECT_EQ(q_in_group(s4, t, find(s4, "(1 2 3 4)")), 3u);
  EXPECT_EQ(q_in_group(s4, find(s4, "(1 2)(3 4)"), t), kGroupUnreachable);
  // submultiplicativity on S_4
  std::vector<std::vector<std::uint32_t>> d(s4.order());
  for (Elem a = 0; a < s4.order(); ++a)
    d[a] = conjugate_distances(s4, a);
  for (Elem f = 0; f < s4.order(); ++f)
    for (Elem g = 0; g < s4.order(); ++g)
      for (Elem h = 0; h < s4.order(); ++h)
        if (d[f][g] != kGroupUnreachable && d[g][h] != kGroupUnreachable && d[f][h] != kGroupUnreachable)
          EXPECT_LE(d[f][h], d[f][g] * d[g][h]);
}

TEST(Group, ContainmentCheck)
{
  for (const char* name : {"C6", "S4", "A5", "D8", "C2xC2"}) {
    auto g = group_by_name(name);
    auto r = maximal_containment_check(g);
    ASSERT_TRUE(r) << name;
    for (const auto& e : *r)
      EXPECT_TRUE(e.maximal.contains(e.normal));
  }
}

TEST(Group, TableAndGeneratorFiles)
{
  std::istringstream table("e,a,b\ne,a,b\na,b,e\nb,e,a\n");
  auto c3 = read_table_csv(table);
  EXPECT_EQ(c3.order(), 3u);
  EXPECT_EQ(maximum_normal_subgroup(c3)->order(), 1u);
  std::istringstream bad("e,a\ne,a\na,a\n");
  EXPECT_THROW(read_table_csv(bad), ParseError);

  std::istringstream gens("# S4 by generators\nN=4\n(1 2)\n(1 2 3 4)  # 4-cycle\n");
  auto s4 = read_generator_file(gens);
  EXPECT_EQ(s4.order(), 24u);
  std::istringstream nohdr("(1 2)\n");
  EXPECT_THROW(read_generator_file(nohdr), ParseError);
}

TEST(Group, Quotient)
{
  auto s4 = symmetric_group(4);
  auto q = quotient(s4, *maximum_normal_subgroup(s4));
  EXPECT_EQ(q.order(), 2u);
  EXPECT_TRUE(is_simple(q));
  auto v4 = normal_closure(s4, find(s4, "(1 2)(3 4)"));
  auto s3 = quotient(s4, v4);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(is_simple(s3));
}
