#pragma once

// Finite groups given by a multiplication table or by permutation generators:
// conjugacy classes, normal closures, the maximum normal subgroup (when one
// exists), the lattice of normal subgroups and conjugate-product lengths.
//
// Maximum normal subgroup.  Let N be generated by all proper normal closures
// <<g>>.  N is normal.  If N != G, every proper normal M satisfies M <= N since
// <<m>> <= M is proper for m in M; so N is the maximum.  If N = G no maximum
// exists, because a maximum would contain every proper <<g>> and hence N.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tsuboi/errors.hpp"
#include "tsuboi/permutation.hpp"

namespace tsuboi {

using Elem = std::uint32_t;
/// Seed for the sampled associativity check on large tables.
inline constexpr std::uint64_t kDefaultSeed = 20240601;

inline constexpr std::uint32_t kGroupUnreachable = std::numeric_limits<std::uint32_t>::max();

struct VectorHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v)
      h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

class FiniteGroup {
public:
  static constexpr std::size_t kMaxOrder = 20000;
  static constexpr std::size_t kTableOrder = 2000; ///< full table stored up to this order

  /// From labels and a table with table[i * n + j] = index of label_i * label_j.
  static FiniteGroup from_table(std::string name, std::vector<std::string> labels, std::vector<Elem> table,
                                std::uint64_t seed = kDefaultSeed)
  {
    const std::size_t n = labels.size();
    if (n == 0 || n > kMaxOrder)
      throw ParseError("group order must be between 1 and " + std::to_string(kMaxOrder));
    if (table.size() != n * n)
      throw ParseError("multiplication table must be " + std::to_string(n) + " x " + std::to_string(n));
    for (auto v : table)
      if (v >= n)
        throw ParseError("table entry out of range");
    FiniteGroup g;
    g.name_ = std::move(name);
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);
    g.order_ = n;
    g.finish_table_input(seed);
    return g;
  }

  /// Closure of permutation generators acting on 1..degree.
  static FiniteGroup from_permutations(std::string name, const std::vector<Permutation>& gens, std::uint32_t degree)
  {
    for (const auto& p : gens)
      if (p.max_point() > degree)
        throw ParseError("generator " + format_cycles(p) + " moves a point above " + std::to_string(degree));
    FiniteGroup g;
    g.name_ = std::move(name);
    g.degree_ = degree;
    std::vector<std::vector<Point>> gen_imgs;
    for (const auto& p : gens) {
      std::vector<Point> img(degree);
      for (Point i = 1; i <= degree; ++i)
        img[i - 1] = p(i);
      gen_imgs.push_back(std::move(img));
    }
    std::vector<Point> id(degree);
    for (Point i = 0; i < degree; ++i)
      id[i] = i + 1;
    g.add_perm(id);
    for (std::size_t head = 0; head < g.perms_.size(); ++head) {
      for (const auto& s : gen_imgs) {
        std::vector<Point> prod(degree);
        for (Point i = 0; i < degree; ++i)
          prod[i] = g.perms_[head][s[i] - 1]; // perms_[head] after s
        if (!g.perm_index_.count(prod)) {
          if (g.perms_.size() >= kMaxOrder)
            throw Error("generated group exceeds order " + std::to_string(kMaxOrder));
          g.add_perm(std::move(prod));
        }
      }
    }
    g.order_ = g.perms_.size();
    for (Elem i = 0; i < g.order_; ++i)
      g.labels_.push_back(format_cycles(g.permutation(i)));
    g.identity_ = 0;
    if (g.order_ <= kTableOrder) {
      g.table_.resize(g.order_ * g.order_);
      for (Elem a = 0; a < g.order_; ++a)
        for (Elem b = 0; b < g.order_; ++b)
          g.table_[a * g.order_ + b] = g.perm_product(a, b);
    }
    g.inverse_.resize(g.order_);
    for (Elem a = 0; a < g.order_; ++a) {
      std::vector<Point> inv(degree);
      for (Point i = 0; i < degree; ++i)
        inv[g.perms_[a][i] - 1] = i + 1;
      g.inverse_[a] = g.perm_index_.at(inv);
    }
    for (const auto& s : gen_imgs)
      g.generators_.push_back(g.perm_index_.at(s));
    g.prune_generators();
    return g;
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::uint32_t degree() const { return degree_; }

  Elem mul(Elem a, Elem b) const
  {
    if (!table_.empty())
      return table_[a * order_ + b];
    return perm_product(a, b);
  }
  Elem conj(Elem g, Elem h) const { return mul(mul(h, g), inverse_[h]); }

  Permutation permutation(Elem a) const
  {
    if (perms_.empty())
      throw std::logic_error("not a permutation group");
    return Permutation::from_images(perms_[a]);
  }

  std::optional<Elem> index_of_label(const std::string& l) const
  {
    for (Elem i = 0; i < order_; ++i)
      if (labels_[i] == l)
        return i;
    return std::nullopt;
  }

  std::uint32_t element_order(Elem a) const
  {
    std::uint32_t k = 1;
    for (Elem x = a; x != identity_; x = mul(x, a))
      ++k;
    return k;
  }

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::size_t order_ = 0;
  Elem identity_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<std::vector<Point>> perms_;
  std::unordered_map<std::vector<Point>, Elem, VectorHash> perm_index_;

  void add_perm(std::vector<Point> p)
  {
    perm_index_.emplace(p, static_cast<Elem>(perms_.size()));
    perms_.push_back(std::move(p));
  }

  // a b acts as b first, then a.
  Elem perm_product(Elem a, Elem b) const
  {
    std::vector<Point> prod(degree_);
    for (Point i = 0; i < degree_; ++i)
      prod[i] = perms_[a][perms_[b][i] - 1];
    return perm_index_.at(prod);
  }

  void finish_table_input(std::uint64_t seed)
  {
    const std::size_t n = order_;
    std::optional<Elem> id;
    for (Elem e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a)
        ok = table_[e * n + a] == a && table_[a * n + e] == a;
      if (ok)
        id = e;
    }
    if (!id)
      throw ParseError("table has no identity element");
    identity_ = *id;
    // Latin square rows and columns
    for (Elem a = 0; a < n; ++a) {
      std::vector<char> row(n), col(n);
      for (Elem b = 0; b < n; ++b) {
        row[table_[a * n + b]] = 1;
        col[table_[b * n + a]] = 1;
      }
      if (std::find(row.begin(), row.end(), 0) != row.end() || std::find(col.begin(), col.end(), 0) != col.end())
        throw ParseError("table is not a Latin square");
    }
    inverse_.resize(n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (table_[a * n + b] == identity_)
          inverse_[a] = b;
    // associativity: exhaustive for small tables, seeded sample otherwise
    auto assoc = [&](Elem a, Elem b, Elem c) { return table_[table_[a * n + b] * n + c] == table_[a * n + table_[b * n + c]]; };
    if (n <= 64) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (!assoc(a, b, c))
              throw ParseError("table is not associative");
    } else {
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 100000; ++i)
        if (!assoc(rng() % n, rng() % n, rng() % n))
          throw ParseError("table is not associative");
    }
    for (Elem a = 0; a < n; ++a)
      generators_.push_back(a);
    prune_generators();
  }

  /// Keeps only generators not already in the span of the earlier ones.
  void prune_generators();
};

/// Subgroup as a sorted list of element indices.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem a) const { return std::binary_search(elements.begin(), elements.end(), a); }
  bool contains(const Subgroup& h) const { return std::includes(elements.begin(), elements.end(), h.elements.begin(), h.elements.end()); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b)
  {
    if (a.order() != b.order())
      return a.order() <=> b.order();
    return a.elements <=> b.elements;
  }
};

/// <S> by breadth-first multiplication.
inline Subgroup generate(const FiniteGroup& g, const std::vector<Elem>& gens)
{
  std::vector<char> in(g.order());
  std::vector<Elem> out{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Elem s : gens) {
      Elem p = g.mul(out[head], s);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return {out};
}

inline void FiniteGroup::prune_generators()
{
  std::vector<Elem> kept;
  std::vector<char> in(order_);
  in[identity_] = 1;
  for (Elem s : generators_) {
    if (in[s])
      continue;
    kept.push_back(s);
    auto h = generate(*this, kept);
    std::fill(in.begin(), in.end(), 0);
    for (auto e : h.elements)
      in[e] = 1;
  }
  generators_ = std::move(kept);
}

// ---------------------------------------------------------------------------
// Constructors.

inline FiniteGroup symmetric_group(std::uint32_t n)
{
  if (n < 1)
    throw std::invalid_argument("S_n needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(parse_cycles("(1 2)"));
    gens.push_back(canonical_gamma(n));
  }
  return FiniteGroup::from_permutations("S" + std::to_string(n), gens, n);
}

inline FiniteGroup alternating_group(std::uint32_t n)
{
  if (n < 1)
    throw std::invalid_argument("A_n needs n >= 1");
  std::vector<Permutation> gens;
  for (Point k = 3; k <= n; ++k)
    gens.push_back(Permutation::from_cycles({{1, 2, k}}));
  return FiniteGroup::from_permutations("A" + std::to_string(n), gens, n);
}

inline FiniteGroup cyclic_group(std::uint32_t n)
{
  if (n < 1)
    throw std::invalid_argument("C_n needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2)
    gens.push_back(canonical_gamma(n));
  return FiniteGroup::from_permutations("C" + std::to_string(n), gens, n);
}

/// Dihedral group of the given order (order = 2m, m >= 2): symmetries of an m-gon;
/// order 4 is the Klein four-group.
inline FiniteGroup dihedral_group(std::uint32_t order)
{
  if (order < 4 || order % 2)
    throw std::invalid_argument("D_n needs an even order >= 4");
  const std::uint32_t m = order / 2;
  if (m == 2)
    return FiniteGroup::from_permutations("D4", {parse_cycles("(1 2)"), parse_cycles("(3 4)")}, 4);
  std::vector<std::vector<Point>> refl;
  for (Point i = 2; 2 * i < m + 2; ++i)
    refl.push_back({i, m + 2 - i});
  return FiniteGroup::from_permutations("D" + std::to_string(order), {canonical_gamma(m), Permutation::from_cycles(refl)}, m);
}

/// G x H acting on the disjoint union of the point sets.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
  const std::uint32_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (Elem s : a.generators())
    gens.push_back(a.permutation(s));
  for (Elem s : b.generators()) {
    std::vector<std::pair<Point, Point>> pairs;
    const Permutation perm = b.permutation(s);
    for (const auto& [p, q] : perm.mapping())
      pairs.emplace_back(p + da, q + da);
    gens.push_back(Permutation::from_pairs(pairs));
  }
  return FiniteGroup::from_permutations(a.name() + "x" + b.name(), gens, da + db);
}

/// Names such as S4, A5, C6, D8 (dihedral of order 8), and products "C2xC3".
inline FiniteGroup group_by_name(const std::string& spec)
{
  auto x = spec.find('x');
  if (x != std::string::npos)
    return direct_product(group_by_name(spec.substr(0, x)), group_by_name(spec.substr(x + 1)));
  if (spec.size() < 2)
    throw ParseError("unknown group '" + spec + "'");
  std::uint32_t n = 0;
  try {
    std::size_t used = 0;
    n = static_cast<std::uint32_t>(std::stoul(spec.substr(1), &used));
    if (used != spec.size() - 1)
      throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("unknown group '" + spec + "'");
  }
  switch (spec[0]) {
  case 'S': return symmetric_group(n);
  case 'A': return alternating_group(n);
  case 'C': return cyclic_group(n);
  case 'D': return dihedral_group(n);
  default: throw ParseError("unknown group '" + spec + "'");
  }
}

// ---------------------------------------------------------------------------
// Input files.

/// CSV: first row the element labels, then one row per label with the labels
/// of the products label_i * label_j (an optional leading row label is allowed).
inline FiniteGroup read_table_csv(std::istream& in, std::string name = "table", std::uint64_t seed = kDefaultSeed)
{
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(" \t\r"));
      cell.erase(cell.find_last_not_of(" \t\r") + 1);
      cells.push_back(cell);
    }
    return cells;
  };
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    rows.push_back(split(line));
  }
  if (rows.empty())
    throw ParseError("empty table file");
  std::vector<std::string> labels = rows[0];
  if (!labels.empty() && labels[0].empty())
    labels.erase(labels.begin());
  const std::size_t n = labels.size();
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < n; ++i)
    if (!index.emplace(labels[i], i).second)
      throw ParseError("duplicate label '" + labels[i] + "'");
  if (rows.size() != n + 1)
    throw ParseError("expected " + std::to_string(n) + " table rows");
  std::vector<Elem> table;
  for (std::size_t r = 1; r <= n; ++r) {
    auto cells = rows[r];
    if (cells.size() == n + 1 && cells[0] == labels[r - 1])
      cells.erase(cells.begin());
    if (cells.size() != n)
      throw ParseError("table row " + std::to_string(r) + " has " + std::to_string(cells.size()) + " entries");
    for (const auto& c : cells) {
      auto it = index.find(c);
      if (it == index.end())
        throw ParseError("unknown label '" + c + "' in table");
      table.push_back(it->second);
    }
  }
  return FiniteGroup::from_table(std::move(name), std::move(labels), std::move(table), seed);
}

/// Header "N 5" or "N=5", then one generator per line in cycle notation; '#'
/// starts a comment.
inline FiniteGroup read_generator_file(std::istream& in, std::string name = "generated")
{
  std::optional<std::uint32_t> degree;
  std::vector<Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos)
      line.erase(h);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty())
      continue;
    if (!degree) {
      if (line[0] != 'N')
        throw ParseError("generator file must start with an 'N <degree>' header");
      std::string rest = line.substr(1);
      rest.erase(0, rest.find_first_not_of(" \t="));
      try {
        degree = static_cast<std::uint32_t>(std::stoul(rest));
      } catch (const std::exception&) {
        throw ParseError("bad degree header '" + line + "'");
      }
      continue;
    }
    gens.push_back(parse_cycles(line));
  }
  if (!degree)
    throw ParseError("generator file has no 'N <degree>' header");
  return FiniteGroup::from_permutations(std::move(name), gens, *degree);
}

inline FiniteGroup read_group_file(const std::string& path, std::uint64_t seed = kDefaultSeed)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return read_table_csv(in, path, seed);
  return read_generator_file(in, path);
}

// ---------------------------------------------------------------------------
// Classes, closures, normal subgroups.

struct ConjugacyClass {
  Elem representative;
  std::vector<Elem> elements; ///< sorted
};

/// Orbits under conjugation by the generators, ordered by least element.
inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g)
{
  std::vector<char> seen(g.order());
  std::vector<ConjugacyClass> out;
  for (Elem a = 0; a < g.order(); ++a) {
    if (seen[a])
      continue;
    ConjugacyClass c{a, {a}};
    seen[a] = 1;
    for (std::size_t head = 0; head < c.elements.size(); ++head)
      for (Elem s : g.generators()) {
        Elem b = g.conj(c.elements[head], s);
        if (!seen[b]) {
          seen[b] = 1;
          c.elements.push_back(b);
        }
      }
    std::sort(c.elements.begin(), c.elements.end());
    out.push_back(std::move(c));
  }
  return out;
}

/// Smallest subgroup containing all the given elements.
inline Subgroup closure(const FiniteGroup& g, const std::vector<Elem>& elems)
{
  std::vector<Elem> gens;
  std::vector<char> in(g.order());
  in[g.identity()] = 1;
  for (Elem e : elems) {
    if (in[e])
      continue;
    gens.push_back(e);
    auto h = generate(g, gens);
    std::fill(in.begin(), in.end(), 0);
    for (Elem x : h.elements)
      in[x] = 1;
  }
  return generate(g, gens);
}

inline std::vector<Elem> conjugacy_orbit(const FiniteGroup& g, Elem a)
{
  std::vector<Elem> orbit{a};
  std::vector<char> seen(g.order());
  seen[a] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (Elem s : g.generators()) {
      Elem b = g.conj(orbit[head], s);
      if (!seen[b]) {
        seen[b] = 1;
        orbit.push_back(b);
      }
    }
  return orbit;
}

inline Subgroup normal_closure(const FiniteGroup& g, Elem a) { return closure(g, conjugacy_orbit(g, a)); }

inline bool is_normal(const FiniteGroup& g, const Subgroup& h)
{
  for (Elem x : h.elements)
    for (Elem s : g.generators())
      if (!h.contains(g.conj(x, s)))
        return false;
  return true;
}

inline Subgroup whole_group(const FiniteGroup& g)
{
  std::vector<Elem> all(g.order());
  for (Elem i = 0; i < g.order(); ++i)
    all[i] = i;
  return {all};
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return {{g.identity()}}; }

/// The maximum normal subgroup, or nullopt when G is not relatively simple.
inline std::optional<Subgroup> maximum_normal_subgroup(const FiniteGroup& g)
{
  if (g.order() == 1)
    throw std::invalid_argument("the trivial group has no proper normal subgroup");
  std::vector<Elem> gens;
  for (const auto& c : conjugacy_classes(g)) {
    auto n = normal_closure(g, c.representative);
    if (n.order() != g.order())
      gens.insert(gens.end(), n.elements.begin(), n.elements.end());
  }
  auto n = closure(g, gens);
  if (n.order() == g.order())
    return std::nullopt;
  return n;
}

inline constexpr std::size_t kLatticeBound = 2000;

/// All normal subgroups, as joins of normal closures of classes; ordered by
/// order, then elements.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t bound = kLatticeBound)
{
  if (g.order() > bound)
    throw Error("group order " + std::to_string(g.order()) + " exceeds the lattice bound " + std::to_string(bound));
  const auto classes = conjugacy_classes(g);
  std::set<Subgroup> found;
  std::vector<Subgroup> queue{trivial_subgroup(g)};
  found.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Subgroup k = queue[head];
    for (const auto& c : classes) {
      if (k.contains(c.representative))
        continue;
      std::vector<Elem> gens = k.elements;
      gens.insert(gens.end(), c.elements.begin(), c.elements.end());
      auto j = closure(g, gens);
      if (found.insert(j).second)
        queue.push_back(j);
    }
  }
  return {found.begin(), found.end()};
}

inline std::vector<Subgroup> maximal_normal_subgroups(const FiniteGroup& g, std::size_t bound = kLatticeBound)
{
  auto all = normal_subgroups(g, bound);
  std::vector<Subgroup> out;
  for (const auto& n : all) {
    if (n.order() == g.order())
      continue;
    bool maximal = true;
    for (const auto& m : all)
      if (m.order() != g.order() && m.order() > n.order() && m.contains(n))
        maximal = false;
    if (maximal)
      out.push_back(n);
  }
  return out;
}

/// G/N as a table group; cosets are labelled by the label of their least element.
inline FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n)
{
  if (!is_normal(g, n))
    throw std::invalid_argument("quotient by a subgroup that is not normal");
  std::vector<Elem> coset_of(g.order(), kGroupUnreachable), reps;
  for (Elem a = 0; a < g.order(); ++a) {
    if (coset_of[a] != kGroupUnreachable)
      continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem x : n.elements)
      coset_of[g.mul(a, x)] = idx;
  }
  const std::size_t q = reps.size();
  std::vector<std::string> labels;
  for (Elem r : reps)
    labels.push_back(g.label(r) + "N");
  std::vector<Elem> table(q * q);
  for (Elem i = 0; i < q; ++i)
    for (Elem j = 0; j < q; ++j)
      table[i * q + j] = coset_of[g.mul(reps[i], reps[j])];
  return FiniteGroup::from_table(g.name() + "/N", std::move(labels), std::move(table));
}

inline bool is_simple(const FiniteGroup& g)
{
  if (g.order() == 1)
    return false;
  for (const auto& c : conjugacy_classes(g))
    if (c.representative != g.identity() && normal_closure(g, c.representative).order() != g.order())
      return false;
  return true;
}

/// Least number of conjugates of x or x^-1 with product y; kGroupUnreachable
/// when y is outside the normal closure of x.
inline std::vector<std::uint32_t> conjugate_distances(const FiniteGroup& g, Elem x)
{
  auto steps = conjugacy_orbit(g, x);
  auto inv = conjugacy_orbit(g, g.inverse(x));
  steps.insert(steps.end(), inv.begin(), inv.end());
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  std::vector<std::uint32_t> dist(g.order(), kGroupUnreachable);
  std::vector<Elem> queue{g.identity()};
  dist[g.identity()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Elem s : steps) {
      Elem b = g.mul(queue[head], s);
      if (dist[b] == kGroupUnreachable) {
        dist[b] = dist[queue[head]] + 1;
        queue.push_back(b);
      }
    }
  return dist;
}

inline std::uint32_t q_in_group(const FiniteGroup& g, Elem x, Elem y) { return conjugate_distances(g, x)[y]; }

/// Short description: 1, C<k> for cyclic subgroups, A<n> for the even
/// permutations of S_n, otherwise "order k".
inline std::string describe_subgroup(const FiniteGroup& g, const Subgroup& h)
{
  if (g.degree() > 0 && g.name() == "S" + std::to_string(g.degree()) && 2 * h.order() == g.order()) {
    bool even = true;
    for (Elem e : h.elements)
      even = even && sign(g.permutation(e)) == 1;
    if (even)
      return "A" + std::to_string(g.degree());
  }
  if (h.order() == 1)
    return "1";
  for (Elem e : h.elements)
    if (g.element_order(e) == h.order())
      return "C" + std::to_string(h.order());
  return "order " + std::to_string(h.order());
}

struct RelativeSimplicityReport {
  std::optional<Subgroup> maximum;
  std::vector<Subgroup> maximal;
  bool outside_generate = false;  ///< every g outside N normally generates G
  bool quotient_simple = false;
  std::optional<std::uint32_t> uniform_constant; ///< max over f in G, g outside N of q_g(f)
};

inline RelativeSimplicityReport relative_simplicity_report(const FiniteGroup& g, std::size_t bound = kLatticeBound)
{
  RelativeSimplicityReport r;
  r.maximum = maximum_normal_subgroup(g);
  r.maximal = maximal_normal_subgroups(g, bound);
  if (!r.maximum)
    return r;
  const Subgroup& n = *r.maximum;
  r.outside_generate = true;
  std::uint32_t k = 0;
  for (const auto& c : conjugacy_classes(g)) {
    if (n.contains(c.representative))
      continue;
    if (normal_closure(g, c.representative).order() != g.order())
      r.outside_generate = false;
    for (auto d : conjugate_distances(g, c.representative))
      k = std::max(k, d);
  }
  if (r.outside_generate)
    r.uniform_constant = k;
  r.quotient_simple = is_simple(quotient(g, n));
  return r;
}

struct ContainmentEntry {
  Subgroup normal;
  Subgroup maximal; ///< a maximal normal subgroup containing it
};

/// For every proper normal subgroup, some maximal normal subgroup containing it.
inline std::optional<std::vector<ContainmentEntry>> maximal_containment_check(const FiniteGroup& g,
                                                                               std::size_t bound = kLatticeBound)
{
  auto all = normal_subgroups(g, bound);
  auto maximal = maximal_normal_subgroups(g, bound);
  std::vector<ContainmentEntry> out;
  for (const auto& n : all) {
    if (n.order() == g.order())
      continue;
    auto it = std::find_if(maximal.begin(), maximal.end(), [&](const Subgroup& m) { return m.contains(n); });
    if (it == maximal.end())
      return std::nullopt;
    out.push_back({n, *it});
  }
  return out;
}

} // namespace tsuboi
