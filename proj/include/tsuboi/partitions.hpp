#pragma once

// Partitions, irreducible characters of S_n via the Murnaghan-Nakayama rule,
// class sizes and class-algebra structure constants.  Everything here is exact;
// there is no floating point in this header.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tsuboi/errors.hpp"
#include "tsuboi/permutation.hpp"

namespace tsuboi {

using BigInt = boost::multiprecision::cpp_int;

/// Weakly decreasing positive parts.  Unlike CycleType, parts equal to 1 are kept.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts))
  {
    std::erase(parts_, 0u);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  Partition(std::initializer_list<std::uint32_t> parts) : Partition(std::vector<std::uint32_t>(parts)) {}

  /// Pad a cycle type with fixed points up to weight n.
  static Partition padded(const CycleType& t, std::uint32_t n)
  {
    if (t.support() > n)
      throw std::invalid_argument("cycle type " + t.to_string() + " does not fit in S_" + std::to_string(n));
    std::vector<std::uint32_t> parts = t.lengths();
    parts.resize(parts.size() + (n - t.support()), 1);
    return Partition(std::move(parts));
  }

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::uint32_t weight() const
  {
    std::uint32_t w = 0;
    for (auto p : parts_)
      w += p;
    return w;
  }
  CycleType cycle_type() const { return CycleType(parts_); }

  /// "3+2+1"; the empty partition prints as "0".
  std::string to_string() const
  {
    if (parts_.empty())
      return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        out += '+';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<std::uint32_t> parts_;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), (n-2,2), ...
inline std::vector<Partition> enumerate_partitions(std::uint32_t n)
{
  std::vector<Partition> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint32_t p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline BigInt factorial(std::uint32_t n)
{
  BigInt f = 1;
  for (std::uint32_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

/// Order of the centralizer of an element with the given padded cycle structure.
inline BigInt centralizer_order(const Partition& p)
{
  std::map<std::uint32_t, std::uint32_t> mult;
  for (auto part : p.parts())
    ++mult[part];
  BigInt z = 1;
  for (const auto& [len, m] : mult) {
    for (std::uint32_t i = 0; i < m; ++i)
      z *= len;
    z *= factorial(m);
  }
  return z;
}

/// |C_t| in S_n.
inline BigInt class_size(const CycleType& t, std::uint32_t n)
{
  if (t.support() > n)
    throw std::invalid_argument("cycle type " + t.to_string() + " has support larger than " + std::to_string(n));
  return factorial(n) / centralizer_order(Partition::padded(t, n));
}

namespace detail {

// Beta-set of a partition as a bitmask: part lambda_i (i = 1..l) sits at bit
// lambda_i + l - i.  The normal form has no bead at bit 0 (no zero parts).
// Removing an r-rim hook moves a bead from p down to p - r; the hook's leg
// length is the number of beads strictly between.  Limited to n <= 31 so that
// the transient padding in add_hook stays within 64 bits.
using BetaMask = std::uint64_t;
inline constexpr std::uint32_t kMaxCharacterDegree = 31;

inline BetaMask beta_normalize(BetaMask m)
{
  while (m & 1u)
    m >>= 1;
  return m;
}

inline BetaMask beta_encode(const Partition& p)
{
  const auto& parts = p.parts();
  BetaMask m = 0;
  const std::size_t l = parts.size();
  for (std::size_t i = 0; i < l; ++i)
    m |= BetaMask{1} << (parts[i] + (l - 1 - i));
  return m;
}

inline Partition beta_decode(BetaMask m)
{
  std::vector<std::uint32_t> parts;
  std::uint32_t beads_below = 0;
  for (std::uint32_t pos = 0; m; ++pos, m >>= 1) {
    if (m & 1u) {
      if (pos > beads_below)
        parts.push_back(pos - beads_below);
      ++beads_below;
    }
  }
  return Partition(std::move(parts));
}

inline int beads_between(BetaMask m, std::uint32_t lo, std::uint32_t hi)
{
  // strictly between lo < pos < hi
  if (hi <= lo + 1)
    return 0;
  BetaMask window = ((BetaMask{1} << hi) - 1) & ~((BetaMask{1} << (lo + 1)) - 1);
  return std::popcount(m & window);
}

/// Calls f(result_mask, sign) for every r-rim hook removable from m.
template <typename F>
void for_each_removal(BetaMask m, std::uint32_t r, F&& f)
{
  for (BetaMask rest = m; rest; rest &= rest - 1) {
    std::uint32_t p = static_cast<std::uint32_t>(std::countr_zero(rest));
    if (p < r)
      continue;
    std::uint32_t q = p - r;
    if (m & (BetaMask{1} << q))
      continue;
    BetaMask out = (m & ~(BetaMask{1} << p)) | (BetaMask{1} << q);
    f(beta_normalize(out), (beads_between(m, q, p) % 2) ? -1 : 1);
  }
}

/// Calls f(result_mask, sign) for every r-rim hook that can be added to m.
template <typename F>
void for_each_addition(BetaMask m, std::uint32_t r, F&& f)
{
  // Pad with r zero parts so that hooks starting in new rows are visible.
  BetaMask padded = (m << r) | ((BetaMask{1} << r) - 1);
  for (BetaMask rest = padded; rest; rest &= rest - 1) {
    std::uint32_t p = static_cast<std::uint32_t>(std::countr_zero(rest));
    std::uint32_t q = p + r;
    if (q >= 64 || (padded & (BetaMask{1} << q)))
      continue;
    BetaMask out = (padded & ~(BetaMask{1} << p)) | (BetaMask{1} << q);
    f(beta_normalize(out), (beads_between(padded, p, q) % 2) ? -1 : 1);
  }
}

struct PairHash {
  std::size_t operator()(const std::pair<BetaMask, BetaMask>& k) const noexcept
  {
    return std::hash<BetaMask>{}(k.first * 0x9e3779b97f4a7c15ull ^ k.second);
  }
};

inline BigInt mn_recursive(BetaMask lambda, const std::vector<std::uint32_t>& mu, std::size_t from,
                           std::unordered_map<std::pair<BetaMask, BetaMask>, BigInt, PairHash>& memo)
{
  if (from == mu.size())
    return lambda == 0 ? BigInt(1) : BigInt(0);
  // Key the remaining class by its own beta mask so that shared suffixes of
  // different classes reuse entries.
  BetaMask rest = beta_encode(Partition(std::vector<std::uint32_t>(mu.begin() + static_cast<std::ptrdiff_t>(from), mu.end())));
  auto key = std::make_pair(lambda, rest);
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  BigInt total = 0;
  for_each_removal(lambda, mu[from], [&](BetaMask smaller, int sgn) {
    BigInt v = mn_recursive(smaller, mu, from + 1, memo);
    if (sgn < 0)
      total -= v;
    else
      total += v;
  });
  memo.emplace(key, total);
  return total;
}

} // namespace detail

/// chi_lambda(mu) by the Murnaghan-Nakayama rule, stripping the largest
/// remaining part of mu first.  Memoized per thread on (lambda, remaining mu).
inline BigInt mn_character(const Partition& lambda, const Partition& mu)
{
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("character weight mismatch: " + lambda.to_string() + " vs " + mu.to_string());
  if (lambda.weight() > detail::kMaxCharacterDegree)
    throw std::invalid_argument("character degree above " + std::to_string(detail::kMaxCharacterDegree));
  thread_local std::unordered_map<std::pair<detail::BetaMask, detail::BetaMask>, BigInt, detail::PairHash> memo;
  return detail::mn_recursive(detail::beta_encode(lambda), mu.parts(), 0, memo);
}

/// Full character table of S_n.  Rows are irreducibles, columns classes, both
/// indexed by enumerate_partitions(n).
class CharacterTable {
public:
  explicit CharacterTable(std::uint32_t n) : n_(n), partitions_(enumerate_partitions(n))
  {
    if (n > detail::kMaxCharacterDegree)
      throw std::invalid_argument("character tables are limited to n <= " + std::to_string(detail::kMaxCharacterDegree));
    const std::size_t p = partitions_.size();
    for (std::size_t i = 0; i < p; ++i)
      index_.emplace(detail::beta_encode(partitions_[i]), i);
    values_.assign(p * p, BigInt(0));
    build();
    group_order_ = factorial(n);
    sizes_.reserve(p);
    for (const auto& mu : partitions_)
      sizes_.push_back(group_order_ / centralizer_order(mu));
    cofactor_.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
      const BigInt& dim = at(i, p - 1);
      if (dim <= 0 || group_order_ % dim != 0)
        throw VerificationError("character degree " + dim.str() + " does not divide n!");
      cofactor_.push_back(group_order_ / dim);
    }
  }

  /// Build from previously exported values, checked against the hook-free
  /// invariants (trivial row, sign row, row orthogonality of the first row).
  CharacterTable(std::uint32_t n, std::vector<BigInt> values) : n_(n), partitions_(enumerate_partitions(n)), values_(std::move(values))
  {
    const std::size_t p = partitions_.size();
    if (values_.size() != p * p)
      throw ParseError("character table size mismatch");
    for (std::size_t i = 0; i < p; ++i)
      index_.emplace(detail::beta_encode(partitions_[i]), i);
    group_order_ = factorial(n);
    for (const auto& mu : partitions_)
      sizes_.push_back(group_order_ / centralizer_order(mu));
    for (std::size_t i = 0; i < p; ++i) {
      const BigInt& dim = at(i, p - 1);
      if (dim <= 0 || group_order_ % dim != 0)
        throw ParseError("cached character table is corrupt");
      cofactor_.push_back(group_order_ / dim);
    }
    for (std::size_t j = 0; j < p; ++j)
      if (at(0, j) != 1)
        throw ParseError("cached character table is corrupt");
  }

  std::uint32_t degree() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t size() const { return partitions_.size(); }

  std::size_t index_of(const Partition& p) const
  {
    auto it = index_.find(detail::beta_encode(p));
    if (it == index_.end() || p.weight() != n_)
      throw std::invalid_argument("partition " + p.to_string() + " is not a partition of " + std::to_string(n_));
    return it->second;
  }
  std::size_t index_of(const CycleType& t) const { return index_of(Partition::padded(t, n_)); }

  /// chi_{partitions()[row]} on class partitions()[col].
  const BigInt& at(std::size_t row, std::size_t col) const { return values_[row * partitions_.size() + col]; }
  const BigInt& class_size(std::size_t col) const { return sizes_[col]; }
  const BigInt& group_order() const { return group_order_; }
  /// n! / chi(1), an integer.
  const BigInt& cofactor(std::size_t row) const { return cofactor_[row]; }

private:
  void build()
  {
    // Classes are generated by adding parts in nondecreasing order, i.e. the
    // largest part of mu is stripped first when read top-down.  Each DFS node
    // holds chi_nu(prefix) for every nu of the prefix's weight.
    using Layer = std::unordered_map<detail::BetaMask, BigInt>;
    std::vector<std::uint32_t> added;
    auto rec = [&](auto&& self, const Layer& layer, std::uint32_t weight, std::uint32_t min_part) -> void {
      if (weight == n_) {
        Partition mu(added);
        std::size_t col = index_.at(detail::beta_encode(mu));
        for (const auto& [mask, val] : layer)
          values_[index_.at(mask) * partitions_.size() + col] = val;
        return;
      }
      for (std::uint32_t a = min_part; weight + a <= n_; ++a) {
        std::uint32_t left = n_ - weight - a;
        if (left != 0 && left < a)
          continue;
        Layer next;
        for (const auto& [mask, val] : layer) {
          detail::for_each_addition(mask, a, [&](detail::BetaMask bigger, int sgn) {
            BigInt& slot = next[bigger];
            if (sgn < 0)
              slot -= val;
            else
              slot += val;
          });
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        added.push_back(a);
        self(self, next, weight + a, a);
        added.pop_back();
      }
    };
    Layer start;
    start.emplace(detail::BetaMask{0}, BigInt(1));
    rec(rec, start, 0, 1);
  }

  std::uint32_t n_;
  std::vector<Partition> partitions_;
  std::unordered_map<detail::BetaMask, std::size_t> index_;
  std::vector<BigInt> values_;
  std::vector<BigInt> sizes_;
  std::vector<BigInt> cofactor_;
  BigInt group_order_;
};

/// CSV form: header "chi\\class,<mu...>", then one row per lambda.
inline std::string character_table_csv(const CharacterTable& table)
{
  std::ostringstream out;
  out << "lambda\\mu";
  for (const auto& mu : table.partitions())
    out << ',' << mu.to_string();
  out << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.partitions()[i].to_string();
    for (std::size_t j = 0; j < table.size(); ++j)
      out << ',' << table.at(i, j).str();
    out << '\n';
  }
  return out.str();
}

inline std::vector<BigInt> parse_character_table_csv(std::istream& in, std::uint32_t n)
{
  auto parts = enumerate_partitions(n);
  std::vector<BigInt> values;
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("empty character table file");
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::stringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    if (row >= parts.size() || cell != parts[row].to_string())
      throw ParseError("unexpected row label '" + cell + "' in character table");
    while (std::getline(ss, cell, ','))
      values.emplace_back(cell);
    ++row;
  }
  return values;
}

/// Process-wide cache of character tables keyed by degree.  When the
/// environment variable TSUBOI_CACHE_DIR is set, tables are also persisted
/// there as chartable_<n>.csv.
inline std::shared_ptr<const CharacterTable> character_table(std::uint32_t n)
{
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const CharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end())
      return it->second;
  }
  std::shared_ptr<const CharacterTable> table;
  const char* dir = std::getenv("TSUBOI_CACHE_DIR");
  std::filesystem::path file;
  if (dir && *dir) {
    file = std::filesystem::path(dir) / ("chartable_" + std::to_string(n) + ".csv");
    if (std::filesystem::exists(file)) {
      try {
        std::ifstream in(file);
        table = std::make_shared<const CharacterTable>(n, parse_character_table_csv(in, n));
      } catch (const std::exception&) {
        table.reset();
      }
    }
  }
  if (!table) {
    table = std::make_shared<const CharacterTable>(n);
    if (!file.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(file.parent_path(), ec);
      std::ofstream out(file);
      if (out)
        out << character_table_csv(*table);
    }
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, table).first->second;
}

struct ClassProduct {
  CycleType type;
  std::optional<BigInt> count; ///< structure constant c_{ab}^{type}, when requested
};

namespace detail {

inline void check_fits(const CycleType& t, std::uint32_t n)
{
  if (t.support() > n)
    throw std::invalid_argument("cycle type " + t.to_string() + " does not fit in S_" + std::to_string(n));
}

/// weights[lambda] = chi(a) chi(b) n!/chi(1); the structure constant for c is
/// |C_a||C_b| sum_lambda weights[lambda] chi(c) / (n!)^2.
inline std::vector<BigInt> product_weights(const CharacterTable& table, std::size_t ia, std::size_t ib)
{
  std::vector<BigInt> w(table.size());
  for (std::size_t l = 0; l < table.size(); ++l)
    w[l] = table.at(l, ia) * table.at(l, ib) * table.cofactor(l);
  return w;
}

inline BigInt finish_constant(const CharacterTable& table, std::size_t ia, std::size_t ib, const BigInt& sum,
                              const std::string& what)
{
  BigInt numerator = table.class_size(ia) * table.class_size(ib) * sum;
  BigInt denominator = table.group_order() * table.group_order();
  if (numerator % denominator != 0 || numerator < 0)
    throw VerificationError("structure constant for " + what + " is not a nonnegative integer");
  return numerator / denominator;
}

} // namespace detail

/// c_{ab}^{c} in the class algebra of S_n.
inline BigInt structure_constant(const CycleType& a, const CycleType& b, const CycleType& c, std::uint32_t n)
{
  detail::check_fits(a, n);
  detail::check_fits(b, n);
  detail::check_fits(c, n);
  auto table = character_table(n);
  std::size_t ia = table->index_of(a), ib = table->index_of(b), ic = table->index_of(c);
  BigInt sum = 0;
  for (std::size_t l = 0; l < table->size(); ++l)
    sum += table->at(l, ia) * table->at(l, ib) * table->at(l, ic) * table->cofactor(l);
  return detail::finish_constant(*table, ia, ib, sum, a.to_string() + " * " + b.to_string() + " -> " + c.to_string());
}

/// Classes met by C_a C_b in S_n, with the structure constants when requested.
/// Output is ordered by reverse-lexicographic padded partition.
/// `keep` skips candidate classes before their sum is evaluated.
template <class Keep>
std::vector<ClassProduct> product_classes_if(const CycleType& a, const CycleType& b, std::uint32_t n, bool want_counts,
                                             Keep&& keep)
{
  detail::check_fits(a, n);
  detail::check_fits(b, n);
  auto table = character_table(n);
  std::size_t ia = table->index_of(a), ib = table->index_of(b);
  auto w = detail::product_weights(*table, ia, ib);
  std::vector<ClassProduct> out;
  // Only classes with compatible parity and support can appear.
  const bool odd = a.odd() != b.odd();
  const std::uint64_t max_support = a.support() + b.support();
  for (std::size_t c = 0; c < table->size(); ++c) {
    CycleType ct = table->partitions()[c].cycle_type();
    if (ct.odd() != odd || ct.support() > max_support || !keep(ct))
      continue;
    BigInt sum = 0;
    for (std::size_t l = 0; l < table->size(); ++l)
      if (!w[l].is_zero())
        sum += w[l] * table->at(l, c);
    if (sum.is_zero())
      continue;
    if (want_counts)
      out.push_back({ct, detail::finish_constant(*table, ia, ib, sum, a.to_string() + " * " + b.to_string())});
    else
      out.push_back({ct, std::nullopt});
  }
  return out;
}

inline std::vector<ClassProduct> product_classes(const CycleType& a, const CycleType& b, std::uint32_t n, bool want_counts)
{
  return product_classes_if(a, b, n, want_counts, [](const CycleType&) { return true; });
}

} // namespace tsuboi
