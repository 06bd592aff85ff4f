#pragma once

// Finite-support permutations of the positive integers.
//
// Composition is right-to-left throughout the library: compose(a, b) applies
// b first and then a, so compose(a, b)(p) == a(b(p)).  Every product written
// as "a b c" in tests and witness files means compose(a, compose(b, c)).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsuboi/errors.hpp"

namespace tsuboi {

using Point = std::uint32_t;

/// Multiset of nontrivial cycle lengths, sorted descending.  For S_inf this is
/// exactly a conjugacy class, and since sigma and its inverse share a type it
/// is also a symmetrized conjugacy class.
class CycleType {
public:
  CycleType() = default;

  explicit CycleType(std::vector<std::uint32_t> lengths) : lengths_(std::move(lengths))
  {
    std::erase_if(lengths_, [](std::uint32_t l) { return l < 2; });
    std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
  }

  CycleType(std::initializer_list<std::uint32_t> lengths)
  : CycleType(std::vector<std::uint32_t>(lengths))
  {}

  /// k disjoint transpositions.
  static CycleType involution(std::uint32_t k) { return CycleType(std::vector<std::uint32_t>(k, 2)); }

  const std::vector<std::uint32_t>& lengths() const { return lengths_; }
  bool empty() const { return lengths_.empty(); }

  /// Number of moved points.
  std::uint64_t support() const { return std::accumulate(lengths_.begin(), lengths_.end(), std::uint64_t{0}); }

  /// Minimal number of transpositions, sum of (length - 1).
  std::uint64_t transposition_length() const { return support() - lengths_.size(); }

  bool odd() const { return transposition_length() % 2 == 1; }
  int sign() const { return odd() ? -1 : 1; }

  /// True when every cycle is a transposition.
  bool is_involution() const
  {
    return std::all_of(lengths_.begin(), lengths_.end(), [](std::uint32_t l) { return l == 2; });
  }

  /// "3+2+2"; the identity type prints as "1".
  std::string to_string() const
  {
    if (lengths_.empty())
      return "1";
    std::string out;
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
      if (i)
        out += '+';
      out += std::to_string(lengths_[i]);
    }
    return out;
  }

  static CycleType parse(std::string_view text)
  {
    std::vector<std::uint32_t> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find('+', pos);
      if (next == std::string_view::npos)
        next = text.size();
      auto token = text.substr(pos, next - pos);
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("malformed cycle type '" + std::string(text) + "'");
      parts.push_back(static_cast<std::uint32_t>(std::stoul(std::string(token))));
      pos = next + 1;
    }
    return CycleType(std::move(parts));
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
  std::vector<std::uint32_t> lengths_;
};

struct CycleTypeHash {
  std::size_t operator()(const CycleType& t) const noexcept
  {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto l : t.lengths())
      h = (h ^ l) * 0x100000001b3ull;
    return h;
  }
};

/// A bijection of {1, 2, ...} moving finitely many points.  Stored sparsely as
/// (point, image) pairs sorted by point; fixed points are never stored.
class Permutation {
public:
  Permutation() = default;

  /// From (point, image) pairs.  Fixed pairs are dropped; the remaining pairs
  /// must describe a bijection of their key set.
  static Permutation from_pairs(std::vector<std::pair<Point, Point>> pairs)
  {
    std::erase_if(pairs, [](const auto& pr) { return pr.first == pr.second; });
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first == 0 || pairs[i].second == 0)
        throw std::invalid_argument("permutation points are positive integers");
      if (i && pairs[i].first == pairs[i - 1].first)
        throw std::invalid_argument("point " + std::to_string(pairs[i].first) + " mapped twice");
    }
    std::vector<Point> keys, values;
    keys.reserve(pairs.size());
    values.reserve(pairs.size());
    for (const auto& [p, q] : pairs) {
      keys.push_back(p);
      values.push_back(q);
    }
    std::sort(values.begin(), values.end());
    if (keys != values)
      throw std::invalid_argument("mapping is not a bijection on its support");
    Permutation out;
    out.map_ = std::move(pairs);
    return out;
  }

  /// images[i] is the image of point i + 1.
  static Permutation from_images(std::span<const Point> images)
  {
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] != i + 1)
        pairs.emplace_back(static_cast<Point>(i + 1), images[i]);
    return from_pairs(std::move(pairs));
  }

  /// From disjoint cycles; each inner list is one cycle (a1 a2 ... ar).
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles)
  {
    std::vector<std::pair<Point, Point>> pairs;
    std::vector<Point> seen;
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (cyc[i] == 0)
          throw ParseError("cycle points are positive integers");
        seen.push_back(cyc[i]);
        pairs.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
      }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw ParseError("repeated point in disjoint cycle notation");
    return from_pairs(std::move(pairs));
  }

  Point operator()(Point p) const
  {
    auto it = std::lower_bound(map_.begin(), map_.end(), p, [](const auto& pr, Point v) { return pr.first < v; });
    return (it != map_.end() && it->first == p) ? it->second : p;
  }

  std::span<const std::pair<Point, Point>> mapping() const { return map_; }
  bool is_identity() const { return map_.empty(); }
  std::size_t support_size() const { return map_.size(); }
  Point max_point() const { return map_.empty() ? 0 : map_.back().first; }

  std::vector<Point> support() const
  {
    std::vector<Point> out;
    out.reserve(map_.size());
    for (const auto& pr : map_)
      out.push_back(pr.first);
    return out;
  }

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const
  {
    std::vector<std::vector<Point>> out;
    std::vector<Point> done;
    for (const auto& [start, unused] : map_) {
      if (std::binary_search(done.begin(), done.end(), start))
        continue;
      std::vector<Point> cyc{start};
      for (Point p = (*this)(start); p != start; p = (*this)(p))
        cyc.push_back(p);
      done.insert(done.end(), cyc.begin(), cyc.end());
      std::sort(done.begin(), done.end());
      out.push_back(std::move(cyc));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::pair<Point, Point>> map_;
};

/// a after b: compose(a, b)(p) = a(b(p)).
inline Permutation compose(const Permutation& a, const Permutation& b)
{
  std::vector<Point> pts;
  for (const auto& pr : a.mapping())
    pts.push_back(pr.first);
  for (const auto& pr : b.mapping())
    pts.push_back(pr.first);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(pts.size());
  for (Point p : pts) {
    Point q = a(b(p));
    if (q != p)
      pairs.emplace_back(p, q);
  }
  return Permutation::from_pairs(std::move(pairs));
}

/// Left-to-right product f[0] f[1] ... f[n-1] under the right-to-left action.
inline Permutation product(std::span<const Permutation> factors)
{
  Permutation acc;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    acc = compose(*it, acc);
  return acc;
}

inline Permutation inverse(const Permutation& a)
{
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(a.support_size());
  for (const auto& [p, q] : a.mapping())
    pairs.emplace_back(q, p);
  return Permutation::from_pairs(std::move(pairs));
}

/// h a h^-1.  Maps each cycle (c1 ... cr) of a to (h(c1) ... h(cr)).
inline Permutation conjugate(const Permutation& a, const Permutation& h)
{
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(a.support_size());
  for (const auto& [p, q] : a.mapping())
    pairs.emplace_back(h(p), h(q));
  return Permutation::from_pairs(std::move(pairs));
}

inline Permutation power(const Permutation& a, int e)
{
  Permutation base = e < 0 ? inverse(a) : a;
  Permutation acc;
  for (int i = 0; i < std::abs(e); ++i)
    acc = compose(base, acc);
  return acc;
}

inline CycleType cycle_type(const Permutation& a)
{
  std::vector<std::uint32_t> lengths;
  for (const auto& cyc : a.cycles())
    lengths.push_back(static_cast<std::uint32_t>(cyc.size()));
  return CycleType(std::move(lengths));
}

/// nu(a): number of moved points.
inline std::uint64_t support_norm(const Permutation& a) { return a.support_size(); }

inline int sign(const Permutation& a) { return cycle_type(a).sign(); }

/// iota_k = (1 2)(3 4)...(2k-1 2k).
inline Permutation canonical_iota(std::uint32_t k)
{
  std::vector<std::vector<Point>> cycles;
  for (Point i = 0; i < k; ++i)
    cycles.push_back({2 * i + 1, 2 * i + 2});
  return Permutation::from_cycles(cycles);
}

/// gamma_n = (1 2 ... n).
inline Permutation canonical_gamma(std::uint32_t n)
{
  if (n == 0)
    throw std::invalid_argument("gamma_n needs n >= 1");
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{1});
  return Permutation::from_cycles({cyc});
}

/// Cycles packed consecutively from point 1, longest first.
inline Permutation canonical_rep(const CycleType& t)
{
  std::vector<std::vector<Point>> cycles;
  Point next = 1;
  for (auto len : t.lengths()) {
    std::vector<Point> cyc(len);
    std::iota(cyc.begin(), cyc.end(), next);
    next += len;
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(cycles);
}

/// Some h with h a h^-1 == b, or nullopt when the cycle types differ.  Cycles
/// of equal length are aligned in order; the fixed points of a are sent to the
/// fixed points of b in increasing order so that h is a bijection.
inline std::optional<Permutation> find_conjugator(const Permutation& a, const Permutation& b)
{
  if (cycle_type(a) != cycle_type(b))
    return std::nullopt;
  auto by_length = [](std::vector<std::vector<Point>> cs) {
    std::stable_sort(cs.begin(), cs.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
    return cs;
  };
  auto ca = by_length(a.cycles());
  auto cb = by_length(b.cycles());
  std::vector<std::pair<Point, Point>> h;
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < ca[i].size(); ++j)
      h.emplace_back(ca[i][j], cb[i][j]);
  // Close h into a bijection: points moved by h but outside its image need
  // preimages, taken from points that are not yet in the domain.
  std::vector<Point> dom, img;
  for (const auto& [p, q] : h) {
    dom.push_back(p);
    img.push_back(q);
  }
  std::sort(dom.begin(), dom.end());
  std::sort(img.begin(), img.end());
  std::vector<Point> need_image, need_preimage;
  std::set_difference(dom.begin(), dom.end(), img.begin(), img.end(), std::back_inserter(need_preimage));
  std::set_difference(img.begin(), img.end(), dom.begin(), dom.end(), std::back_inserter(need_image));
  // need_image: points in img but not dom (must be given an image);
  // need_preimage: points in dom but not img (must be hit).
  for (std::size_t i = 0; i < need_image.size(); ++i)
    h.emplace_back(need_image[i], need_preimage[i]);
  return Permutation::from_pairs(std::move(h));
}

/// "(1 2)(3 4)"; the identity prints as "()".
inline std::string format_cycles(const Permutation& a)
{
  if (a.is_identity())
    return "()";
  std::string out;
  for (const auto& cyc : a.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

/// Disjoint cycle notation with whitespace or comma separators.  Empty text and
/// "()" denote the identity; a point may appear only once in the whole literal.
inline Permutation parse_cycles(std::string_view text)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' at offset " + std::to_string(i) + " in '" + std::string(text) + "'");
    ++i;
    std::vector<Point> cyc;
    bool closed = false;
    while (i < text.size()) {
      char c = text[i];
      if (c == ')') {
        ++i;
        closed = true;
        break;
      }
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffull)
          throw ParseError("point out of range in '" + std::string(text) + "'");
        ++i;
      }
      if (v == 0)
        throw ParseError("point 0 in '" + std::string(text) + "'");
      cyc.push_back(static_cast<Point>(v));
    }
    if (!closed)
      throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    cycles.push_back(std::move(cyc));
    skip_space();
  }
  return Permutation::from_cycles(cycles);
}

} // namespace tsuboi
