#pragma once

// q_x(y): the least number of conjugates of x^{+-1} whose product is y, in S_N
// or in the finitary symmetric group S_inf.  Results are brackets [lower, upper]
// with an explicit witness whenever upper is finite.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsuboi/constructions.hpp"
#include "tsuboi/errors.hpp"
#include "tsuboi/partitions.hpp"
#include "tsuboi/permutation.hpp"
#include "tsuboi/witness.hpp"

namespace tsuboi {

inline constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

enum class Obstruction { none, sign, normal_closure };

inline std::string to_string(Obstruction o)
{
  switch (o) {
  case Obstruction::sign: return "sign";
  case Obstruction::normal_closure: return "normal-closure";
  default: return "none";
  }
}

struct Budget {
  std::uint32_t max_depth = 12;
  std::uint64_t max_frontier = 2'000'000;
  double max_seconds = 60.0;
  std::uint64_t max_placements = 20'000'000;
  std::uint32_t char_window = 24; ///< largest S_W whose character table is used for successor sets
  std::uint32_t brute_max_n = 8;
};

struct Ambient {
  std::optional<std::uint32_t> n; ///< nullopt: S_inf

  static Ambient infinity() { return {}; }
  static Ambient finite(std::uint32_t n) { return {n}; }
  bool is_infinite() const { return !n.has_value(); }
  std::string to_string() const { return n ? "S_" + std::to_string(*n) : "S_inf"; }
};

enum class Backend { automatic, brute, chars, infty };

struct NormResult {
  std::uint32_t lower = 0;
  std::uint32_t upper = kInfinity;
  bool certified = false;
  std::optional<FactorizationWitness> witness;
  Obstruction obstruction = Obstruction::none;
  std::string method;

  bool infinite() const { return certified && upper == kInfinity; }

  static NormResult exact(std::uint32_t q, std::optional<FactorizationWitness> w, std::string method)
  {
    return {q, q, true, std::move(w), Obstruction::none, std::move(method)};
  }
  static NormResult unreachable(Obstruction o, std::string method)
  {
    return {kInfinity, kInfinity, true, std::nullopt, o, std::move(method)};
  }
};

inline std::string format_q(std::uint32_t q) { return q == kInfinity ? "infinity" : std::to_string(q); }

struct LowerBound {
  std::uint32_t value = 0;
  Obstruction obstruction = Obstruction::none;
};

/// Support and sign bound: nu(y) <= k nu(x), k = 1 only for y of x's type, and
/// sign(y) = sign(x)^k.
inline LowerBound support_parity_lower_bound(const CycleType& x, const CycleType& y)
{
  if (y.empty())
    return {0, Obstruction::none};
  if (x.empty())
    return {kInfinity, Obstruction::normal_closure};
  if (!x.odd() && y.odd())
    return {kInfinity, Obstruction::sign};
  std::uint64_t k = std::max<std::uint64_t>((y.support() + x.support() - 1) / x.support(), 1);
  if (k == 1 && y != x)
    k = 2;
  if (x.odd() && (k % 2 == 1) != y.odd())
    ++k;
  return {static_cast<std::uint32_t>(k), Obstruction::none};
}

namespace detail {

class Deadline {
public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                    std::chrono::duration<double>(seconds)))
  {
  }
  void check() const
  {
    if (std::chrono::steady_clock::now() > end_)
      throw BudgetExhausted("time budget exhausted");
  }

private:
  std::chrono::steady_clock::time_point end_;
};

inline CycleType dense_cycle_type(const std::vector<Point>& img, std::vector<char>& seen)
{
  std::vector<std::uint32_t> lengths;
  std::fill(seen.begin(), seen.end(), 0);
  for (Point p = 1; p < img.size(); ++p) {
    if (seen[p] || img[p] == p)
      continue;
    std::uint32_t len = 0;
    for (Point q = p; !seen[q]; q = img[q]) {
      seen[q] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(lengths);
}

/// Enumerates placements c of a permutation of type x on the window 1..W
/// against a fixed permutation u supported in 1..m (m = u.max_point()); points
/// above m are interchangeable, so they are used in increasing order.  Every
/// relative position of u and a conjugate of x with combined support <= W is
/// reached.  visit(c_images, type of u c) returns true to stop.
template <class Visit>
bool for_each_placement(const Permutation& fixed, const CycleType& x, std::uint32_t window, std::uint64_t& counter,
                        std::uint64_t max_count, Visit&& visit)
{
  const Point old = fixed.max_point();
  if (x.support() + old < window)
    window = static_cast<std::uint32_t>(x.support() + old);
  if (x.support() > window || old > window)
    return false;
  std::vector<Point> u(window + 1), c(window + 1), prod(window + 1);
  for (Point p = 0; p <= window; ++p)
    u[p] = c[p] = p;
  for (const auto& [a, b] : fixed.mapping())
    u[a] = b;
  std::vector<char> used(window + 1), seen(window + 1);
  const auto& lengths = x.lengths();
  std::vector<Point> current;

  auto finish = [&]() {
    if (++counter > max_count)
      throw BudgetExhausted("placement budget exhausted");
    for (Point p = 1; p <= window; ++p)
      prod[p] = u[c[p]];
    return visit(c, dense_cycle_type(prod, seen));
  };

  // Cycles are written from their least point; cycles of equal length appear
  // in increasing order of that point.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t pos, Point next_fresh, Point prev_first) -> bool {
    if (i == lengths.size())
      return finish();
    const std::uint32_t len = lengths[i];
    const std::size_t base = current.size() - pos;
    if (pos == len) {
      for (std::uint32_t j = 0; j < len; ++j)
        c[current[base + j]] = current[base + (j + 1) % len];
      bool stop = self(self, i + 1, 0, next_fresh, current[base]);
      for (std::uint32_t j = 0; j < len; ++j)
        c[current[base + j]] = current[base + j];
      return stop;
    }
    Point lo = 1;
    if (pos)
      lo = current[base] + 1;
    else if (i && lengths[i - 1] == len)
      lo = prev_first + 1;
    auto try_point = [&](Point p, Point nf) {
      used[p] = 1;
      current.push_back(p);
      bool stop = self(self, i, pos + 1, nf, prev_first);
      current.pop_back();
      used[p] = 0;
      return stop;
    };
    for (Point p = lo; p <= old; ++p)
      if (!used[p] && try_point(p, next_fresh))
        return true;
    if (next_fresh <= window && next_fresh >= lo)
      if (try_point(next_fresh, next_fresh + 1))
        return true;
    return false;
  };
  return rec(rec, 0, 0, old + 1, 0);
}

/// Some v of type `placed` with fixed v of type `want`.
inline std::optional<Permutation> solve_placement(const Permutation& fixed, const CycleType& placed, const CycleType& want,
                                                  std::optional<std::uint32_t> cap, std::uint64_t max_count)
{
  std::uint32_t window = static_cast<std::uint32_t>(fixed.max_point() + placed.support());
  if (cap)
    window = std::min(window, *cap);
  std::uint64_t counter = 0;
  std::optional<Permutation> out;
  for_each_placement(fixed, placed, window, counter, max_count, [&](const std::vector<Point>& c, const CycleType& ty) {
    if (ty != want)
      return false;
    out = Permutation::from_images(std::span<const Point>(c).subspan(1));
    return true;
  });
  return out;
}

/// Some conjugate c of x with canonical_rep(t) c of type `to`.  Solves
/// u c = w with u in C_t, c in C_x, w in C_to by fixing the largest of the
/// three types and placing the smallest of the other two, then conjugates so
/// that u = canonical_rep(t).
inline std::optional<Permutation> find_edge(const CycleType& t, const CycleType& x, const CycleType& to,
                                            std::optional<std::uint32_t> cap, std::uint64_t max_count)
{
  if (t.empty())
    return to == x ? std::optional<Permutation>(canonical_rep(x)) : std::nullopt;
  enum Role { T, X, W };
  const CycleType* types[3] = {&t, &x, &to};
  Role fixed = T;
  for (Role r : {X, W})
    if (types[r]->support() > types[fixed]->support())
      fixed = r;
  Role placed = fixed == T ? X : T;
  for (Role r : {T, X, W})
    if (r != fixed && types[r]->support() < types[placed]->support())
      placed = r;
  const Role third = static_cast<Role>(3 - fixed - placed);
  const Permutation f = canonical_rep(*types[fixed]);
  Permutation u, c;
  // fixed v has the third type; rebuild (u, c) with u c = w.
  auto solve = [&](const Permutation& fx) { return solve_placement(fx, *types[placed], *types[third], cap, max_count); };
  std::optional<Permutation> v;
  if (fixed == T && placed == X) { // u = f, c = v
    if (!(v = solve(f))) return std::nullopt;
    u = f, c = *v;
  } else if (fixed == T && placed == W) { // u = f, w = v, c = f^-1 v
    if (!(v = solve(inverse(f)))) return std::nullopt;
    u = f, c = compose(inverse(f), *v);
  } else if (fixed == X && placed == T) { // c = f, u = v; type(v f) = type(f v)
    if (!(v = solve(f))) return std::nullopt;
    u = *v, c = f;
  } else if (fixed == X && placed == W) { // c = f, w = v, u = v f^-1; type(f^-1 v) = type(v f^-1)
    if (!(v = solve(inverse(f)))) return std::nullopt;
    u = compose(*v, inverse(f)), c = f;
  } else if (fixed == W && placed == T) { // w = f, u = v^-1, c = v f
    if (!(v = solve(f))) return std::nullopt;
    u = inverse(*v), c = compose(*v, f);
  } else { // fixed W, placed X: w = f, c = v^-1, u = f v
    if (!(v = solve(f))) return std::nullopt;
    u = compose(f, *v), c = inverse(*v);
  }
  auto h = find_conjugator(u, canonical_rep(t));
  if (!h)
    throw VerificationError("edge reconstruction produced the wrong class");
  return conjugate(c, *h);
}

/// Witness for a path id = P_0, P_1, ..., P_d = y in the type graph.
inline FactorizationWitness witness_from_path(const CycleType& x, const std::vector<CycleType>& path,
                                              std::optional<std::uint32_t> cap, std::uint64_t max_count)
{
  std::vector<Permutation> factors;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto c = find_edge(path[i], x, path[i + 1], cap, max_count);
    if (!c)
      throw VerificationError("no concrete edge " + path[i].to_string() + " -> " + path[i + 1].to_string());
    const Permutation u = compose(canonical_rep(path[i]), *c);
    auto h = find_conjugator(u, canonical_rep(path[i + 1]));
    for (auto& f : factors)
      f = conjugate(f, *h);
    factors.push_back(conjugate(*c, *h));
  }
  return make_witness(canonical_rep(x), factors, canonical_rep(path.back()));
}

struct SearchOutcome {
  std::uint32_t lower = 0;
  std::uint32_t upper = kInfinity;
  bool certified = false;
  std::optional<std::vector<CycleType>> path;
  bool unreachable = false;
};

/// Bidirectional breadth-first search for the shortest path id -> y in the
/// graph on cycle types with t -> t' iff C_t' meets C_t Cl(x).  The graph is
/// symmetric because every class of a symmetric group is closed under
/// inversion.  Only paths of length < upper matter, which licenses the support
/// pruning.  cap = N restricts to S_N.
inline SearchOutcome bidirectional_search(const CycleType& x, const CycleType& y, std::uint32_t lower, std::uint32_t upper,
                                          std::optional<std::uint32_t> cap, const Budget& budget)
{
  const Deadline deadline(budget.max_seconds);
  const std::uint64_t nx = x.support(), ny = y.support();
  std::map<CycleType, std::vector<CycleType>> succ_cache;
  std::uint64_t placements = 0;

  auto successors = [&](const CycleType& t, auto&& keep) -> std::vector<CycleType> {
    if (auto it = succ_cache.find(t); it != succ_cache.end()) {
      std::vector<CycleType> out;
      for (const auto& s : it->second)
        if (keep(s))
          out.push_back(s);
      return out;
    }
    std::uint32_t window = static_cast<std::uint32_t>(t.support() + nx);
    if (cap)
      window = std::min(window, *cap);
    std::set<CycleType> found;
    if (window <= budget.char_window) {
      for (auto& cp : product_classes_if(t, x, window, false, keep))
        found.insert(cp.type);
      return {found.begin(), found.end()};
    }
    for_each_placement(canonical_rep(t), x, window, placements, budget.max_placements, [&](const std::vector<Point>&, const CycleType& ty) {
      if ((placements & 0xffff) == 0)
        deadline.check();
      found.insert(ty);
      return false;
    });
    std::vector<CycleType> all(found.begin(), found.end());
    succ_cache.emplace(t, all);
    std::vector<CycleType> out;
    for (const auto& s : all)
      if (keep(s))
        out.push_back(s);
    return out;
  };

  struct Node {
    std::uint32_t depth;
    CycleType parent;
  };
  std::map<CycleType, Node> fwd, bwd;
  std::vector<CycleType> ffront{CycleType{}}, bfront{y};
  fwd.emplace(CycleType{}, Node{0, CycleType{}});
  bwd.emplace(y, Node{0, y});
  std::uint32_t a = 0, b = 0;
  const std::uint64_t limit = upper == kInfinity ? std::numeric_limits<std::uint64_t>::max() : upper - 1;

  auto build_path = [&](const CycleType& meet) {
    std::vector<CycleType> left;
    for (CycleType t = meet;; t = fwd.at(t).parent) {
      left.push_back(t);
      if (fwd.at(t).depth == 0)
        break;
    }
    std::reverse(left.begin(), left.end());
    for (CycleType t = meet; bwd.at(t).depth != 0;) {
      t = bwd.at(t).parent;
      left.push_back(t);
    }
    return left;
  };

  SearchOutcome out;
  if (fwd.count(y)) {
    out.lower = out.upper = 0;
    out.certified = true;
    out.path = std::vector<CycleType>{y};
    return out;
  }
  std::int64_t remaining_budget = static_cast<std::int64_t>(budget.max_depth);
  try {
    while (a + b < limit && static_cast<std::int64_t>(a + b) < remaining_budget) {
      const bool forward = ffront.size() <= bfront.size();
      auto& front = forward ? ffront : bfront;
      auto& mine = forward ? fwd : bwd;
      auto& other = forward ? bwd : fwd;
      const std::uint32_t depth = (forward ? a : b) + 1;
      // Nodes at this depth must still be able to reach the far end within limit.
      auto keep = [&](const CycleType& s) {
        if (mine.count(s))
          return false;
        if (limit == std::numeric_limits<std::uint64_t>::max())
          return true;
        const std::uint64_t rest = limit - depth;
        const std::uint64_t far = forward ? ny : 0;
        const std::uint64_t nu = s.support();
        const std::uint64_t gap = nu > far ? nu - far : far - nu;
        return gap <= rest * nx;
      };
      std::vector<CycleType> next;
      std::set<CycleType> next_set;
      for (const auto& t : front) {
        deadline.check();
        for (auto& s : successors(t, keep)) {
          if (next_set.insert(s).second) {
            mine.emplace(s, Node{depth, t});
            next.push_back(s);
          }
        }
        if (mine.size() + other.size() > budget.max_frontier)
          throw BudgetExhausted("frontier budget exhausted");
      }
      std::sort(next.begin(), next.end());
      (forward ? a : b) = depth;
      front = std::move(next);
      // complete layers on both sides: a meeting gives the exact distance
      std::optional<CycleType> best;
      std::uint32_t best_len = kInfinity;
      for (const auto& s : front) {
        auto it = other.find(s);
        if (it != other.end() && depth + it->second.depth < best_len) {
          best_len = depth + it->second.depth;
          best = s;
        }
      }
      if (best) {
        out.lower = out.upper = best_len;
        out.certified = true;
        out.path = build_path(*best);
        return out;
      }
      if (front.empty()) {
        if (upper == kInfinity) {
          out.unreachable = true;
          out.certified = true;
          out.lower = out.upper = kInfinity;
        } else {
          out.lower = out.upper = upper;
          out.certified = true;
        }
        return out;
      }
    }
  } catch (const BudgetExhausted&) {
    out.lower = std::max(lower, a + b + 1);
    out.upper = upper;
    out.certified = false;
    return out;
  }
  if (a + b >= limit) {
    out.lower = out.upper = upper;
    out.certified = true;
    return out;
  }
  out.lower = std::max(lower, a + b + 1);
  out.upper = upper;
  return out;
}

inline std::uint32_t witness_support(const FactorizationWitness& w)
{
  Point m = w.target.max_point();
  for (const auto& e : w.elements())
    m = std::max(m, e.max_point());
  return m;
}

/// Closed-form upper bound in S_inf; `exact` when it provably matches q.
struct ConstructedBound {
  FactorizationWitness witness;
  bool exact = false;
  std::string method;
};

inline std::optional<ConstructedBound> constructed_bound(const CycleType& x, const CycleType& y)
{
  if (x.empty() || y.empty())
    return std::nullopt;
  const Permutation rx = canonical_rep(x), ry = canonical_rep(y);
  if (x == y)
    return ConstructedBound{make_witness(rx, {rx}, ry), true, "same-type"};
  if (x == CycleType({2}))
    return ConstructedBound{transposition_witness(ry), true, "transpositions"};
  if (x.is_involution() && y.is_involution()) {
    const auto k = static_cast<std::uint32_t>(x.lengths().size()), l = static_cast<std::uint32_t>(y.lengths().size());
    if (!involution_norm(k, l))
      return std::nullopt;
    return ConstructedBound{involution_witness(k, l), true, "involution-blocks"};
  }
  if (auto w = chain_witness(x, y))
    return ConstructedBound{*w, false, "construction-chain"};
  return std::nullopt;
}

inline void check_result(const NormResult& r)
{
  if (r.lower > r.upper || r.certified != (r.lower == r.upper))
    throw VerificationError("inconsistent norm bracket");
  if (r.witness && (!r.witness->verifies() || r.witness->size() != r.upper))
    throw VerificationError("norm witness does not verify");
}

inline NormResult finish(NormResult r)
{
  check_result(r);
  return r;
}

inline NormResult trivial_cases(const CycleType& x, const CycleType& y, const LowerBound& lb, const std::string& method)
{
  NormResult r;
  if (y.empty())
    return NormResult::exact(0, make_witness(canonical_rep(x), {}, Permutation{}), method);
  r.lower = lb.value;
  r.obstruction = lb.obstruction;
  r.certified = lb.value == kInfinity;
  r.method = method;
  return r;
}

} // namespace detail

/// Exact q in S_N by breadth-first search over classes, expanding a
/// representative of each class by every element of Cl(x).
inline NormResult q_bruteforce(const Permutation& x, const Permutation& y, std::uint32_t n, const Budget& budget = {})
{
  if (n > budget.brute_max_n)
    throw std::invalid_argument("q_bruteforce supports N <= " + std::to_string(budget.brute_max_n));
  if (x.max_point() > n || y.max_point() > n)
    throw std::invalid_argument("support exceeds N");
  const CycleType tx = cycle_type(x), ty = cycle_type(y);
  if (ty.empty())
    return NormResult::exact(0, make_witness(canonical_rep(tx), {}, Permutation{}), "brute");
  if (tx.empty())
    return NormResult::unreachable(Obstruction::normal_closure, "brute");

  // Cl(x) in S_N.
  std::set<std::vector<Point>> cls;
  {
    std::vector<Point> h(n), img(n);
    for (Point i = 0; i < n; ++i)
      h[i] = i + 1;
    do {
      std::fill(img.begin(), img.end(), 0);
      for (Point p = 1; p <= n; ++p)
        img[h[p - 1] - 1] = h[x(p) - 1];
      cls.insert(img);
    } while (std::next_permutation(h.begin(), h.end()));
  }
  struct Step {
    CycleType parent;
    Permutation c;
  };
  std::map<CycleType, Step> reached;
  reached.emplace(CycleType{}, Step{});
  std::vector<CycleType> frontier{CycleType{}};
  std::uint32_t depth = 0;
  while (!frontier.empty() && !reached.count(ty)) {
    std::vector<CycleType> next;
    ++depth;
    for (const auto& t : frontier) {
      const Permutation u = canonical_rep(t);
      for (const auto& img : cls) {
        Permutation c = Permutation::from_images(img);
        CycleType s = cycle_type(compose(u, c));
        if (!reached.count(s)) {
          reached.emplace(s, Step{t, c});
          next.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  if (!reached.count(ty))
    return NormResult::unreachable(!tx.odd() && ty.odd() ? Obstruction::sign : Obstruction::normal_closure, "brute");

  std::vector<CycleType> path;
  for (CycleType t = ty; !t.empty(); t = reached.at(t).parent)
    path.push_back(t);
  path.push_back(CycleType{});
  std::reverse(path.begin(), path.end());
  std::vector<Permutation> factors;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Permutation& c = reached.at(path[i + 1]).c;
    const Permutation u = compose(canonical_rep(path[i]), c);
    auto h = find_conjugator(u, canonical_rep(path[i + 1]));
    for (auto& f : factors)
      f = conjugate(f, *h);
    factors.push_back(conjugate(c, *h));
  }
  auto w = make_witness(canonical_rep(tx), factors, canonical_rep(ty));
  return detail::finish(NormResult::exact(depth, std::move(w), "brute"));
}

namespace detail {

inline NormResult graph_query(const CycleType& x, const CycleType& y, std::optional<std::uint32_t> cap, const Budget& budget,
                              const std::string& method)
{
  const LowerBound lb = support_parity_lower_bound(x, y);
  NormResult r = trivial_cases(x, y, lb, method);
  if (y.empty() || r.certified)
    return r;

  std::optional<ConstructedBound> cb;
  try {
    cb = constructed_bound(x, y);
  } catch (const BudgetExhausted&) {
  }
  if (cb && cap && witness_support(cb->witness) > *cap)
    cb.reset();
  std::uint32_t upper = cb ? static_cast<std::uint32_t>(cb->witness.size()) : kInfinity;
  if (cb && (cb->exact || upper == lb.value))
    return finish(NormResult::exact(upper, cb->witness, method + "/" + cb->method));

  auto s = bidirectional_search(x, y, lb.value, upper, cap, budget);
  if (s.unreachable)
    return NormResult::unreachable(!x.odd() && y.odd() ? Obstruction::sign : Obstruction::normal_closure, method);
  r.lower = std::max(s.lower, lb.value);
  r.upper = s.upper;
  r.certified = s.certified;
  if (s.path) {
    try {
      r.witness = witness_from_path(x, *s.path, cap, budget.max_placements);
    } catch (const BudgetExhausted&) {
      // the distance is known but no concrete witness: fall back to the bracket
      r.upper = upper;
      r.certified = r.lower == r.upper;
      r.witness = cb ? std::optional<FactorizationWitness>(cb->witness) : std::nullopt;
      return finish(r);
    }
  } else if (r.upper == upper && cb) {
    r.witness = cb->witness;
  }
  if (r.certified && r.upper == upper && cb)
    r.method += "/" + cb->method;
  return finish(r);
}

} // namespace detail

/// q in S_N by breadth-first search over cycle types with class-algebra edges.
inline NormResult q_classgraph(const CycleType& x, const CycleType& y, std::uint32_t n, const Budget& budget = {})
{
  if (x.support() > n || y.support() > n)
    throw std::invalid_argument("cycle types do not fit in S_" + std::to_string(n));
  return detail::graph_query(x, y, n, budget, "chars");
}

/// q in S_inf.
inline NormResult q_infty(const CycleType& x, const CycleType& y, const Budget& budget = {})
{
  return detail::graph_query(x, y, std::nullopt, budget, "infty");
}

inline NormResult compute_q(const CycleType& x, const CycleType& y, Ambient ambient, Backend backend = Backend::automatic,
                            const Budget& budget = {})
{
  if (ambient.is_infinite()) {
    if (backend == Backend::brute || backend == Backend::chars)
      throw std::invalid_argument("brute and chars backends need a finite ambient");
    return q_infty(x, y, budget);
  }
  const std::uint32_t n = *ambient.n;
  if (x.support() > n || y.support() > n)
    throw std::invalid_argument("cycle types do not fit in " + ambient.to_string());
  if (backend == Backend::infty)
    throw std::invalid_argument("infty backend needs ambient infinity");
  if (backend == Backend::brute || (backend == Backend::automatic && n <= 6))
    return q_bruteforce(canonical_rep(x), canonical_rep(y), n, budget);
  return q_classgraph(x, y, n, budget);
}

/// Bracket on an integer q-value (a distance is its logarithm).
struct QBracket {
  std::uint32_t lower = 0;
  std::uint32_t upper = kInfinity;
  bool certified = false;

  double log_lower() const { return lower == kInfinity ? INFINITY : std::log(static_cast<double>(lower)); }
  double log_upper() const { return upper == kInfinity ? INFINITY : std::log(static_cast<double>(upper)); }
};

inline QBracket to_bracket(const NormResult& r) { return {r.lower, r.upper, r.certified}; }

/// d_as([f], [g]) = log q_f(g), as a bracket on q.
inline QBracket d_as(const CycleType& f, const CycleType& g, Ambient ambient, const Budget& budget = {})
{
  return to_bracket(compute_q(f, g, ambient, Backend::automatic, budget));
}

struct DistanceResult {
  NormResult f_to_g; ///< q_f(g)
  NormResult g_to_f; ///< q_g(f)
  QBracket qmax;
};

/// d([f], [g]) = log max{q_g(f), q_f(g)}.  In S_inf both types must be odd.
inline DistanceResult tsuboi_d(const CycleType& f, const CycleType& g, Ambient ambient, const Budget& budget = {})
{
  if (ambient.is_infinite() && (!f.odd() || !g.odd()))
    throw std::invalid_argument("points of the space are odd cycle types");
  DistanceResult d;
  d.f_to_g = compute_q(f, g, ambient, Backend::automatic, budget);
  d.g_to_f = compute_q(g, f, ambient, Backend::automatic, budget);
  d.qmax.lower = std::max(d.f_to_g.lower, d.g_to_f.lower);
  d.qmax.upper = std::max(d.f_to_g.upper, d.g_to_f.upper);
  d.qmax.certified = d.qmax.lower == d.qmax.upper;
  return d;
}

} // namespace tsuboi
