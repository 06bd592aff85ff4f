#pragma once

// Explicit conjugate factorizations in S_inf: products of conjugates of
// iota_k = (1 2)(3 4)...(2k-1 2k) and gamma_n = (1 2 ... n).
//
// Closed forms are used wherever one is known; the only search is the
// two-cycle factorization of an involution (gamma_pair_to_iota).  Every
// constructor returns a witness that has been multiplied out.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsuboi/errors.hpp"
#include "tsuboi/permutation.hpp"
#include "tsuboi/witness.hpp"

namespace tsuboi {

struct BoundCheck {
  std::string relation; ///< e.g. "k >= ceil(n/6)"
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};

struct LemmaWitness {
  std::string lemma;
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  std::optional<std::uint32_t> k_out;
  FactorizationWitness witness;
  std::vector<BoundCheck> bound_check;

  bool valid() const
  {
    return witness.verifies() &&
           std::all_of(bound_check.begin(), bound_check.end(), [](const BoundCheck& b) { return b.holds; });
  }
};

namespace detail {

inline BoundCheck check_ge(std::string relation, std::int64_t lhs, std::int64_t rhs) { return {std::move(relation), lhs, rhs, lhs >= rhs}; }
inline BoundCheck check_le(std::string relation, std::int64_t lhs, std::int64_t rhs) { return {std::move(relation), lhs, rhs, lhs <= rhs}; }
inline BoundCheck check_eq(std::string relation, std::int64_t lhs, std::int64_t rhs) { return {std::move(relation), lhs, rhs, lhs == rhs}; }

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

/// Applies a point relabeling to a permutation; points missing from the map are
/// shifted by `offset`.
inline Permutation map_points(const Permutation& p, const std::map<Point, Point>& f, Point offset = 0)
{
  auto image = [&](Point x) {
    auto it = f.find(x);
    return it == f.end() ? x + offset : it->second;
  };
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& [a, b] : p.mapping())
    pairs.emplace_back(image(a), image(b));
  return Permutation::from_pairs(std::move(pairs));
}

inline Permutation shift(const Permutation& p, Point offset) { return map_points(p, {}, offset); }

inline Point max_point(const std::vector<Permutation>& ps)
{
  Point m = 0;
  for (const auto& p : ps)
    m = std::max(m, p.max_point());
  return m;
}

/// Conjugates every factor by h so that their product becomes `target`
/// (which must have the same cycle type as the current product).
inline std::vector<Permutation> align_product(const std::vector<Permutation>& factors, const Permutation& target)
{
  auto h = find_conjugator(product(factors), target);
  if (!h)
    throw VerificationError("product has type " + cycle_type(product(factors)).to_string() + ", expected " +
                            cycle_type(target).to_string());
  std::vector<Permutation> out;
  for (const auto& f : factors)
    out.push_back(conjugate(f, *h));
  return out;
}

/// Transpositions (from, from+1), (from+2, from+3), ... count of them.
inline Permutation transposition_block(Point from, std::uint32_t count)
{
  std::vector<std::vector<Point>> cycles;
  for (std::uint32_t i = 0; i < count; ++i)
    cycles.push_back({from + 2 * i, from + 2 * i + 1});
  return Permutation::from_cycles(cycles);
}

} // namespace detail

// ---------------------------------------------------------------------------
// iota_l as a product of three conjugates of iota_k (l <= k, l = k mod 2).

inline LemmaWitness three_conjugates_iota(std::uint32_t l, std::uint32_t k)
{
  if (l < 1 || l > k)
    throw std::invalid_argument("three_conjugates_iota needs 1 <= l <= k");
  if ((k - l) % 2)
    throw std::invalid_argument("three_conjugates_iota needs l = k (mod 2)");
  // x_i = 2i - 1, y_i = 2i on 2k points.
  auto x = [](std::uint32_t i) { return 2 * i - 1; };
  auto y = [](std::uint32_t i) { return 2 * i; };
  std::vector<std::vector<Point>> c1, c2, c3;
  for (std::uint32_t i = 1; i <= l; ++i) {
    c1.push_back({x(i), y(i)});
    c2.push_back({x(i), y(i)});
    c3.push_back({x(i), y(i)});
  }
  const std::uint32_t s = (k - l) / 2;
  for (std::uint32_t j = 1; j <= s; ++j) {
    std::uint32_t a = l + 2 * j - 1, b = l + 2 * j;
    c1.push_back({x(a), y(a)});
    c1.push_back({x(b), y(b)});
    c2.push_back({x(a), x(b)});
    c2.push_back({y(a), y(b)});
    c3.push_back({x(a), y(b)});
    c3.push_back({x(b), y(a)});
  }
  std::vector<Permutation> factors{Permutation::from_cycles(c1), Permutation::from_cycles(c2), Permutation::from_cycles(c3)};
  LemmaWitness out;
  out.lemma = "three-conjugates";
  out.inputs = {{"l", l}, {"k", k}};
  out.k_out = l;
  out.witness = make_witness(canonical_iota(k), factors, canonical_iota(l));
  out.bound_check.push_back(detail::check_le("l <= k", l, k));
  out.bound_check.push_back(detail::check_eq("(k - l) mod 2 == 0", (k - l) % 2, 0));
  out.bound_check.push_back(detail::check_le("support <= 2k", detail::max_point(factors), 2 * k));
  return out;
}

// ---------------------------------------------------------------------------
// Two n-cycles whose product is an involution.

struct GammaPairSearchLimits {
  std::uint64_t max_nodes = 200'000'000;
  std::uint32_t window_factor = 2; ///< points 1 .. window_factor * n
};

/// tau with gamma_n tau of type 2^k, or nullopt when the bounded search finds
/// none.  Searches involutions p on the window and tests gamma_n^-1 p.
inline std::optional<Permutation> gamma_pair_to_iota(std::uint32_t n, std::uint32_t k, GammaPairSearchLimits limits = {})
{
  if (n < 2)
    throw std::invalid_argument("gamma_pair_to_iota needs n >= 2");
  const std::uint32_t window = limits.window_factor * n;
  if (2 * k > window)
    return std::nullopt;
  // Dense 1-based images of gamma^-1 on the window.
  std::vector<Point> ginv(window + 1);
  for (Point i = 1; i <= window; ++i)
    ginv[i] = i;
  for (Point i = 1; i <= n; ++i)
    ginv[i % n + 1] = i;

  std::vector<Point> p(window + 1);
  for (Point i = 1; i <= window; ++i)
    p[i] = i;
  std::vector<char> seen(window + 1);
  std::uint64_t nodes = 0;
  std::optional<Permutation> found;

  auto is_n_cycle = [&]() {
    // tau = gamma^-1 p; count moved points and walk one cycle.
    Point first = 0;
    std::uint32_t moved = 0;
    for (Point i = 1; i <= window; ++i) {
      if (ginv[p[i]] != i) {
        ++moved;
        if (!first)
          first = i;
      }
    }
    if (moved != n || !first)
      return false;
    std::uint32_t len = 1;
    for (Point q = ginv[p[first]]; q != first; q = ginv[p[q]])
      ++len;
    return len == n;
  };

  // Transpositions are chosen with increasing least point; fresh points above
  // n are used in order, and the number of fresh points may not exceed the
  // number of transpositions (i, i+1) that cancel against gamma.
  auto rec = [&](auto&& self, std::uint32_t placed, Point min_first, Point next_fresh) -> bool {
    if (++nodes > limits.max_nodes)
      throw BudgetExhausted("gamma pair search exceeded node budget");
    if (placed == k) {
      if (is_n_cycle()) {
        std::vector<Point> tau(window);
        for (Point i = 1; i <= window; ++i)
          tau[i - 1] = ginv[p[i]];
        found = Permutation::from_images(tau);
        return true;
      }
      return false;
    }
    auto candidates = [&](Point lo, auto&& emit) {
      for (Point a = lo; a <= n; ++a)
        if (p[a] == a && !seen[a])
          if (emit(a))
            return true;
      if (next_fresh <= window && next_fresh >= lo)
        return emit(next_fresh);
      return false;
    };
    return candidates(min_first, [&](Point a) {
      Point fresh_after_a = (a == next_fresh) ? next_fresh + 1 : next_fresh;
      // partner b > a
      for (Point b = a + 1; b <= n; ++b) {
        if (p[b] != b || seen[b])
          continue;
        p[a] = b;
        p[b] = a;
        seen[a] = seen[b] = 1;
        bool ok = self(self, placed + 1, a + 1, fresh_after_a);
        p[a] = a;
        p[b] = b;
        seen[a] = seen[b] = 0;
        if (ok)
          return true;
      }
      if (fresh_after_a <= window && fresh_after_a > a) {
        Point b = fresh_after_a;
        p[a] = b;
        p[b] = a;
        seen[a] = seen[b] = 1;
        bool ok = self(self, placed + 1, a + 1, fresh_after_a + 1);
        p[a] = a;
        p[b] = b;
        seen[a] = seen[b] = 0;
        if (ok)
          return true;
      }
      return false;
    });
  };
  rec(rec, 0, 1, n + 1);
  return found;
}

/// Two conjugates of gamma_n whose product is iota_{floor(n/3)}.  The product of
/// two conjugates is always even, so odd floor(n/3) has no solution and is
/// reported as an error.
inline LemmaWitness iota_from_gamma_pair(std::uint32_t n, GammaPairSearchLimits limits = {})
{
  if (n < 3)
    throw std::invalid_argument("iota_from_gamma_pair needs n >= 3");
  const std::uint32_t k = n / 3;
  if (k % 2)
    throw Error("iota_from_gamma_pair(" + std::to_string(n) + "): iota_" + std::to_string(k) +
                " is odd, but a product of two conjugates is always even");
  auto tau = gamma_pair_to_iota(n, k, limits);
  if (!tau)
    throw BudgetExhausted("iota_from_gamma_pair(" + std::to_string(n) + "): no pair found in the search window");
  auto factors = detail::align_product({canonical_gamma(n), *tau}, canonical_iota(k));
  LemmaWitness out;
  out.lemma = "iota-from-gamma-pair";
  out.inputs = {{"n", n}};
  out.k_out = k;
  out.witness = make_witness(canonical_gamma(n), factors, canonical_iota(k));
  out.bound_check.push_back(detail::check_eq("k == floor(n/3)", k, n / 3));
  out.bound_check.push_back(detail::check_eq("factors", static_cast<std::int64_t>(out.witness.size()), 2));
  return out;
}

/// The even-n identity (3,1,5,6,...,2m+2)(1,2,...,2m) = (1,2)(3,4,6,...,2m,5,7,...,2m+1,2m+2).
struct EvenGammaIdentity {
  Permutation left;    ///< (3,1,5,6,...,2m+2)
  Permutation right;   ///< gamma_{2m}
  Permutation claimed; ///< right-hand side as displayed
};

inline EvenGammaIdentity even_gamma_identity(std::uint32_t m)
{
  if (m < 2)
    throw std::invalid_argument("even_gamma_identity needs m >= 2");
  std::vector<Point> left{3, 1};
  for (Point p = 5; p <= 2 * m + 2; ++p)
    left.push_back(p);
  std::vector<Point> big{3, 4};
  for (Point p = 6; p <= 2 * m; p += 2)
    big.push_back(p);
  for (Point p = 5; p <= 2 * m + 1; p += 2)
    big.push_back(p);
  big.push_back(2 * m + 2);
  return {Permutation::from_cycles({left}), canonical_gamma(2 * m), Permutation::from_cycles({{1, 2}, big})};
}

namespace detail {

/// Smallest-first list of even k' near floor(n/3) satisfying k' + extra >= ceil(n/6).
inline std::vector<std::uint32_t> even_pair_targets(std::uint32_t n, std::uint32_t extra)
{
  std::vector<std::uint32_t> out;
  const std::int64_t want = ceil_div(n, 6);
  const std::int64_t base = n / 3;
  for (std::int64_t cand : {base, base - 1, base + 1, base - 2, base + 2, base + 3}) {
    if (cand < 0 || cand % 2 || cand + extra < want)
      continue;
    if (std::find(out.begin(), out.end(), static_cast<std::uint32_t>(cand)) == out.end())
      out.push_back(static_cast<std::uint32_t>(cand));
  }
  return out;
}

inline std::pair<std::uint32_t, Permutation> find_even_pair(std::uint32_t n, std::uint32_t extra, GammaPairSearchLimits limits)
{
  for (auto k : even_pair_targets(n, extra)) {
    if (k == 0)
      return {0, inverse(canonical_gamma(n))};
    if (auto tau = gamma_pair_to_iota(n, k, limits))
      return {k, *tau};
  }
  throw BudgetExhausted("no two-cycle factorization of an involution found for n = " + std::to_string(n));
}

} // namespace detail

/// Three conjugates of gamma_n whose product is iota_k with k >= ceil(n/6).
inline LemmaWitness iota_from_gamma_triple(std::uint32_t n, GammaPairSearchLimits limits = {})
{
  if (n < 2)
    throw std::invalid_argument("iota_from_gamma_triple needs n >= 2");
  std::vector<Permutation> factors;
  std::uint32_t k = 0;
  std::string route;
  const Permutation gamma = canonical_gamma(n);
  if (n == 2) {
    k = 3;
    factors = {parse_cycles("(1 2)"), parse_cycles("(3 4)"), parse_cycles("(5 6)")};
    route = "transpositions";
  } else if (n % 2 == 1) {
    // gamma^2 is an n-cycle: gamma * gamma * (h tau h^-1) = h (gamma tau) h^-1.
    auto [kp, tau] = detail::find_even_pair(n, 0, limits);
    auto h = find_conjugator(gamma, compose(gamma, gamma));
    factors = {gamma, gamma, conjugate(tau, *h)};
    k = kp;
    route = "square";
  } else {
    // (3,1,5,...,2m+2) gamma_n = (1 2) + an n-cycle C on {3..n+2}; send C onto
    // the first factor of an even pair and (1 2) to fresh points.
    auto id = even_gamma_identity(n / 2);
    auto [kp, tau] = detail::find_even_pair(n, 1, limits);
    const Permutation rho = gamma; // pair: rho tau has type 2^kp
    const Point top = std::max<Point>(detail::max_point({rho, tau}), n);
    std::map<Point, Point> f;
    auto big = compose(id.left, id.right).cycles();
    const std::vector<Point>* ncycle = nullptr;
    for (const auto& c : big)
      if (c.size() == n)
        ncycle = &c;
    // rho = (1 2 ... n) so the j-th point of C goes to j.
    for (std::uint32_t j = 0; j < n; ++j)
      f[(*ncycle)[j]] = j + 1;
    f[1] = top + 1;
    f[2] = top + 2;
    factors = {detail::map_points(id.left, f), detail::map_points(id.right, f), tau};
    k = kp + 1;
    route = "even-identity";
  }
  factors = detail::align_product(factors, canonical_iota(k));
  LemmaWitness out;
  out.lemma = "iota-from-gamma-triple";
  out.inputs = {{"n", n}};
  out.k_out = k;
  out.witness = make_witness(gamma, factors, canonical_iota(k));
  out.bound_check.push_back(detail::check_ge("k >= ceil(n/6)", k, detail::ceil_div(n, 6)));
  out.bound_check.push_back(detail::check_eq("factors", static_cast<std::int64_t>(out.witness.size()), 3));
  (void)route;
  return out;
}

namespace detail {

/// Lays per-cycle witnesses on disjoint blocks and multiplies them factorwise.
/// pieces[i] supplies three factors whose product is the i-th piece's target;
/// place[i] maps the piece's points into the global range (others are shifted
/// into fresh space above `fresh_from`).
inline std::vector<Permutation> combine_disjoint(const std::vector<std::vector<Permutation>>& pieces,
                                                 const std::vector<std::map<Point, Point>>& place, Point fresh_from)
{
  std::vector<Permutation> combined(3);
  Point next = fresh_from;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::map<Point, Point> f = place[i];
    Point top = max_point(pieces[i]);
    for (Point p = 1; p <= top; ++p)
      if (!f.count(p))
        f[p] = ++next;
    for (std::size_t j = 0; j < 3; ++j)
      combined[j] = compose(combined[j], map_points(pieces[i][j], f));
  }
  return combined;
}

} // namespace detail

/// Three conjugates of sigma whose product is iota_k, k >= ceil(nu(sigma)/6).
inline LemmaWitness iota_from_sigma(const Permutation& sigma, GammaPairSearchLimits limits = {})
{
  if (sigma.is_identity())
    throw std::invalid_argument("iota_from_sigma needs sigma != id");
  std::vector<std::vector<Permutation>> pieces;
  std::vector<std::map<Point, Point>> place;
  std::uint32_t k = 0;
  std::int64_t ceiling_sum = 0;
  for (const auto& cyc : sigma.cycles()) {
    const auto n = static_cast<std::uint32_t>(cyc.size());
    auto lw = iota_from_gamma_triple(n, limits);
    auto elems = lw.witness.elements();
    // Conjugate so that the piece's factors are conjugates of this very cycle
    // is unnecessary; only the factor types matter, and they are n-cycles.
    pieces.push_back(std::move(elems));
    place.emplace_back();
    k += *lw.k_out;
    ceiling_sum += detail::ceil_div(n, 6);
  }
  auto factors = detail::combine_disjoint(pieces, place, 0);
  factors = detail::align_product(factors, canonical_iota(k));
  LemmaWitness out;
  out.lemma = "iota-from-sigma";
  out.inputs = {{"nu", static_cast<std::int64_t>(support_norm(sigma))}};
  out.k_out = k;
  out.witness = make_witness(sigma, factors, canonical_iota(k));
  const std::int64_t nu = static_cast<std::int64_t>(support_norm(sigma));
  out.bound_check.push_back(detail::check_le("ceil(nu/6) <= sum ceil(nu_i/6)", detail::ceil_div(nu, 6), ceiling_sum));
  out.bound_check.push_back(detail::check_le("sum ceil(nu_i/6) <= k", ceiling_sum, k));
  out.bound_check.push_back(detail::check_ge("k >= ceil(nu/6)", k, detail::ceil_div(nu, 6)));
  out.bound_check.push_back(detail::check_eq("factors", static_cast<std::int64_t>(out.witness.size()), 3));
  return out;
}

// ---------------------------------------------------------------------------
// gamma_n from conjugates of iota_k.

/// gamma_m as a product r1 r2 of two reflections of the m-gon on 1..m.
/// m = 2n+1: both have n transpositions.  m = 2n+2: r1 has n, r2 has n+1.
inline std::pair<Permutation, Permutation> gamma_as_reflections(std::uint32_t m)
{
  if (m < 2)
    throw std::invalid_argument("gamma_as_reflections needs m >= 2");
  // s_a(i) = a - i (mod m) on 0-based vertices; s_a s_b is the rotation by a - b.
  auto reflection = [m](std::int64_t a) {
    std::vector<Point> images(m);
    for (std::int64_t i = 0; i < m; ++i)
      images[i] = static_cast<Point>(((a - i) % m + m) % m + 1);
    return Permutation::from_images(images);
  };
  if (m % 2)
    return {reflection(1), reflection(0)};
  return {reflection(0), reflection(m - 1)};
}

/// gamma_n as a product of three conjugates of iota_k with k <= n.
inline LemmaWitness gamma_from_iota(std::uint32_t n)
{
  if (n < 2)
    throw std::invalid_argument("gamma_from_iota needs n >= 2");
  std::vector<Permutation> factors;
  std::uint32_t k = 0;
  if (n == 2) {
    k = 1;
    factors = {canonical_iota(1), canonical_iota(1), canonical_iota(1)};
  } else {
    auto [r1, r2] = gamma_as_reflections(n);
    const std::uint32_t m = (n - 1) / 2; // n = 2m+1, or n = 2m+2 with m = (n-2)/2
    const std::uint32_t mx = (n % 2) ? m : (n - 2) / 2 + 1;
    const std::uint32_t mz = (n % 2) ? m : (n - 2) / 2;
    // Fresh pads x_i y_i (mx of them) and z_i w_i (mz) above n.
    Permutation pad_x = detail::transposition_block(n + 1, mx);
    Permutation pad_z = detail::transposition_block(n + 1 + 2 * mx, mz);
    factors = {compose(r1, pad_x), compose(r2, pad_z), compose(pad_x, pad_z)};
    k = mx + mz;
  }
  LemmaWitness out;
  out.lemma = "gamma-from-iota";
  out.inputs = {{"n", n}};
  out.k_out = k;
  out.witness = make_witness(canonical_iota(k), factors, canonical_gamma(n));
  out.bound_check.push_back(detail::check_le("k <= n", k, n));
  out.bound_check.push_back(detail::check_eq("factors", static_cast<std::int64_t>(out.witness.size()), 3));
  return out;
}

/// sigma as a product of three conjugates of iota_k with k <= nu(sigma).
inline LemmaWitness sigma_from_iota(const Permutation& sigma)
{
  if (sigma.is_identity())
    throw std::invalid_argument("sigma_from_iota needs sigma != id");
  std::vector<std::vector<Permutation>> pieces;
  std::vector<std::map<Point, Point>> place;
  std::uint32_t k = 0;
  for (const auto& cyc : sigma.cycles()) {
    const auto n = static_cast<std::uint32_t>(cyc.size());
    auto lw = gamma_from_iota(n);
    pieces.push_back(lw.witness.elements());
    std::map<Point, Point> f;
    for (std::uint32_t j = 0; j < n; ++j)
      f[j + 1] = cyc[j];
    place.push_back(std::move(f));
    k += *lw.k_out;
  }
  auto factors = detail::combine_disjoint(pieces, place, sigma.max_point());
  LemmaWitness out;
  out.lemma = "sigma-from-iota";
  out.inputs = {{"nu", static_cast<std::int64_t>(support_norm(sigma))}};
  out.k_out = k;
  out.witness = make_witness(canonical_iota(k), factors, sigma);
  out.bound_check.push_back(detail::check_le("k <= nu", k, static_cast<std::int64_t>(support_norm(sigma))));
  out.bound_check.push_back(detail::check_eq("factors", static_cast<std::int64_t>(out.witness.size()), 3));
  return out;
}

/// (1,2,3,4)^2 (1,3,2,4) = (3,4), checked in both multiplication orders.
inline LemmaWitness n4_identity()
{
  const Permutation g = parse_cycles("(1 2 3 4)");
  const Permutation h = parse_cycles("(1 3 2 4)");
  const Permutation t = parse_cycles("(3 4)");
  std::vector<Permutation> factors{g, g, h};
  const bool right_to_left = product(factors) == t;
  const bool left_to_right = compose(h, compose(g, g)) == t;
  LemmaWitness out;
  out.lemma = "n4-identity";
  out.witness = make_witness(g, factors, t);
  out.bound_check.push_back(detail::check_eq("right-to-left product equals (3 4)", right_to_left, 1));
  out.bound_check.push_back(detail::check_eq("left-to-right product differs from (3 4)", !left_to_right, 1));
  return out;
}

// ---------------------------------------------------------------------------
// Conjugate-factorization upper bounds used by the norm engine.

/// Least j with iota_l a product of j conjugates of iota_k in S_inf, or
/// nullopt when impossible (k even, l odd).  j = 1 iff l = k; otherwise j >= 2
/// with j k >= l and j k = l (mod 2), which matches the support and sign
/// lower bounds exactly.
inline std::optional<std::uint32_t> involution_norm(std::uint32_t k, std::uint32_t l)
{
  if (l == 0)
    return 0;
  if (k == 0)
    return std::nullopt;
  if (l == k)
    return 1;
  if (k % 2 == 0 && l % 2 == 1)
    return std::nullopt;
  std::uint64_t j = 2;
  while (j * k < l || (j * k - l) % 2)
    ++j;
  return static_cast<std::uint32_t>(j);
}

/// Witness for involution_norm: iota_l from involution_norm(k, l) conjugates of iota_k.
inline FactorizationWitness involution_witness(std::uint32_t k, std::uint32_t l)
{
  auto q = involution_norm(k, l);
  if (!q)
    throw std::invalid_argument("iota_" + std::to_string(l) + " is not a product of conjugates of iota_" + std::to_string(k));
  std::vector<Permutation> factors;
  Point next = 1;
  auto single = [&] {
    factors.push_back(detail::transposition_block(next, k));
    next += 2 * k;
  };
  // Two conjugates sharing k - e/2 transpositions; product has e transpositions.
  auto pair = [&](std::uint32_t e) {
    const std::uint32_t common = k - e / 2, half = e / 2;
    Permutation c = detail::transposition_block(next, common);
    Permutation a = detail::transposition_block(next + 2 * common, half);
    Permutation b = detail::transposition_block(next + 2 * common + 2 * half, half);
    factors.push_back(compose(c, a));
    factors.push_back(compose(c, b));
    next += 2 * common + 4 * half;
  };
  auto triple = [&](std::uint32_t t) {
    if (t <= k) {
      auto lw = three_conjugates_iota(t, k);
      for (const auto& f : lw.witness.elements())
        factors.push_back(detail::shift(f, next - 1));
      next += 2 * k;
    } else {
      pair(t - k);
      single();
    }
  };
  const std::uint32_t j = *q;
  if (j == 1) {
    single();
  } else if (j % 2 == 0) {
    std::uint32_t left = l;
    for (std::uint32_t i = 0; i < j / 2; ++i) {
      std::uint32_t e = std::min(2 * k, left);
      pair(e);
      left -= e;
    }
  } else {
    const std::uint32_t rest = (j - 3) * k;
    std::uint32_t t = l > rest ? l - rest : (k % 2 ? 1 : 2);
    if ((t + k) % 2)
      ++t;
    triple(t);
    std::uint32_t left = l - t;
    for (std::uint32_t i = 0; i < (j - 3) / 2; ++i) {
      std::uint32_t e = std::min(2 * k, left);
      pair(e);
      left -= e;
    }
  }
  factors = detail::align_product(factors, canonical_iota(l));
  return make_witness(canonical_iota(k), factors, canonical_iota(l));
}

/// sigma as a product of nu(sigma) - #cycles transpositions (optimal).
inline FactorizationWitness transposition_witness(const Permutation& sigma)
{
  std::vector<Permutation> factors;
  for (const auto& cyc : sigma.cycles())
    for (std::size_t i = cyc.size() - 1; i >= 1; --i)
      factors.push_back(Permutation::from_cycles({{cyc[0], cyc[i]}}));
  return make_witness(canonical_iota(1), factors, sigma);
}

/// Generic S_inf upper bound for q_x(y): x -> iota_k0 (three conjugates),
/// iota_k0 -> iota_k1 (involution_norm), iota_k1 -> y (three conjugates).
/// Returns nullopt when y is odd and x even.
inline std::optional<FactorizationWitness> chain_witness(const CycleType& x, const CycleType& y, GammaPairSearchLimits limits = {})
{
  if (x.empty() || y.empty() || (!x.odd() && y.odd()))
    return std::nullopt;
  auto to_iota = iota_from_sigma(canonical_rep(x), limits);
  auto from_iota = sigma_from_iota(canonical_rep(y));
  auto middle = involution_witness(*to_iota.k_out, *from_iota.k_out);
  return chain(from_iota.witness, chain(middle, to_iota.witness));
}

} // namespace tsuboi
