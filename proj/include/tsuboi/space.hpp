#pragma once

// Finite truncations of the space of odd cycle types with the metric
// d([f],[g]) = log max{q_f(g), q_g(f)} on S_inf.  Distances are kept as the
// integer q-max; logarithms only appear in reports.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "tsuboi/constructions.hpp"
#include "tsuboi/norm.hpp"
#include "tsuboi/partitions.hpp"
#include "tsuboi/permutation.hpp"
#include "tsuboi/witness.hpp"

namespace tsuboi {

/// All odd cycle types with 2 <= nu <= max_support, ordered by number of
/// cycles, then support, then cycle lengths.
inline std::vector<CycleType> enumerate_points(std::uint32_t max_support)
{
  if (max_support < 2)
    throw std::invalid_argument("enumerate_points needs max_support >= 2");
  std::vector<CycleType> out;
  for (std::uint32_t n = 2; n <= max_support; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      CycleType t = p.cycle_type();
      if (t.support() == n && t.odd())
        out.push_back(t);
    }
  std::sort(out.begin(), out.end(), [](const CycleType& a, const CycleType& b) {
    if (a.lengths().size() != b.lengths().size())
      return a.lengths().size() < b.lengths().size();
    if (a.support() != b.support())
      return a.support() < b.support();
    return a.lengths() < b.lengths();
  });
  return out;
}

inline std::uint64_t pow3(std::uint32_t e)
{
  std::uint64_t r = 1;
  while (e--)
    r *= 3;
  return r;
}

// ---------------------------------------------------------------------------
// Skeleton X = {[iota_{3^k}]}.

struct SkeletonEntry {
  std::uint32_t k = 0, l = 0;
  NormResult down; ///< q over iota_{3^l} of iota_{3^k}
  NormResult up;   ///< q over iota_{3^k} of iota_{3^l}
  std::uint64_t expected_qmax = 1;

  std::uint32_t qmax() const { return std::max(down.upper, up.upper); }
  bool ok() const { return down.certified && up.certified && qmax() == expected_qmax; }
};

/// Checks d([iota_{3^k}], [iota_{3^l}]) = |k - l| log 3 for 1 <= k <= l <= kmax.
inline std::vector<SkeletonEntry> skeleton_check(std::uint32_t kmax, const Budget& budget = {})
{
  if (kmax < 1)
    throw std::invalid_argument("skeleton_check needs kmax >= 1");
  std::vector<SkeletonEntry> out;
  for (std::uint32_t k = 1; k <= kmax; ++k)
    for (std::uint32_t l = k; l <= kmax; ++l) {
      SkeletonEntry e;
      e.k = k;
      e.l = l;
      const auto small = CycleType::involution(static_cast<std::uint32_t>(pow3(k)));
      const auto big = CycleType::involution(static_cast<std::uint32_t>(pow3(l)));
      e.down = q_infty(big, small, budget);
      e.up = q_infty(small, big, budget);
      e.expected_qmax = pow3(l - k);
      out.push_back(std::move(e));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Distance matrices.

struct DistanceMatrix {
  std::vector<CycleType> points;
  std::vector<std::vector<QBracket>> q; ///< q[i][j] = q_{p_i}(p_j)

  std::size_t size() const { return points.size(); }
  QBracket qmax(std::size_t i, std::size_t j) const
  {
    QBracket b{std::max(q[i][j].lower, q[j][i].lower), std::max(q[i][j].upper, q[j][i].upper), false};
    b.certified = b.lower == b.upper;
    return b;
  }
};

/// Pairwise q values, computed in parallel and assembled by index.
inline DistanceMatrix distance_matrix(const std::vector<CycleType>& points, Ambient ambient = Ambient::infinity(),
                                      const Budget& budget = {}, unsigned threads = 1)
{
  DistanceMatrix m;
  m.points = points;
  const std::size_t n = points.size();
  m.q.assign(n, std::vector<QBracket>(n));
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      jobs.emplace_back(i, j);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < jobs.size();) {
      auto [i, j] = jobs[idx];
      if (i == j)
        m.q[i][j] = {1, 1, true};
      else
        m.q[i][j] = to_bracket(compute_q(points[i], points[j], ambient, Backend::automatic, budget));
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(work);
  work();
  for (auto& t : pool)
    t.join();
  return m;
}

inline std::string bracket_text(const QBracket& b)
{
  if (b.certified)
    return format_q(b.upper);
  return "[" + format_q(b.lower) + "," + format_q(b.upper) + "]";
}

/// CSV of the q-max matrix: header of type strings, one row per point, and a
/// `certified` column that is true when every entry of the row is.
inline std::string distance_csv(const DistanceMatrix& m)
{
  std::ostringstream out;
  out << "point";
  for (const auto& p : m.points)
    out << ',' << p.to_string();
  out << ",certified\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << m.points[i].to_string();
    bool all = true;
    for (std::size_t j = 0; j < m.size(); ++j) {
      auto b = m.qmax(i, j);
      all = all && b.certified;
      out << ',' << bracket_text(b);
    }
    out << ',' << (all ? "true" : "false") << '\n';
  }
  return out.str();
}

inline nlohmann::json q_json(std::uint32_t q) { return q == kInfinity ? nlohmann::json(nullptr) : nlohmann::json(q); }

inline nlohmann::json bracket_json(const QBracket& b)
{
  return {{"lower", q_json(b.lower)}, {"upper", q_json(b.upper)}, {"certified", b.certified}};
}

inline nlohmann::json distance_json(const DistanceMatrix& m)
{
  nlohmann::json pts = nlohmann::json::array(), qmax = nlohmann::json::array(), q = nlohmann::json::array();
  for (const auto& p : m.points)
    pts.push_back(p.to_string());
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array(), qrow = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      row.push_back(bracket_json(m.qmax(i, j)));
      qrow.push_back(bracket_json(m.q[i][j]));
    }
    qmax.push_back(row);
    q.push_back(qrow);
  }
  return {{"points", pts}, {"qmax", qmax}, {"q", q}};
}

struct MetricCheck {
  bool zero_diagonal = true;
  bool symmetric = true;
  bool triangle = true;
  std::size_t triples_checked = 0;
  std::string first_failure;

  bool ok() const { return zero_diagonal && symmetric && triangle; }
};

/// Zero diagonal, symmetry of q-max, and on certified triples both
/// q_f(h) <= q_f(g) q_g(h) and the resulting d-triangle.
inline MetricCheck check_metric(const DistanceMatrix& m)
{
  MetricCheck c;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag)
      c.first_failure = what;
    flag = false;
  };
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m.qmax(i, i).upper != 1)
      fail(c.zero_diagonal, "diagonal at " + m.points[i].to_string());
    for (std::size_t j = 0; j < n; ++j) {
      auto a = m.qmax(i, j), b = m.qmax(j, i);
      if (a.lower != b.lower || a.upper != b.upper)
        fail(c.symmetric, "asymmetry at " + m.points[i].to_string() + ", " + m.points[j].to_string());
    }
  }
  auto mul = [](std::uint64_t a, std::uint64_t b) { return a * b; };
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        const auto &fh = m.q[f][h], &fg = m.q[f][g], &gh = m.q[g][h];
        if (!fh.certified || !fg.certified || !gh.certified || fg.upper == kInfinity || gh.upper == kInfinity)
          continue;
        ++c.triples_checked;
        if (fh.upper > mul(fg.upper, gh.upper))
          fail(c.triangle, "q triangle at " + m.points[f].to_string() + ", " + m.points[g].to_string() + ", " +
                               m.points[h].to_string());
        auto dfh = m.qmax(f, h), dfg = m.qmax(f, g), dgh = m.qmax(g, h);
        if (dfh.certified && dfg.certified && dgh.certified && dfh.upper > mul(dfg.upper, dgh.upper))
          fail(c.triangle, "d triangle at " + m.points[f].to_string() + ", " + m.points[g].to_string() + ", " +
                               m.points[h].to_string());
      }
  return c;
}

// ---------------------------------------------------------------------------
// Coarse density of the skeleton.

struct ChainLink {
  CycleType from, to;
  std::uint64_t q_bound = 0; ///< q_from(to) <= q_bound, with a witness of that many factors
  FactorizationWitness witness;

  bool verified() const
  {
    return witness.verifies() && witness.size() <= q_bound && cycle_type(witness.base) == from &&
           cycle_type(witness.target) == to;
  }
};

struct DensityCertificate {
  CycleType sigma;
  std::uint32_t k0 = 0, k1 = 0;
  std::uint32_t nearest_skeleton = 0; ///< exponent l of iota_{3^l}
  std::vector<ChainLink> chain;       ///< sigma -> iota_k0 -> iota_9k0 -> iota_k1 -> sigma
  ChainLink iota_to_sigma;            ///< composite of the last three links
  ChainLink to_skeleton;              ///< iota_k0 -> iota_{3^l}
  ChainLink from_skeleton;            ///< iota_{3^l} -> iota_k0
  std::uint64_t q_sigma_to_x = 1;     ///< bound on q_sigma(x)
  std::uint64_t q_x_to_sigma = 1;     ///< bound on q_x(sigma)
  bool on_skeleton = false;

  double radius_bound() const
  {
    return on_skeleton ? 0.0 : std::log(static_cast<double>(std::max(q_sigma_to_x, q_x_to_sigma)));
  }
  /// d_as(sigma, iota_k0) <= log 3 and d_as(iota_k0, sigma) <= 4 log 3.
  bool leg_bounds_hold() const { return chain.front().witness.size() <= 3 && iota_to_sigma.witness.size() <= 81; }
  bool valid() const
  {
    bool ok = k1 <= 9 * k0 && leg_bounds_hold() && iota_to_sigma.verified() && to_skeleton.verified() &&
              from_skeleton.verified() && to_skeleton.witness.size() <= 3 && from_skeleton.witness.size() <= 9;
    for (const auto& l : chain)
      ok = ok && l.verified();
    return ok;
  }
};

inline ChainLink make_link(const FactorizationWitness& w, std::uint64_t bound)
{
  return {cycle_type(w.base), cycle_type(w.target), bound, w};
}

inline DensityCertificate density_certificate(const CycleType& sigma)
{
  if (sigma.empty() || !sigma.odd())
    throw std::invalid_argument("density certificates need an odd cycle type");
  DensityCertificate c;
  c.sigma = sigma;
  const Permutation rep = canonical_rep(sigma);
  auto to_iota = iota_from_sigma(rep);
  auto from_iota = sigma_from_iota(rep);
  c.k0 = *to_iota.k_out;
  c.k1 = *from_iota.k_out;
  if (c.k1 > 9 * c.k0)
    throw VerificationError("k1 > 9 k0 for " + sigma.to_string());
  auto up = involution_witness(c.k0, 9 * c.k0);
  auto across = three_conjugates_iota(c.k1, 9 * c.k0);
  c.chain = {make_link(to_iota.witness, 3), make_link(up, 9), make_link(across.witness, 3), make_link(from_iota.witness, 3)};
  c.iota_to_sigma = make_link(chain(from_iota.witness, chain(across.witness, up)), 81);

  std::uint32_t l = 0;
  while (pow3(l + 1) <= c.k0)
    ++l;
  c.nearest_skeleton = l;
  const auto x = static_cast<std::uint32_t>(pow3(l));
  c.to_skeleton = make_link(three_conjugates_iota(x, c.k0).witness, 3);
  c.from_skeleton = make_link(involution_witness(x, c.k0), 9);
  c.q_sigma_to_x = c.chain.front().witness.size() * c.to_skeleton.witness.size();
  c.q_x_to_sigma = c.from_skeleton.witness.size() * c.iota_to_sigma.witness.size();

  if (sigma.is_involution()) {
    const auto k = sigma.lengths().size();
    for (std::uint32_t e = 0; pow3(e) <= k; ++e)
      if (pow3(e) == k) {
        c.on_skeleton = true;
        c.nearest_skeleton = e;
        c.q_sigma_to_x = c.q_x_to_sigma = 1;
      }
  }
  return c;
}

inline nlohmann::json link_json(const ChainLink& l)
{
  return {{"from", l.from.to_string()}, {"to", l.to.to_string()}, {"q_bound", l.q_bound},
          {"factors", l.witness.size()}, {"witness", witness_to_json(l.witness)}};
}

inline nlohmann::json density_json(const DensityCertificate& c)
{
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& l : c.chain)
    chain.push_back(link_json(l));
  return {{"sigma", c.sigma.to_string()},
          {"k0", c.k0},
          {"k1", c.k1},
          {"nearest_skeleton_exponent", c.nearest_skeleton},
          {"on_skeleton", c.on_skeleton},
          {"chain", chain},
          {"iota_k0_to_sigma", link_json(c.iota_to_sigma)},
          {"to_skeleton", link_json(c.to_skeleton)},
          {"from_skeleton", link_json(c.from_skeleton)},
          {"q_sigma_to_x_bound", c.q_sigma_to_x},
          {"q_x_to_sigma_bound", c.q_x_to_sigma},
          {"radius_bound", c.radius_bound()},
          {"valid", c.valid()}};
}

// ---------------------------------------------------------------------------
// Empirical comparison with the half line: d to [iota_1] against log nu.

struct QiRow {
  CycleType point;
  std::uint64_t nu = 0;
  QBracket to_base;      ///< q-max with iota_1
  QBracket to_skeleton;  ///< smallest q-max with a skeleton point tried
  std::uint32_t skeleton_exponent = 0;
};

struct QiReport {
  std::vector<QiRow> rows;
  double slope = 0, intercept = 0, max_deviation = 0; ///< d ~ slope log(nu) + intercept, within max_deviation
};

inline QBracket qmax_of(const NormResult& a, const NormResult& b)
{
  QBracket q{std::max(a.lower, b.lower), std::max(a.upper, b.upper), false};
  q.certified = q.lower == q.upper;
  return q;
}

/// Budget for the distances to skeleton points, whose large involution windows
/// rarely certify; these are reported as brackets.
inline Budget default_skeleton_budget()
{
  Budget b;
  b.max_placements = 1'000'000;
  return b;
}

inline QiReport qi_report(const std::vector<CycleType>& points, const Budget& budget = {},
                          const Budget& skeleton_budget = default_skeleton_budget())
{
  QiReport rep;
  const CycleType base = CycleType::involution(1);
  for (const auto& p : points) {
    QiRow row;
    row.point = p;
    row.nu = p.support();
    row.to_base = qmax_of(q_infty(base, p, budget), q_infty(p, base, budget));
    row.to_skeleton = {kInfinity, kInfinity, false};
    // skeleton candidates up to one past the density snapping 3^l <= k0 < 3^{l+1}
    const std::uint32_t k0 = *iota_from_sigma(canonical_rep(p)).k_out;
    std::uint32_t l = 0;
    while (pow3(l + 1) <= k0)
      ++l;
    for (std::uint32_t e = 0; e <= l + 1; ++e) {
      const auto x = CycleType::involution(static_cast<std::uint32_t>(pow3(e)));
      auto q = qmax_of(q_infty(x, p, skeleton_budget), q_infty(p, x, skeleton_budget));
      if (q.upper < row.to_skeleton.upper) {
        row.to_skeleton = q;
        row.skeleton_exponent = e;
      }
    }
    rep.rows.push_back(row);
  }
  // least squares of log(qmax upper) on log(nu)
  const double n = static_cast<double>(rep.rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rep.rows) {
    double x = std::log(static_cast<double>(r.nu)), y = r.to_base.log_upper();
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (n >= 2 && den > 1e-12) {
    rep.slope = (n * sxy - sx * sy) / den;
    rep.intercept = (sy - rep.slope * sx) / n;
  } else if (n >= 1) {
    rep.intercept = sy / n;
  }
  for (const auto& r : rep.rows)
    rep.max_deviation = std::max(rep.max_deviation, std::abs(r.to_base.log_upper() -
                                                             (rep.slope * std::log(static_cast<double>(r.nu)) + rep.intercept)));
  return rep;
}

inline nlohmann::json qi_json(const QiReport& r)
{
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"point", row.point.to_string()},
                    {"nu", row.nu},
                    {"qmax_to_iota_1", bracket_json(row.to_base)},
                    {"nearest_skeleton_exponent", row.skeleton_exponent},
                    {"qmax_to_skeleton", bracket_json(row.to_skeleton)}});
  return {{"note", "empirical illustration of the half-line comparison, not a proof"},
          {"fit", {{"x", "log nu"}, {"y", "log qmax to iota_1"}, {"slope", r.slope}, {"intercept", r.intercept},
                   {"max_deviation", r.max_deviation}}},
          {"rows", rows}};
}

} // namespace tsuboi
