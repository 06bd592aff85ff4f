// Command-line front end.  Exit codes: 0 ok, 1 usage, 2 uncertified result
// (budget exhausted), 3 verification failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tsuboi/tsuboi.hpp"

using nlohmann::json;
using namespace tsuboi;

namespace {

enum Exit { kOk = 0, kUsage = 1, kUncertified = 2, kVerifyFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string command_line;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  Budget budget;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

Globals G;

json manifest()
{
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - G.start).count();
  return {{"command_line", G.command_line},
          {"seed", G.seed},
          {"threads", G.threads},
          {"budgets",
           {{"max_depth", G.budget.max_depth},
            {"max_frontier", G.budget.max_frontier},
            {"max_seconds", G.budget.max_seconds},
            {"max_placements", G.budget.max_placements},
            {"char_window", G.budget.char_window},
            {"brute_max_n", G.budget.brute_max_n}}},
          {"engine_versions", {{"tsuboi", kVersion}, {"compiler", __VERSION__}}},
          {"wall_time_seconds", wall}};
}

void write_text(const std::string& path, const std::string& text)
{
  if (auto dir = std::filesystem::path(path).parent_path(); !dir.empty())
    std::filesystem::create_directories(dir);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, json j)
{
  j["manifest"] = manifest();
  write_text(path, j.dump(2) + "\n");
}

// CSV outputs carry their manifest in a sidecar file.
void write_csv(const std::string& path, const std::string& csv)
{
  write_text(path, csv);
  write_text(path + ".manifest.json", json{{"manifest", manifest()}, {"file", std::filesystem::path(path).filename().string()}}.dump(2) + "\n");
}

Ambient parse_ambient(const std::string& s)
{
  if (s == "infty" || s == "inf" || s == "infinity")
    return Ambient::infinity();
  try {
    std::size_t used = 0;
    auto n = std::stoul(s, &used);
    if (used == s.size() && n >= 1)
      return Ambient::finite(static_cast<std::uint32_t>(n));
  } catch (const std::exception&) {
  }
  throw UsageError("--ambient expects a positive integer or 'infty'");
}

Backend parse_backend(const std::string& s)
{
  if (s == "auto")
    return Backend::automatic;
  if (s == "brute")
    return Backend::brute;
  if (s == "chars")
    return Backend::chars;
  if (s == "infty")
    return Backend::infty;
  throw UsageError("--backend expects auto, brute, chars or infty");
}

std::string obstruction_text(Obstruction o)
{
  return o == Obstruction::none ? "" : " (" + to_string(o) + " obstruction)";
}

std::string q_text(const NormResult& r)
{
  if (r.certified)
    return "q = " + format_q(r.upper) + obstruction_text(r.obstruction);
  return "q in [" + format_q(r.lower) + ", " + format_q(r.upper) + "] (uncertified)";
}

json result_json(const NormResult& r)
{
  return {{"lower", q_json(r.lower)},
          {"upper", q_json(r.upper)},
          {"certified", r.certified},
          {"obstruction", to_string(r.obstruction)},
          {"method", r.method}};
}

// ---------------------------------------------------------------------------

struct NormOpts {
  std::string factor, target, ambient = "infty", backend = "auto", witness, json_out;
};

int cmd_norm(const NormOpts& o)
{
  const Permutation x = parse_cycles(o.factor);
  const Permutation y = parse_cycles(o.target);
  const Ambient amb = parse_ambient(o.ambient);
  const Backend be = parse_backend(o.backend);
  if (amb.n && (x.max_point() > *amb.n || y.max_point() > *amb.n))
    throw UsageError("a permutation moves a point above the ambient degree");
  NormResult r;
  if (be == Backend::brute) {
    if (!amb.n)
      throw UsageError("the brute backend needs a finite --ambient");
    r = q_bruteforce(x, y, *amb.n, G.budget);
  } else {
    r = compute_q(cycle_type(x), cycle_type(y), amb, be, G.budget);
  }
  std::cout << q_text(r) << "\n";
  std::optional<FactorizationWitness> w;
  if (r.witness)
    w = rebase(*r.witness, x, y);
  if (!o.witness.empty()) {
    if (!w)
      std::cerr << "no witness for this result\n";
    else
      write_json(o.witness, {{"kind", "norm"}, {"witness", witness_to_json(*w)}});
  }
  if (!o.json_out.empty()) {
    json j{{"factor", format_cycles(x)}, {"target", format_cycles(y)}, {"ambient", amb.to_string()}, {"result", result_json(r)}};
    if (w)
      j["witness"] = witness_to_json(*w);
    write_json(o.json_out, j);
  }
  if (w && !w->verifies())
    return kVerifyFailed;
  return r.certified ? kOk : kUncertified;
}

// ---------------------------------------------------------------------------

struct DistOpts {
  std::string f, g, ambient = "infty", json_out;
};

std::string log_text(std::uint32_t q)
{
  if (q == kInfinity)
    return "infinity";
  return q == 1 ? "0" : "log " + std::to_string(q);
}

std::string decimal(std::uint32_t q)
{
  if (q == kInfinity)
    return "infinity";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::log(static_cast<double>(q)));
  return buf;
}

int cmd_dist(const DistOpts& o)
{
  const CycleType f = cycle_type(parse_cycles(o.f));
  const CycleType g = cycle_type(parse_cycles(o.g));
  DistanceResult d;
  try {
    d = tsuboi_d(f, g, parse_ambient(o.ambient), G.budget);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto& q = d.qmax;
  if (q.certified) {
    std::cout << "d = " << log_text(q.upper) << " (q_max = " << format_q(q.upper) << ", certified)\n";
    std::cout << "d = " << decimal(q.upper) << "\n";
  } else {
    std::cout << "d in [" << log_text(q.lower) << ", " << log_text(q.upper) << "] (q_max in [" << format_q(q.lower)
              << ", " << format_q(q.upper) << "], uncertified)\n";
    std::cout << "d in [" << decimal(q.lower) << ", " << decimal(q.upper) << "]\n";
  }
  if (!o.json_out.empty())
    write_json(o.json_out, {{"f", f.to_string()},
                            {"g", g.to_string()},
                            {"q_f_of_g", result_json(d.f_to_g)},
                            {"q_g_of_f", result_json(d.g_to_f)},
                            {"q_max", bracket_json(q)}});
  return q.certified ? kOk : kUncertified;
}

// ---------------------------------------------------------------------------

struct SpaceOpts {
  std::uint32_t max_support = 6;
  std::string out, json_out, ambient = "infty";
};

int cmd_space(const SpaceOpts& o)
{
  const auto pts = enumerate_points(o.max_support);
  const auto m = distance_matrix(pts, parse_ambient(o.ambient), G.budget, G.threads);
  if (!o.out.empty())
    write_csv(o.out, distance_csv(m));
  if (!o.json_out.empty())
    write_json(o.json_out, distance_json(m));
  const auto check = check_metric(m);
  std::size_t uncertified = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      uncertified += !m.q[i][j].certified;
  std::cout << pts.size() << " points, " << uncertified << " uncertified ordered pairs, metric checks "
            << (check.ok() ? "pass" : "FAIL: " + check.first_failure) << " (" << check.triples_checked << " triples)\n";
  if (!check.ok())
    return kVerifyFailed;
  return uncertified ? kUncertified : kOk;
}

// ---------------------------------------------------------------------------

struct WitnessOpts {
  std::string lemma, sigma, out;
  std::uint32_t l = 0, k = 0, n = 0;
};

json lemma_json(const LemmaWitness& w)
{
  json inputs = json::object();
  for (const auto& [name, v] : w.inputs)
    inputs[name] = v;
  json checks = json::array();
  for (const auto& b : w.bound_check)
    checks.push_back({{"relation", b.relation}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds}});
  return {{"kind", "lemma"},
          {"lemma", w.lemma},
          {"inputs", inputs},
          {"k_out", w.k_out ? json(*w.k_out) : json(nullptr)},
          {"bound_checks", checks},
          {"product", format_cycles(w.witness.product())},
          {"verified", w.valid()},
          {"witness", witness_to_json(w.witness)}};
}

int cmd_witness(const WitnessOpts& o)
{
  auto need = [](std::uint32_t v, const char* flag) {
    if (v == 0)
      throw UsageError(std::string("this lemma needs ") + flag);
    return v;
  };
  auto sigma = [&] {
    if (o.sigma.empty())
      throw UsageError("this lemma needs --sigma");
    return parse_cycles(o.sigma);
  };
  LemmaWitness w;
  if (o.lemma == "three-conjugates")
    w = three_conjugates_iota(need(o.l, "--l"), need(o.k, "--k"));
  else if (o.lemma == "iota-from-gamma-pair")
    w = iota_from_gamma_pair(need(o.n, "--n"));
  else if (o.lemma == "iota-from-gamma-triple")
    w = iota_from_gamma_triple(need(o.n, "--n"));
  else if (o.lemma == "iota-from-sigma")
    w = iota_from_sigma(sigma());
  else if (o.lemma == "gamma-from-iota")
    w = gamma_from_iota(need(o.n, "--n"));
  else if (o.lemma == "sigma-from-iota")
    w = sigma_from_iota(sigma());
  else if (o.lemma == "n4-identity")
    w = n4_identity();
  else
    throw UsageError("unknown lemma '" + o.lemma + "'");
  json j = lemma_json(w);
  if (o.out.empty()) {
    j["manifest"] = manifest();
    std::cout << j.dump(2) << "\n";
  } else {
    write_json(o.out, j);
    std::cout << w.lemma << ": " << w.witness.size() << " factors, " << (w.valid() ? "verified" : "NOT verified") << "\n";
  }
  return w.valid() ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

struct RelOpts {
  std::string group, json_out;
};

int cmd_relsimple(const RelOpts& o)
{
  if (o.group.empty())
    throw UsageError("--group is required");
  const FiniteGroup g = o.group[0] == '@' ? read_group_file(o.group.substr(1), G.seed) : group_by_name(o.group);
  if (g.order() == 1)
    throw UsageError("the trivial group has no proper normal subgroup");
  const auto r = relative_simplicity_report(g);
  std::vector<std::string> names;
  for (const auto& m : r.maximal)
    names.push_back(describe_subgroup(g, m));
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? ", " : "") + v[i];
    return s;
  };
  if (r.maximum)
    std::cout << "relatively simple; maximum normal subgroup: " << describe_subgroup(g, *r.maximum) << "\n";
  else
    std::cout << "not relatively simple; maximal normal subgroups: " << join(names) << "\n";
  if (!o.json_out.empty()) {
    json maximal = json::array();
    for (std::size_t i = 0; i < r.maximal.size(); ++i)
      maximal.push_back({{"description", names[i]}, {"order", r.maximal[i].order()}});
    json j{{"group", g.name()}, {"order", g.order()}, {"relatively_simple", r.maximum.has_value()}, {"maximal", maximal}};
    if (r.maximum) {
      std::vector<std::string> labels;
      for (Elem e : r.maximum->elements)
        labels.push_back(g.label(e));
      j["maximum"] = {{"description", describe_subgroup(g, *r.maximum)}, {"order", r.maximum->order()}, {"elements", labels}};
      j["outside_elements_normally_generate"] = r.outside_generate;
      j["quotient_simple"] = r.quotient_simple;
      j["uniform_constant"] = r.uniform_constant ? json(*r.uniform_constant) : json(nullptr);
    }
    write_json(o.json_out, j);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_chartable(std::uint32_t n, const std::string& out)
{
  const auto table = character_table(n);
  const std::string csv = character_table_csv(*table);
  if (out.empty())
    std::cout << csv;
  else
    write_csv(out, csv);
  return kOk;
}

// ---------------------------------------------------------------------------

std::string file_stem(const CycleType& t)
{
  std::string s = t.to_string();
  std::replace(s.begin(), s.end(), '+', '_');
  return "sigma_" + s + ".json";
}

int cmd_density(std::uint32_t max_support, const std::string& out)
{
  if (out.empty())
    throw UsageError("--out directory is required");
  std::filesystem::create_directories(out);
  json rows = json::array();
  bool all_valid = true;
  double worst = 0;
  const auto pts = enumerate_points(max_support);
  for (const auto& t : pts) {
    const auto c = density_certificate(t);
    all_valid = all_valid && c.valid();
    worst = std::max(worst, c.radius_bound());
    write_json((std::filesystem::path(out) / file_stem(t)).string(), density_json(c));
    rows.push_back({{"sigma", t.to_string()}, {"file", file_stem(t)}, {"valid", c.valid()}, {"radius_bound", c.radius_bound()}});
  }
  write_json((std::filesystem::path(out) / "summary.json").string(),
             {{"max_support", max_support}, {"all_valid", all_valid}, {"max_radius_bound", worst}, {"certificates", rows}});
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", worst);
  std::cout << pts.size() << " certificates, " << (all_valid ? "all valid" : "SOME INVALID") << ", largest radius bound "
            << buf << "\n";
  return all_valid ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

int cmd_qi(std::uint32_t max_support, const std::string& out)
{
  const auto r = qi_report(enumerate_points(max_support), G.budget);
  if (!out.empty())
    write_json(out, qi_json(r));
  std::size_t uncertified = 0;
  for (const auto& row : r.rows)
    uncertified += !row.to_base.certified;
  char buf[128];
  std::snprintf(buf, sizeof buf, "fit: log q_max ~ %.4f log nu + %.4f, max deviation %.4f", r.slope, r.intercept,
                r.max_deviation);
  std::cout << buf << " (" << r.rows.size() << " points, empirical only)\n";
  return uncertified ? kUncertified : kOk;
}

// ---------------------------------------------------------------------------
// Independent re-verification: only cycle parsing and multiplication.

void collect_witnesses(const json& j, std::vector<const json*>& out)
{
  if (j.is_object()) {
    if (j.contains("base") && j.contains("factors") && j.contains("target"))
      out.push_back(&j);
    for (const auto& [k, v] : j.items())
      if (k != "manifest")
        collect_witnesses(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j)
      collect_witnesses(v, out);
  }
}

bool check_witness(const json& w, std::string& why)
{
  const Permutation base = parse_cycles(w.at("base").get<std::string>());
  const Permutation target = parse_cycles(w.at("target").get<std::string>());
  const Permutation base_inv = inverse(base);
  std::vector<Permutation> elems;
  for (const auto& f : w.at("factors")) {
    const int e = f.at("exponent").get<int>();
    if (e != 1 && e != -1) {
      why = "exponent is not +1 or -1";
      return false;
    }
    const Permutation c = parse_cycles(f.at("conjugator").get<std::string>());
    elems.push_back(compose(c, compose(e > 0 ? base : base_inv, inverse(c))));
  }
  if (product(elems) != target) {
    why = "product " + format_cycles(product(elems)) + " differs from target " + format_cycles(target);
    return false;
  }
  return true;
}

int cmd_verify(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<const json*> ws;
  collect_witnesses(j, ws);
  if (ws.empty()) {
    std::cout << "no witnesses found in " << path << "\n";
    return kVerifyFailed;
  }
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::string why;
    if (!check_witness(*ws[i], why)) {
      std::cout << "verification failed for witness " << i + 1 << ": " << why << "\n";
      return kVerifyFailed;
    }
  }
  std::cout << "verified " << ws.size() << " witness" << (ws.size() == 1 ? "" : "es") << "\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv)
{
  for (int i = 0; i < argc; ++i)
    G.command_line += (i ? " " : "") + std::string(i ? argv[i] : "tsuboi");

  CLI::App app{"Conjugate-factorization norms, the Tsuboi metric on S_inf, and relative simplicity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", G.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--threads", G.threads, "worker threads; output does not depend on it")->capture_default_str();
  app.add_option("--budget-depth", G.budget.max_depth, "largest search depth")->capture_default_str();
  app.add_option("--budget-seconds", G.budget.max_seconds, "time limit per query")->capture_default_str();
  app.add_option("--budget-placements", G.budget.max_placements, "placement limit per query")->capture_default_str();

  NormOpts norm;
  auto* c_norm = app.add_subcommand("norm", "q_x(y): least number of conjugates of x or x^-1 with product y");
  c_norm->add_option("--factor", norm.factor, "x in cycle notation")->required();
  c_norm->add_option("--target", norm.target, "y in cycle notation; empty for the identity")->required();
  c_norm->add_option("--ambient", norm.ambient, "N or infty")->capture_default_str();
  c_norm->add_option("--backend", norm.backend, "auto, brute, chars or infty")->capture_default_str();
  c_norm->add_option("--budget-depth", G.budget.max_depth, "largest search depth");
  c_norm->add_option("--witness", norm.witness, "write the factorization witness as JSON");
  c_norm->add_option("--json", norm.json_out, "write the result as JSON");

  DistOpts dist;
  auto* c_dist = app.add_subcommand("dist", "d([f],[g]) = log max(q_f(g), q_g(f))");
  c_dist->add_option("--f", dist.f)->required();
  c_dist->add_option("--g", dist.g)->required();
  c_dist->add_option("--ambient", dist.ambient, "N or infty")->capture_default_str();
  c_dist->add_option("--json", dist.json_out, "write the result as JSON");

  SpaceOpts space;
  auto* c_space = app.add_subcommand("space", "distance matrix on odd cycle types with support <= B");
  c_space->add_option("--max-support", space.max_support, "B")->required();
  c_space->add_option("--out", space.out, "CSV output");
  c_space->add_option("--json", space.json_out, "JSON output");
  c_space->add_option("--ambient", space.ambient, "N or infty")->capture_default_str();

  WitnessOpts wit;
  auto* c_wit = app.add_subcommand("witness", "emit a verified construction witness");
  c_wit->add_option("lemma", wit.lemma,
                    "three-conjugates | iota-from-gamma-pair | iota-from-gamma-triple | iota-from-sigma | "
                    "gamma-from-iota | sigma-from-iota | n4-identity")
      ->required();
  c_wit->add_option("--l", wit.l);
  c_wit->add_option("--k", wit.k);
  c_wit->add_option("--n", wit.n);
  c_wit->add_option("--sigma", wit.sigma, "permutation in cycle notation");
  c_wit->add_option("--out", wit.out, "write JSON here instead of stdout");

  RelOpts rel;
  auto* c_rel = app.add_subcommand("relsimple", "maximum normal subgroup of a finite group");
  c_rel->add_option("--group", rel.group, "S4, A5, C6, D8, C2xS3, or @file (table .csv or generator file)")->required();
  c_rel->add_option("--json", rel.json_out, "write the report as JSON");

  std::uint32_t chart_n = 0;
  std::string chart_out;
  auto* c_chart = app.add_subcommand("chartable", "character table of S_n as CSV");
  c_chart->add_option("--n", chart_n)->required()->check(CLI::Range(1u, detail::kMaxCharacterDegree));
  c_chart->add_option("--out", chart_out, "CSV output (stdout when omitted)");

  std::uint32_t dens_b = 0;
  std::string dens_out;
  auto* c_dens = app.add_subcommand("density", "distance-to-skeleton certificates for odd types with support <= B");
  c_dens->add_option("--max-support", dens_b)->required();
  c_dens->add_option("--out", dens_out, "output directory")->required();

  std::uint32_t qi_b = 0;
  std::string qi_out;
  auto* c_qi = app.add_subcommand("qi", "empirical comparison of distances with log support");
  c_qi->add_option("--max-support", qi_b)->required();
  c_qi->add_option("--out", qi_out, "JSON output");

  std::string verify_file;
  auto* c_verify = app.add_subcommand("verify", "re-check every witness in a JSON file by multiplication");
  c_verify->add_option("file", verify_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*c_norm)
      return cmd_norm(norm);
    if (*c_dist)
      return cmd_dist(dist);
    if (*c_space)
      return cmd_space(space);
    if (*c_wit)
      return cmd_witness(wit);
    if (*c_rel)
      return cmd_relsimple(rel);
    if (*c_chart)
      return cmd_chartable(chart_n, chart_out);
    if (*c_dens)
      return cmd_density(dens_b, dens_out);
    if (*c_qi)
      return cmd_qi(qi_b, qi_out);
    if (*c_verify)
      return cmd_verify(verify_file);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kUncertified;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
