#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "exmatch/bounds/cover_bound.hpp"
#include "exmatch/bounds/hyperplane.hpp"
#include "exmatch/bounds/nnmf.hpp"
#include "exmatch/bounds/rank_certificate.hpp"
#include "exmatch/core/errors.hpp"
#include "exmatch/core/graph_io.hpp"
#include "exmatch/oracle/enumeration.hpp"
#include "exmatch/partition/partition.hpp"
#include "exmatch/partition/permutation_family.hpp"
#include "exmatch/partition/samplers.hpp"
#include "exmatch/polytope/relaxation.hpp"
#include "exmatch/polytope/slack_matrix.hpp"
#include "exmatch/solver/parity_solver.hpp"

using namespace exmatch;
using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCap = 3, kInternal = 4 };

// A user error found after parsing; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  if (const char* env = std::getenv("EXMATCH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Common {
  std::uint64_t seed = 0;
  unsigned threads = default_threads();
  bool timing = false;
  std::string out;
  std::size_t max_n = 6;
  std::size_t rect_cap = 22;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Base seed")->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (default: EXMATCH_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--timing", c.timing, "Add wall-clock seconds to the report");
  sub->add_option("--out", c.out, "Output file (default: stdout)");
}

void add_enum_cap(CLI::App* sub, Common& c) {
  sub->add_option("--max-n", c.max_n, "Enumeration cap on n")->capture_default_str();
}

EnumerationLimits limits(const Common& c) {
  EnumerationLimits l;
  l.max_n = c.max_n;
  l.max_label_vertices = 2 * c.max_n;
  l.threads = c.threads;
  return l;
}

// Thread count is left out: outputs do not depend on it.
ordered_json header(const std::string& command, const Common& c, ordered_json config) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  j["seed"] = c.seed;
  return j;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const Common& c, const ordered_json& j) {
  Output o(c.out);
  o.stream() << j.dump(2) << '\n';
}

using Clock = std::chrono::steady_clock;

void stamp(const Common& c, ordered_json& j, Clock::time_point t0) {
  if (c.timing) j["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
}

Parity parity_arg(const std::string& s) {
  try {
    return parse_parity(s);
  } catch (const std::exception&) {
    throw UsageError("parity must be odd or even, got '" + s + "'");
  }
}

ordered_json edge_json(const Edge& e) {
  return ordered_json::array({e.u + 1, e.v + 1, std::string(1, color_code(e.color))});
}

ordered_json matching_edges(const Matching& m) {
  ordered_json a = ordered_json::array();
  for (const Edge& e : m.edges()) a.push_back(edge_json(e));
  return a;
}

Matching matching_from_json(const nlohmann::json& a) {
  std::vector<Edge> es;
  for (const auto& e : a) {
    const auto c = e.at(2).get<std::string>();
    if (c != "R" && c != "B") throw FormatError("edge color must be R or B");
    es.push_back({e.at(0).get<std::uint32_t>() - 1, e.at(1).get<std::uint32_t>() - 1,
                  c == "R" ? Color::red : Color::blue});
  }
  return Matching(std::move(es));
}

ordered_json rationals(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

ordered_json matrix_json(const RationalMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).str());
    rows.push_back(std::move(r));
  }
  return rows;
}

RationalMatrix read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return read_matrix_csv(in);
}

// ---- solve ----

struct SolveArgs {
  std::string graph;
  std::string parity = "odd";
};

int run_solve(const SolveArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const auto g = read_graph_file(a.graph);
  const Parity p = parity_arg(a.parity);
  const auto r = solve_parity(g, p);
  auto j = header("solve", c, {{"graph", a.graph}, {"parity", parity_name(p)}});
  j["kind"] = result_kind_name(r.kind);
  if (r.matching) j["matching"] = matching_edges(*r.matching);
  if (r.certificate) j["certificate"] = r.certificate->to_bitstring();
  if (r.hall) {
    ordered_json h;
    h["side"] = r.hall->left_side ? "left" : "right";
    ordered_json set = ordered_json::array(), nb = ordered_json::array();
    for (auto x : r.hall->set) set.push_back(x + 1);
    for (auto x : r.hall->neighbors) nb.push_back(x + 1);
    h["set"] = std::move(set);
    h["neighbors"] = std::move(nb);
    j["hall"] = std::move(h);
  }
  ordered_json stats;
  stats["relevant_edges"] = r.stats.relevant_edges;
  stats["components"] = r.stats.components;
  stats["rotations"] = r.stats.rotations;
  if (c.timing) stats["pm_time"] = r.stats.pm_seconds;
  j["stats"] = std::move(stats);
  j["verified"] = verify_result(g, p, r);
  stamp(c, j, t0);
  emit(c, j);
  return r.kind == ResultKind::matching_found ? kOk : kNegative;
}

// ---- exact ----

struct ExactArgs {
  std::string graph;
  std::size_t k = 0;
};

int run_exact(const ExactArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const auto g = read_graph_file(a.graph);
  const auto lim = limits(c);
  const auto found = enumerate_exact_k(g, a.k, lim);
  auto j = header("exact", c, {{"graph", a.graph}, {"k", a.k}, {"max_n", c.max_n}});
  j["found"] = !found.empty();
  j["count"] = found.size();
  if (!found.empty()) {
    j["matching"] = matching_edges(found.front());
  } else {
    // Exhaustion proof: the full enumeration, replayable from the config.
    j["certificate"] = {{"kind", "exhaustive_enumeration"},
                        {"perfect_matchings", count_perfect_matchings(g, lim)}};
  }
  stamp(c, j, t0);
  emit(c, j);
  return found.empty() ? kNegative : kOk;
}

// ---- enumerate ----

struct EnumerateArgs {
  std::string graph;
  std::string parity = "any";
  bool list = false;
};

int run_enumerate(const EnumerateArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const auto g = read_graph_file(a.graph);
  std::optional<Parity> p;
  if (a.parity != "any") p = parity_arg(a.parity);
  const auto all = enumerate_perfect_matchings(g, limits(c));
  std::size_t odd = 0;
  for (const auto& m : all) odd += m.red_parity() == Parity::odd;
  auto config = ordered_json{{"graph", a.graph}, {"parity", a.parity}, {"list", a.list}, {"max_n", c.max_n}};
  Output o(c.out);
  if (a.list) {
    std::size_t index = 0;
    for (const auto& m : all) {
      if (p && m.red_parity() != *p) continue;
      ordered_json line;
      line["schema_version"] = kSchemaVersion;
      line["index"] = index++;
      line["red"] = m.red_count();
      line["matching"] = matching_edges(m);
      o.stream() << line.dump() << '\n';
    }
    return kOk;
  }
  auto j = header("enumerate", c, std::move(config));
  j["perfect_matchings"] = all.size();
  j["odd"] = odd;
  j["even"] = all.size() - odd;
  stamp(c, j, t0);
  o.stream() << j.dump(2) << '\n';
  return kOk;
}

// ---- relax ----

struct RelaxArgs {
  std::string graph;
  std::string parity = "odd";
  std::string mode = "lazy";
};

int run_relax(const RelaxArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const auto g = read_graph_file(a.graph);
  const Parity p = parity_arg(a.parity);
  const auto lp = build_relaxation(g, p, limits(c));
  const auto v = lp_feasible(lp, a.mode == "full" ? LpMode::full : LpMode::lazy);
  auto j = header("relax", c, {{"graph", a.graph}, {"parity", parity_name(p)}, {"mode", a.mode}, {"max_n", c.max_n}});
  j["feasible"] = v.feasible;
  j["labeling_rows"] = lp.num_labeling_rows();
  if (v.feasible) {
    j["witness"] = rationals(v.witness);
    j["witness_integral"] = v.witness_integral;
  } else {
    ordered_json rows = ordered_json::array();
    for (auto r : v.active_rows) rows.push_back(lp.labelings[r].to_bitstring());
    j["active_labelings"] = std::move(rows);
    j["farkas"] = rationals(v.farkas);
    j["farkas_valid"] = is_farkas_certificate(restricted_system(lp, v.active_rows), v.farkas);
  }
  j["rounds"] = v.rounds;
  j["pivots"] = v.pivots;
  stamp(c, j, t0);
  emit(c, j);
  return v.feasible ? kOk : kNegative;
}

// ---- slack ----

struct SlackArgs {
  std::size_t n = 2;
  std::string parity = "odd";
  bool degree = false;
  std::string sidecar;
};

int run_slack(const SlackArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const Parity p = parity_arg(a.parity);
  if (a.n > c.max_n) throw CapExceeded("n = " + std::to_string(a.n) + " exceeds --max-n " + std::to_string(c.max_n));
  const auto s = build_slack_matrix(ColoredBipartiteGraph::complete_double(a.n), p, limits(c), a.degree);
  std::vector<std::string> rn, cn;
  for (std::size_t i = 0; i < s.num_rows(); ++i) rn.push_back(s.row_name(i));
  for (std::size_t j = 0; j < s.num_cols(); ++j) cn.push_back(s.col_name(j));
  std::ostringstream comment;
  comment << "schema_version=" << kSchemaVersion << " command=slack n=" << a.n << " parity=" << parity_name(p)
          << " degree=" << (a.degree ? 1 : 0) << " max_n=" << c.max_n << " seed=" << c.seed << " rows=" << s.num_rows()
          << " cols=" << s.num_cols();
  if (c.timing) comment << " seconds=" << std::chrono::duration<double>(Clock::now() - t0).count();
  Output o(c.out);
  write_matrix_csv(o.stream(), s.entries, rn, cn, comment.str());
  if (!a.sidecar.empty()) {
    std::ofstream side(a.sidecar);
    if (!side) throw UsageError("cannot write " + a.sidecar);
    side << slack_sidecar_json(s) << '\n';
  }
  return kOk;
}

// ---- bounds ----

struct BoundsArgs {
  std::string matrix;
  std::string bound = "rank";
  std::string weights;
  std::string search = "exhaustive";
  std::size_t rank = 0;
  std::size_t restarts = 10;
  std::size_t iterations = 20000;
};

ordered_json value_fields(const std::string& name, const Rational& v) {
  return {{"bound_name", name}, {"value_num", numerator_string(v)}, {"value_den", denominator_string(v)}};
}

ordered_json factorization_json(const Factorization& f) {
  return {{"rank", f.rank()}, {"w", matrix_json(f.w)}, {"h", matrix_json(f.h)}};
}

bool is_weight_cell(const std::string& x) {
  if (x == "-inf") return true;
  try {
    parse_rational(x);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

// Same layout as the matrix CSV, with "-inf" for forbidden weights. A header
// row and a leading name column are skipped when present.
WeightMatrix read_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  if (!rows.empty() && !std::all_of(rows[0].begin(), rows[0].end(), is_weight_cell)) rows.erase(rows.begin());
  if (rows.empty()) throw FormatError(path + ": no weights");
  const bool names = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.empty() && !is_weight_cell(r[0]); });
  const std::size_t skip = names ? 1 : 0;
  const std::size_t cols = rows[0].size() - skip;
  WeightMatrix w(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols + skip) throw FormatError(path + ": ragged row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& x = rows[i][j + skip];
      if (x == "-inf") w.at(i, j) = Weight::forbidden();
      else if (is_weight_cell(x)) w.at(i, j) = Weight(parse_rational(x));
      else throw FormatError(path + ": bad weight '" + x + "'");
    }
  }
  return w;
}

int run_bounds(const BoundsArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const auto s = read_csv_file(a.matrix);
  ordered_json config{{"matrix", a.matrix}, {"bound", a.bound}};
  ordered_json j;
  if (a.bound == "hyperplane") {
    if (a.weights.empty()) throw UsageError("hyperplane needs --weights");
    SearchOptions so;
    so.mode = a.search == "local" ? SearchMode::local_search : SearchMode::exhaustive;
    so.exhaustive_cap = c.rect_cap;
    so.seed = c.seed;
    so.threads = c.threads;
    config["weights"] = a.weights;
    config["search"] = a.search;
    config["rect_cap"] = c.rect_cap;
    const auto b = hyperplane_bound(s, read_weights(a.weights), so);
    j = header("bounds", c, std::move(config));
    if (!b.defined) {
      j["bound_name"] = "hyperplane";
      j["defined"] = false;
      j["reason"] = b.reason;
    } else {
      j.update(value_fields("hyperplane", b.value));
      j["defined"] = true;
      j["certified"] = b.certified;
      j["witness"] = {{"inner", b.inner.str()},
                      {"s_max", b.s_max.str()},
                      {"max_rectangle_value", b.max_rect.value.str()},
                      {"rows", b.max_rect.rect.rows},
                      {"cols", b.max_rect.rect.cols}};
    }
  } else if (a.bound == "cover") {
    const auto b = rectangle_cover_bound(s);
    j = header("bounds", c, std::move(config));
    j.update(value_fields("cover", b.value));
    ordered_json rects = ordered_json::array();
    for (std::size_t i = 0; i < b.rectangles.size(); ++i)
      rects.push_back({{"rows", b.rectangles[i].rows}, {"cols", b.rectangles[i].cols}, {"weight", b.weights[i].str()}});
    j["witness"] = {{"rectangles", std::move(rects)}, {"candidates", b.candidates}, {"rounds", b.rounds}};
  } else if (a.bound == "nnmf") {
    if (a.rank == 0) throw UsageError("nnmf needs --rank");
    NnmfOptions no;
    no.rank = a.rank;
    no.restarts = a.restarts;
    no.max_iterations = a.iterations;
    no.seed = c.seed;
    config["rank"] = a.rank;
    config["restarts"] = a.restarts;
    config["iterations"] = a.iterations;
    const auto r = nnmf_upper_bound(s, no);
    j = header("bounds", c, std::move(config));
    j["bound_name"] = "nnmf";
    j["error"] = r.error;
    j["exact"] = r.exact.has_value();
    if (r.exact) {
      j.update(value_fields("nnmf", Rational(static_cast<long>(r.exact->rank()))));
      j["witness"] = factorization_json(*r.exact);
    }
    stamp(c, j, t0);
    emit(c, j);
    return r.exact ? kOk : kNegative;
  } else if (a.bound == "rank") {
    RankOptions ro;
    ro.seed = c.seed;
    ro.nnmf_restarts = a.restarts;
    ro.nnmf_iterations = a.iterations;
    config["restarts"] = a.restarts;
    config["iterations"] = a.iterations;
    const auto r = certify_nonnegative_rank(s, ro);
    j = header("bounds", c, std::move(config));
    j["bound_name"] = "nonnegative_rank";
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = r.exact();
    j["witness"] = {{"linear_rank", r.linear_rank},
                    {"cover_value", r.cover_value.str()},
                    {"upper_source", r.upper_source},
                    {"factorization", factorization_json(r.witness)}};
  } else {
    throw UsageError("unknown bound '" + a.bound + "'");
  }
  stamp(c, j, t0);
  emit(c, j);
  return kOk;
}

// ---- sample ----

struct SampleArgs {
  std::string mu = "3";
  std::size_t k = 1;
  std::size_t m = 1;
  std::size_t n = 0;
  std::size_t count = 1;
  std::string family;
};

int run_sample(const SampleArgs& a, const Common& c) {
  const std::size_t n = partition_size(a.k, a.m);
  if (a.n != 0 && a.n != n)
    throw UsageError("--n must be 4k(2m+1)+3 = " + std::to_string(n) + " for k=" + std::to_string(a.k) +
                     ", m=" + std::to_string(a.m));
  const std::string big = std::to_string(4 * a.k + 3);
  enum { mu3, mu_big, alt } which;
  if (a.mu == "3") which = mu3;
  else if (a.mu == big || a.mu == "4k+3") which = mu_big;
  else if (a.mu == "alt") which = alt;
  else throw UsageError("--mu must be 3, 4k+3 (= " + big + ") or alt");
  std::optional<PermutationFamily> f;
  if (which == alt) {
    if (a.family.empty()) throw UsageError("--mu alt needs --family");
    f = read_family_file(a.family);
    if (f->k != a.k) throw UsageError("family was built for k=" + std::to_string(f->k));
  }
  Output o(c.out);
  for (std::size_t i = 0; i < a.count; ++i) {
    const std::uint64_t seed = c.seed + i;
    ordered_json s;
    switch (which) {
      case mu3: s = sample_json(sample_mu3(n, a.k, a.m, seed)); break;
      case mu_big: s = sample_json(sample_mu4k3(n, a.k, a.m, seed)); break;
      case alt: s = sample_json(alternative_sample_mu3(n, a.k, a.m, *f, seed)); break;
    }
    ordered_json line;
    line["schema_version"] = kSchemaVersion;
    line["config"] = {{"mu", which == mu_big ? big : a.mu}, {"k", a.k}, {"m", a.m}, {"n", n}};
    line.update(s);
    o.stream() << line.dump() << '\n';
  }
  return kOk;
}

// ---- family ----

struct FamilyArgs {
  std::size_t k = 1;
  std::size_t retries = 10000;
  std::string write;
};

int run_family(const FamilyArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const auto s = find_verified_family(a.k, c.seed, a.retries);
  auto j = header("family", c, {{"k", a.k}, {"retries", a.retries}});
  j["attempts"] = s.attempts;
  j["family_seed"] = s.seed;
  j["largest_unseparated"] = s.check.largest_unseparated;
  j["family"] = family_to_json(s.family);
  if (!a.write.empty()) write_family_file(a.write, s.family);
  stamp(c, j, t0);
  emit(c, j);
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string graph;
  std::string report;
  std::string family;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  if (a.family.empty() == a.report.empty()) throw UsageError("verify needs exactly one of --report or --family");
  if (!a.family.empty()) {
    const auto f = read_family_file(a.family);
    const auto check = verify_family_exhaustive(f);
    auto j = header("verify", c, {{"family", a.family}});
    j["valid"] = check.ok;
    j["largest_unseparated"] = check.largest_unseparated;
    if (!check.ok) {
      ordered_json ce = ordered_json::array();
      for (const auto& t : check.counterexample) ce.push_back(t);
      j["counterexample"] = std::move(ce);
    }
    emit(c, j);
    return check.ok ? kOk : kNegative;
  }
  if (a.graph.empty()) throw UsageError("verify --report needs a graph file");
  const auto g = read_graph_file(a.graph);
  std::ifstream in(a.report);
  if (!in) throw UsageError("cannot read " + a.report);
  nlohmann::json r;
  try {
    r = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
  const auto cfg = r.value("config", nlohmann::json::object());
  const Parity p = parity_arg(cfg.value("parity", std::string("odd")));
  auto j = header("verify", c, {{"graph", a.graph}, {"report", a.report}, {"parity", parity_name(p)}});
  bool valid = false;
  try {
    if (r.contains("matching")) {
      j["checked"] = "matching";
      valid = verify_matching_result(g, p, matching_from_json(r["matching"]));
    } else if (r.contains("certificate") && r["certificate"].is_string()) {
      j["checked"] = "certificate";
      valid = verify_certificate(g, p, Labeling::from_bitstring(r["certificate"], g.n_left(), p));
    } else {
      throw FormatError("report has neither a matching nor a labeling certificate");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
  j["valid"] = valid;
  emit(c, j);
  return valid ? kOk : kNegative;
}

void error_json(const std::string& kind, const std::string& what) {
  ordered_json j{{"schema_version", kSchemaVersion}, {"error", kind}, {"message", what}};
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity perfect matchings, relaxations, slack matrices and rank bounds"};
  app.require_subcommand(1);
  Common common;

  SolveArgs solve;
  auto* s_solve = app.add_subcommand("solve", "Perfect matching with prescribed red parity, or a labeling certificate");
  s_solve->add_option("graph", solve.graph, "Graph file")->required()->check(CLI::ExistingFile);
  s_solve->add_option("--parity", solve.parity, "odd or even")->capture_default_str();
  add_common(s_solve, common);

  ExactArgs exact;
  auto* s_exact = app.add_subcommand("exact", "Perfect matching with exactly k red edges, by enumeration");
  s_exact->add_option("graph", exact.graph, "Graph file")->required()->check(CLI::ExistingFile);
  s_exact->add_option("--k", exact.k, "Red edge count")->required();
  add_common(s_exact, common);
  add_enum_cap(s_exact, common);

  EnumerateArgs en;
  auto* s_enum = app.add_subcommand("enumerate", "Count or list perfect matchings");
  s_enum->add_option("graph", en.graph, "Graph file")->required()->check(CLI::ExistingFile);
  s_enum->add_option("--parity", en.parity, "odd, even or any")->capture_default_str();
  s_enum->add_flag("--list", en.list, "One JSON line per matching");
  add_common(s_enum, common);
  add_enum_cap(s_enum, common);

  RelaxArgs relax;
  auto* s_relax = app.add_subcommand("relax", "Exact feasibility of the labeling relaxation");
  s_relax->add_option("graph", relax.graph, "Graph file")->required()->check(CLI::ExistingFile);
  s_relax->add_option("--parity", relax.parity, "odd or even")->capture_default_str();
  s_relax->add_option("--mode", relax.mode, "lazy or full")
      ->check(CLI::IsMember({"lazy", "full"}))
      ->capture_default_str();
  add_common(s_relax, common);
  add_enum_cap(s_relax, common);

  SlackArgs slack;
  auto* s_slack = app.add_subcommand("slack", "Slack matrix of G_n as CSV");
  s_slack->add_option("--n", slack.n, "Pairs")->required()->check(CLI::PositiveNumber);
  s_slack->add_option("--parity", slack.parity, "odd or even")->capture_default_str();
  s_slack->add_flag("--degree", slack.degree, "Append the zero degree-equality columns");
  s_slack->add_option("--sidecar", slack.sidecar, "JSON file mapping indices to matchings and labelings");
  add_common(s_slack, common);
  add_enum_cap(s_slack, common);

  BoundsArgs bounds;
  auto* s_bounds = app.add_subcommand("bounds", "Nonnegative-rank bounds for a CSV matrix");
  s_bounds->add_option("matrix", bounds.matrix, "Matrix CSV")->required()->check(CLI::ExistingFile);
  s_bounds->add_option("--bound", bounds.bound, "hyperplane, cover, nnmf or rank")
      ->check(CLI::IsMember({"hyperplane", "cover", "nnmf", "rank"}))
      ->capture_default_str();
  s_bounds->add_option("--weights", bounds.weights, "Weight CSV for hyperplane (-inf marks forbidden)");
  s_bounds->add_option("--search", bounds.search, "exhaustive or local")
      ->check(CLI::IsMember({"exhaustive", "local"}))
      ->capture_default_str();
  s_bounds->add_option("--rect-cap", common.rect_cap, "Exhaustive rectangle search cap on the smaller side")
      ->capture_default_str();
  s_bounds->add_option("--rank", bounds.rank, "Target rank for nnmf");
  s_bounds->add_option("--restarts", bounds.restarts, "NNMF restarts")->capture_default_str();
  s_bounds->add_option("--iterations", bounds.iterations, "NNMF iterations per restart")->capture_default_str();
  add_common(s_bounds, common);

  SampleArgs sample;
  auto* s_sample = app.add_subcommand("sample", "Seeded samples as JSON lines (line i uses seed+i)");
  s_sample->add_option("--mu", sample.mu, "3, 4k+3 or alt")->capture_default_str();
  s_sample->add_option("--k", sample.k, "k")->check(CLI::PositiveNumber)->capture_default_str();
  s_sample->add_option("--m", sample.m, "m")->check(CLI::PositiveNumber)->capture_default_str();
  s_sample->add_option("--n", sample.n, "Pairs, must equal 4k(2m+1)+3");
  s_sample->add_option("--count", sample.count, "Samples")->capture_default_str();
  s_sample->add_option("--family", sample.family, "Family file for --mu alt")->check(CLI::ExistingFile);
  add_common(s_sample, common);

  FamilyArgs family;
  auto* s_family = app.add_subcommand("family", "Search for an exhaustively verified permutation family");
  s_family->add_option("--k", family.k, "k")->check(CLI::Range(1, 2))->capture_default_str();
  s_family->add_option("--retries", family.retries, "Retry cap")->capture_default_str();
  s_family->add_option("--write", family.write, "Also write the bare family file (input to --family)");
  add_common(s_family, common);

  VerifyArgs verify;
  auto* s_verify = app.add_subcommand("verify", "Check a solve report against a graph, or a family file");
  s_verify->add_option("graph", verify.graph, "Graph file")->check(CLI::ExistingFile);
  s_verify->add_option("--report", verify.report, "solve or exact report JSON")->check(CLI::ExistingFile);
  s_verify->add_option("--family", verify.family, "Family JSON")->check(CLI::ExistingFile);
  add_common(s_verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*s_solve) return run_solve(solve, common);
    if (*s_exact) return run_exact(exact, common);
    if (*s_enum) return run_enumerate(en, common);
    if (*s_relax) return run_relax(relax, common);
    if (*s_slack) return run_slack(slack, common);
    if (*s_bounds) return run_bounds(bounds, common);
    if (*s_sample) return run_sample(sample, common);
    if (*s_family) return run_family(family, common);
    if (*s_verify) return run_verify(verify, common);
  } catch (const CapExceeded& e) {
    error_json("cap_exceeded", e.what());
    return kCap;
  } catch (const UsageError& e) {
    error_json("usage", e.what());
    return kUsage;
  } catch (const FormatError& e) {
    error_json("format", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    error_json("invalid_argument", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    error_json("internal", e.what());
    return kInternal;
  }
  return kUsage;
}
