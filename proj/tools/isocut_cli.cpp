// isocut: command-line front end for the closed forms, constructions,
// generators and the enumeration oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "isocut/closedform.hpp"
#include "isocut/construct.hpp"
#include "isocut/error.hpp"
#include "isocut/graphs.hpp"
#include "isocut/json.hpp"
#include "isocut/oracle.hpp"
#include "isocut/verify.hpp"

using namespace isocut;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

enum class Format { human, json, csv };

const std::map<std::string, Format> kFormats{
    {"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}};

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') {
    return fallback;
  }
  try {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used);
    if (used != std::string(text).size() || value == 0) {
      throw std::invalid_argument(text);
    }
    return value;
  } catch (const std::exception&) {
    throw DomainError(std::string(name) + " must be a positive integer, got '" + text + "'");
  }
}

std::uint64_t vertex_cap() { return env_or("ISOCUT_VERTEX_CAP", kDefaultVertexCap); }

json envelope(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw DomainError("range must look like a..b, got '" + text + "'");
  }
  try {
    const std::uint64_t a = std::stoull(text.substr(0, dots));
    const std::uint64_t b = std::stoull(text.substr(dots + 2));
    if (a > b) {
      throw DomainError("empty range '" + text + "'");
    }
    return {a, b};
  } catch (const std::logic_error&) {
    throw DomainError("range must look like a..b, got '" + text + "'");
  }
}

// ---------------------------------------------------------------------------

struct XiArgs {
  std::uint64_t L = 0;
  std::uint32_t n = 0;
  std::optional<std::uint64_t> m;
  std::string range;
  Format format = Format::human;
};

int cmd_xi(const XiArgs& a) {
  const HammingParams p(a.L, a.n);
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  if (!a.range.empty()) {
    std::tie(lo, hi) = parse_range(a.range);
  } else if (a.m) {
    lo = hi = *a.m;
  } else {
    throw DomainError("xi needs --m or --m-range");
  }
  json rows = json::array();
  if (a.format == Format::csv) {
    std::cout << "L,n,m,decomposition,ex,xi\n";
  }
  for (std::uint64_t m = lo; m <= hi; ++m) {
    const auto d = decompose(m, a.L);
    const std::uint64_t e = ex(m, p);
    const std::uint64_t x = xi(m, p);
    switch (a.format) {
    case Format::human:
      std::cout << "m=" << m << "  decomposition: " << d.to_string() << "  ex=" << e
                << "  xi=" << x << "\n";
      break;
    case Format::csv:
      std::cout << a.L << "," << a.n << "," << m << "," << csv_quote(d.to_string()) << "," << e
                << "," << x << "\n";
      break;
    case Format::json:
      rows.push_back({{"m", m}, {"decomposition", to_json(d)}, {"ex", e}, {"xi", x}});
      break;
    }
  }
  if (a.format == Format::json) {
    json out = envelope("xi");
    out["L"] = a.L;
    out["n"] = a.n;
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct LambdaArgs {
  std::string kind;
  std::uint64_t L = 0;
  std::uint32_t n = 0;
  std::optional<std::uint64_t> h;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> k;
  std::uint64_t scan_cap = 1'000'000;
  Format format = Format::human;
};

ConditionKind condition_from(const std::string& kind, std::optional<std::uint64_t> h,
                             std::optional<std::uint64_t> t, std::optional<std::uint64_t> k) {
  auto need = [&](const std::optional<std::uint64_t>& v, const char* flag) {
    if (!v) {
      throw DomainError("--kind " + kind + " needs " + flag);
    }
    return *v;
  };
  using Kind = ConditionKind::Kind;
  switch (ConditionKind::parse_kind(kind)) {
  case Kind::extra:
    return ConditionKind::extra(need(h, "--h"));
  case Kind::isoperimetric:
    return ConditionKind::isoperimetric(need(h, "--h"));
  case Kind::embedded:
    return ConditionKind::embedded(need(t, "--t"));
  case Kind::super:
    return ConditionKind::super(need(k, "--k"));
  case Kind::average:
    return ConditionKind::average(need(k, "--k"));
  case Kind::cyclic:
    return ConditionKind::cyclic();
  }
  throw DomainError("unknown kind");
}

int cmd_lambda(const LambdaArgs& a) {
  const HammingParams p(a.L, a.n);
  const ConditionKind cond = condition_from(a.kind, a.h, a.t, a.k);
  std::uint64_t value = 0;
  std::string method = "closed form";
  try {
    value = conditional_connectivity(cond, p);
  } catch (const DomainError&) {
    const bool sized = cond.kind() == ConditionKind::Kind::extra ||
                       cond.kind() == ConditionKind::Kind::isoperimetric;
    if (!sized || cond.parameter() < 1 || cond.parameter() > p.half()) {
      throw;
    }
    value = lambda_extra_scan(cond.parameter(), p, a.scan_cap);
    method = "scan";
  }
  const std::uint64_t theta = cond.theta(p);
  std::optional<std::pair<std::uint64_t, std::uint32_t>> gt = cond.structure(p);
  if (!gt && method == "closed form") {
    gt = as_g_power(cond.parameter(), a.L);
  }
  switch (a.format) {
  case Format::human:
    std::cout << cond.to_string() << " on K_" << a.L << "^" << a.n << ": " << value
              << "  theta=" << theta;
    if (gt) {
      std::cout << "  (g,t)=(" << gt->first << "," << gt->second << ")";
    }
    std::cout << "  [" << method << "]\n";
    break;
  case Format::csv:
    std::cout << "kind,parameter,L,n,value,theta,g,t,method\n"
              << ConditionKind::kind_name(cond.kind()) << "," << cond.parameter() << "," << a.L
              << "," << a.n << "," << value << "," << theta << ","
              << (gt ? std::to_string(gt->first) : "") << ","
              << (gt ? std::to_string(gt->second) : "") << "," << method << "\n";
    break;
  case Format::json: {
    json out = envelope("lambda");
    out["kind"] = ConditionKind::kind_name(cond.kind());
    out["parameter"] = cond.parameter();
    out["L"] = a.L;
    out["n"] = a.n;
    out["value"] = value;
    out["theta"] = theta;
    out["g"] = gt ? json(gt->first) : json(nullptr);
    out["t"] = gt ? json(gt->second) : json(nullptr);
    out["method"] = method;
    std::cout << out.dump(2) << "\n";
    break;
  }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::uint64_t L = 0;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  bool emit_graph = false;
  Format format = Format::human;
};

int cmd_construct(const ConstructArgs& a) {
  const HammingParams p(a.L, a.n);
  const std::uint64_t cap = vertex_cap();
  const VertexSet set = optimal_set(a.m, p, cap);
  const SubLayerFamily family = sublayer_family(a.m, p);
  const Graph graph = hamming_graph(p, cap);
  const CutReport report = evaluate_cut(graph, set);

  std::vector<std::string> strings;
  for (const auto id : set.members()) {
    strings.push_back(encode(id, p).to_string());
  }
  json families = json::array();
  for (std::size_t i = 0; i < family.families().size(); ++i) {
    json layers = json::array();
    for (const auto& layer : family.families()[i]) {
      layers.push_back({{"pattern", layer.pattern(a.L)},
                        {"free_dimensions", layer.free_dimensions},
                        {"first_id", layer.first_id},
                        {"size", layer.size}});
    }
    families.push_back(layers);
  }
  std::ostringstream edges;
  if (a.emit_graph) {
    write_edge_list(edges, graph);
  }

  switch (a.format) {
  case Format::human: {
    std::cout << "K_" << a.L << "^" << a.n << ", m=" << a.m
              << "  decomposition: " << family.decomposition().to_string() << "\n";
    std::cout << "set:";
    for (const auto& s : strings) std::cout << " " << s;
    std::cout << "\n";
    for (std::size_t i = 0; i < family.families().size(); ++i) {
      std::cout << "family " << i << ":";
      for (const auto& layer : family.families()[i]) std::cout << " " << layer.pattern(a.L);
      std::cout << "\n";
    }
    std::cout << "cut=" << report.cut_size << " internal=" << report.internal_edges
              << " complement_internal=" << report.complement_internal_edges
              << " side_connected=" << (report.side_connected ? "yes" : "no")
              << " complement_connected=" << (report.complement_connected ? "yes" : "no") << "\n";
    std::cout << edges.str();
    break;
  }
  case Format::csv:
    std::cout << "id,string\n";
    for (const auto id : set.members()) {
      std::cout << id << "," << encode(id, p).to_string() << "\n";
    }
    break;
  case Format::json: {
    json out = envelope("construct");
    out["L"] = a.L;
    out["n"] = a.n;
    out["m"] = a.m;
    out["decomposition"] = to_json(family.decomposition());
    out["set"] = strings;
    out["families"] = families;
    out["report"] = to_json(report);
    if (a.emit_graph) {
      out["graph"] = edges.str();
    }
    std::cout << out.dump(2) << "\n";
    break;
  }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BudgetArgs {
  std::optional<std::uint64_t> max_vertices;
  std::optional<std::uint64_t> max_subsets;
  std::optional<std::uint32_t> threads;

  OracleBudget budget() const {
    OracleBudget b;
    b.max_subsets = env_or("ISOCUT_SUBSET_BUDGET", b.max_subsets);
    if (max_vertices) b.max_vertices = *max_vertices;
    if (max_subsets) b.max_subsets = *max_subsets;
    if (threads) b.parallel_chunks = *threads;
    b.validate();
    return b;
  }
};

struct VerifyArgs {
  std::string scope;
  bool full = false;
  BudgetArgs budget;
  Format format = Format::human;
};

int cmd_verify(const VerifyArgs& a) {
  verify::Options options;
  options.full = a.full;
  options.budget = a.budget.budget();
  const verify::SuiteReport report = verify::run(verify::parse_scope(a.scope), options);
  switch (a.format) {
  case Format::human:
    for (const auto& c : report.checks) {
      std::cout << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << "  " << c.name
                << "\n      expected: " << c.expected << "\n      actual:   " << c.actual << "\n";
    }
    std::cout << verify::to_string(report.scope) << ": " << (report.passed() ? "PASS" : "FAIL")
              << " (" << report.checks.size() << " checks, " << report.wall_seconds << " s)\n";
    break;
  case Format::csv:
    std::cout << "status,name,expected,actual\n";
    for (const auto& c : report.checks) {
      std::cout << (c.skipped ? "skip" : c.passed ? "pass" : "fail") << "," << csv_quote(c.name)
                << "," << csv_quote(c.expected) << "," << csv_quote(c.actual) << "\n";
    }
    break;
  case Format::json: {
    json out = envelope("verify");
    out["scope"] = verify::to_string(report.scope);
    out["passed"] = report.passed();
    out["wall_seconds"] = report.wall_seconds;
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"passed", c.passed},
                        {"skipped", c.skipped}});
    }
    out["checks"] = checks;
    std::cout << out.dump(2) << "\n";
    break;
  }
  }
  return report.passed() ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------

struct GraphArgs {
  bool hamming = false;
  bool bc = false;
  std::uint64_t L = 0;
  std::uint32_t n = 0;
  std::string policy = "identity";
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_graph(const GraphArgs& a) {
  if (a.hamming == a.bc) {
    throw DomainError("graph needs exactly one of --hamming or --bc");
  }
  const std::uint64_t cap = vertex_cap();
  const Graph g = a.hamming ? hamming_graph(HammingParams(a.L, a.n), cap)
                            : bc_network(a.n, parse_matching_policy(a.policy), a.seed, cap);
  if (a.out == "-") {
    write_edge_list(std::cout, g);
  } else {
    std::ofstream file(a.out);
    if (!file) {
      throw DomainError("cannot open '" + a.out + "' for writing");
    }
    write_edge_list(file, g);
    std::cerr << g.label().to_string() << ": " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges -> " << a.out << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string graph;
  std::string measure;
  std::optional<std::uint64_t> m;
  std::string kind;
  std::optional<std::uint64_t> h;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> k;
  BudgetArgs budget;
  Format format = Format::human;
};

int cmd_oracle(const OracleArgs& a) {
  const Graph g = [&] {
    if (a.graph == "-") {
      return read_edge_list(std::cin);
    }
    std::ifstream file(a.graph);
    if (!file) {
      throw DomainError("cannot open '" + a.graph + "'");
    }
    return read_edge_list(file);
  }();
  const OracleBudget budget = a.budget.budget();
  auto need_m = [&] {
    if (!a.m) throw DomainError("--measure " + a.measure + " needs --m");
    return *a.m;
  };
  FragmentResult r;
  std::string label = a.measure;
  if (a.measure == "beta") {
    r = brute_beta(g, need_m(), budget);
  } else if (a.measure == "xi_e") {
    r = brute_xi_e(g, need_m(), budget);
  } else if (a.measure == "xi") {
    r = brute_xi(g, need_m(), budget);
  } else if (a.measure == "lambda_h") {
    if (!a.h) throw DomainError("--measure lambda_h needs --h");
    r = brute_lambda_h(g, *a.h, budget);
  } else if (a.measure == "conditional") {
    const ConditionKind cond = condition_from(a.kind, a.h, a.t, a.k);
    r = brute_conditional(g, cond, budget);
    label = cond.to_string();
  } else {
    throw DomainError("unknown measure '" + a.measure +
                      "' (beta, xi_e, xi, lambda_h, conditional)");
  }
  switch (a.format) {
  case Format::human: {
    std::cout << label << " on " << g.label().to_string() << ": " << r.optimum
              << "  atom=" << r.atom_size << "\nwitness:";
    for (const auto v : r.witness.members()) std::cout << " " << v;
    std::cout << "\nvisited " << r.stats.subsets_visited << " sets in " << r.stats.wall_seconds
              << " s on " << r.stats.threads << " threads\n";
    break;
  }
  case Format::csv:
    std::cout << "measure,optimum,atom_size,witness,subsets_visited\n" << csv_quote(label) << ","
              << r.optimum << "," << r.atom_size << ",";
    {
      std::string w;
      for (const auto v : r.witness.members()) w += (w.empty() ? "" : " ") + std::to_string(v);
      std::cout << w << "," << r.stats.subsets_visited << "\n";
    }
    break;
  case Format::json: {
    json out = envelope("oracle");
    out["measure"] = label;
    out["graph"] = g.label().to_string();
    out["result"] = to_json(g, r);
    std::cout << out.dump(2) << "\n";
    break;
  }
  }
  return kExitOk;
}

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "human, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void add_budget(CLI::App* cmd, BudgetArgs& b) {
  cmd->add_option("--max-vertices", b.max_vertices, "oracle vertex cap");
  cmd->add_option("--max-subsets", b.max_subsets, "oracle subset budget");
  cmd->add_option("--threads", b.threads, "oracle worker threads");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conditional edge-connectivity of Hamming graphs"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  XiArgs xi_args;
  auto* xi_cmd = app.add_subcommand("xi", "ex(m) and xi(m) of K_L^n");
  xi_cmd->add_option("--L", xi_args.L, "arity")->required();
  xi_cmd->add_option("--n", xi_args.n, "dimension")->required();
  xi_cmd->add_option("--m", xi_args.m, "set size");
  xi_cmd->add_option("--m-range", xi_args.range, "sweep a..b");
  add_format(xi_cmd, xi_args.format);

  LambdaArgs lambda_args;
  auto* lambda_cmd = app.add_subcommand("lambda", "conditional edge-connectivity of K_L^n");
  lambda_cmd->add_option("--kind", lambda_args.kind,
                         "extra, embedded, cyclic, super, average, isoperimetric")
      ->required();
  lambda_cmd->add_option("--L", lambda_args.L, "arity")->required();
  lambda_cmd->add_option("--n", lambda_args.n, "dimension")->required();
  lambda_cmd->add_option("--h", lambda_args.h, "size threshold (extra, isoperimetric)");
  lambda_cmd->add_option("--t", lambda_args.t, "sub-layer dimension (embedded)");
  lambda_cmd->add_option("--k", lambda_args.k, "degree threshold (super, average)");
  lambda_cmd->add_option("--scan-cap", lambda_args.scan_cap,
                         "largest scan when h is beyond the closed form");
  add_format(lambda_cmd, lambda_args.format);

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "optimal set and its cut census");
  construct_cmd->add_option("--L", construct_args.L, "arity")->required();
  construct_cmd->add_option("--n", construct_args.n, "dimension")->required();
  construct_cmd->add_option("--m", construct_args.m, "set size")->required();
  construct_cmd->add_flag("--emit-graph", construct_args.emit_graph, "include the edge list");
  add_format(construct_cmd, construct_args.format);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run a self-check suite");
  verify_cmd->add_option("--scope", verify_args.scope, "tables, lemmas, oracle or bc")
      ->required();
  verify_cmd->add_flag("--full", verify_args.full, "include the slow tier");
  add_budget(verify_cmd, verify_args.budget);
  add_format(verify_cmd, verify_args.format);

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand("graph", "write a generated graph as an edge list");
  graph_cmd->add_flag("--hamming", graph_args.hamming, "K_L^n");
  graph_cmd->add_flag("--bc", graph_args.bc, "bijective-connection network B_n");
  graph_cmd->add_option("--L", graph_args.L, "arity (hamming)");
  graph_cmd->add_option("--n", graph_args.n, "dimension")->required();
  graph_cmd->add_option("--policy", graph_args.policy,
                        "identity, reversal or seeded_random (bc)");
  graph_cmd->add_option("--seed", graph_args.seed, "matching seed (bc)");
  graph_cmd->add_option("--out", graph_args.out, "output path, - for stdout")->required();

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search on an edge-list graph");
  oracle_cmd->add_option("--graph", oracle_args.graph, "edge-list file, - for stdin")->required();
  oracle_cmd->add_option("--measure", oracle_args.measure,
                         "beta, xi_e, xi, lambda_h or conditional")
      ->required();
  oracle_cmd->add_option("--m", oracle_args.m, "set size");
  oracle_cmd->add_option("--kind", oracle_args.kind, "condition kind (conditional)");
  oracle_cmd->add_option("--h", oracle_args.h, "size threshold");
  oracle_cmd->add_option("--t", oracle_args.t, "sub-layer dimension");
  oracle_cmd->add_option("--k", oracle_args.k, "degree threshold");
  add_budget(oracle_cmd, oracle_args.budget);
  add_format(oracle_cmd, oracle_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*xi_cmd) return cmd_xi(xi_args);
    if (*lambda_cmd) return cmd_lambda(lambda_args);
    if (*construct_cmd) return cmd_construct(construct_args);
    if (*verify_cmd) return cmd_verify(verify_args);
    if (*graph_cmd) return cmd_graph(graph_args);
    if (*oracle_cmd) return cmd_oracle(oracle_args);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
