#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdmm/characterization.hpp"
#include "tdmm/errors.hpp"
#include "tdmm/generators.hpp"
#include "tdmm/graph.hpp"
#include "tdmm/oracles.hpp"
#include "tdmm/recognizer.hpp"

namespace tdmm::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVertexLimitEnv = "TDMM_VERTEX_LIMIT";

SolverLimits limits_from_env() {
  SolverLimits limits;
  if (const char* raw = std::getenv(kVertexLimitEnv)) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(raw, &used);
      if (used != std::string_view(raw).size()) throw std::invalid_argument(raw);
      limits.vertex_limit = value;
    } catch (const std::exception&) {
      throw DomainError(std::string(kVertexLimitEnv) + " must be a non-negative integer, got '" +
                        raw + "'");
    }
  }
  return limits;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

/// Matching files use the edge-list syntax with labels from the graph.
std::vector<Edge> load_edges(const Graph& g, const std::string& path) {
  const Graph listed = parse_edge_list(read_file(path));
  std::vector<Edge> edges;
  for (const Edge& e : listed.edges()) {
    const auto a = g.find_label(listed.label(e.u));
    const auto b = g.find_label(listed.label(e.v));
    if (!a || !b) {
      throw DomainError("matching names unknown vertex '" + (a ? listed.label(e.v) : listed.label(e.u)) + "'");
    }
    if (!g.has_edge(*a, *b)) {
      throw DomainError("matching edge " + listed.label(e.u) + " " + listed.label(e.v) +
                        " is not in the graph");
    }
    edges.emplace_back(*a, *b);
  }
  return edges;
}

std::string girth_text(const Graph& g) {
  const Girth value = girth(g);
  return value ? std::to_string(*value) : "infinite";
}

Json fingerprint(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  if (g.vertex_count() > 0) j["min_degree"] = min_degree(g);
  const Girth value = girth(g);
  j["girth"] = value ? Json(*value) : Json("infinite");
  return j;
}

void print_fingerprint(std::ostream& out, const Graph& g) {
  out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges";
  if (g.vertex_count() > 0) out << ", min degree " << min_degree(g);
  out << ", girth " << girth_text(g) << '\n';
}

Json vertex_list(const Graph& g, std::span<const Vertex> vs) {
  Json arr = Json::array();
  for (Vertex v : vs) arr.push_back(g.label(v));
  return arr;
}

Json edge_list(const Graph& g, std::span<const Edge> es) {
  Json arr = Json::array();
  for (const Edge& e : es) arr.push_back(Json::array({g.label(e.u), g.label(e.v)}));
  return arr;
}

std::string vertices_text(const Graph& g, std::span<const Vertex> vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + g.label(v);
  return s.empty() ? "(none)" : s;
}

std::string edges_text(const Graph& g, std::span<const Edge> es) {
  std::string s;
  for (const Edge& e : es) s += (s.empty() ? "" : ", ") + g.label(e.u) + " " + g.label(e.v);
  return s.empty() ? "(none)" : s;
}

void write_matching_file(const Graph& g, std::span<const Edge> es, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw DomainError("cannot write '" + path + "'");
  for (const Edge& e : es) file << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

/// Shared state for one invocation.
struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::string command;

  int emit(const Json& input, Json result, int status) const {
    if (json) {
      Json doc;
      doc["command"] = command;
      doc["input"] = input;
      doc["result"] = std::move(result);
      doc["exit_status"] = status;
      out << doc.dump(2) << '\n';
    }
    return status;
  }
};

// ---------------------------------------------------------------------------

int cmd_gamma_t(Context& ctx, const std::string& path) {
  const Graph g = load_graph(path);
  const auto result = total_domination_number(g, limits_from_env());
  if (!ctx.json) {
    print_fingerprint(ctx.out, g);
    ctx.out << "gamma_t = " << result.value << '\n';
    ctx.out << "witness: " << vertices_text(g, result.witness) << '\n';
  }
  Json r;
  r["gamma_t"] = result.value;
  r["witness"] = vertex_list(g, result.witness);
  r["search_nodes"] = result.stats.nodes;
  return ctx.emit({{"graph", path}, {"fingerprint", fingerprint(g)}}, std::move(r), kAffirmative);
}

int cmd_mu_star(Context& ctx, const std::string& path) {
  const Graph g = load_graph(path);
  const auto result = minimum_maximal_matching(g, limits_from_env());
  if (!ctx.json) {
    print_fingerprint(ctx.out, g);
    ctx.out << "mu_star = " << result.value << '\n';
    ctx.out << "witness: " << edges_text(g, result.witness.edges()) << '\n';
  }
  Json r;
  r["mu_star"] = result.value;
  r["witness"] = edge_list(g, result.witness.edges());
  r["search_nodes"] = result.stats.nodes;
  return ctx.emit({{"graph", path}, {"fingerprint", fingerprint(g)}}, std::move(r), kAffirmative);
}

int cmd_bounds(Context& ctx, const std::string& path) {
  const Graph g = load_graph(path);
  const BoundReport report = check_proposition1(g, limits_from_env());
  if (!report.holds) {
    throw Error("bound violated (gamma_t = " + std::to_string(report.gamma_t) + " > " +
                std::to_string(report.bound) + "): solver defect");
  }
  const char* form = report.min_degree <= 2 ? "2*mu_star" : "2*mu_star - delta + 2";
  if (!ctx.json) {
    print_fingerprint(ctx.out, g);
    ctx.out << "delta = " << report.min_degree << '\n';
    ctx.out << "gamma_t = " << report.gamma_t << '\n';
    ctx.out << "mu_star = " << report.mu_star << '\n';
    ctx.out << "bound = " << report.bound << " (" << form << ")\n";
    ctx.out << "slack = " << report.slack() << '\n';
  }
  Json r;
  r["delta"] = report.min_degree;
  r["gamma_t"] = report.gamma_t;
  r["mu_star"] = report.mu_star;
  r["bound"] = report.bound;
  r["bound_form"] = form;
  r["slack"] = report.slack();
  return ctx.emit({{"graph", path}, {"fingerprint", fingerprint(g)}}, std::move(r), kAffirmative);
}

std::string describe(const Graph& g, const Certificate& cert) {
  return std::visit(
      [&](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExceptionalK>) {
          return "exceptional family K, n=" + std::to_string(c.n);
        } else if constexpr (std::is_same_v<T, ExceptionalC6>) {
          return "exceptional C6";
        } else if constexpr (std::is_same_v<T, CertifyingMatching>) {
          return "certifying matching: " + edges_text(g, c.matching.edges());
        } else {
          return to_string(c.reason) + ": " + c.detail;
        }
      },
      cert);
}

Json certificate_json(const Graph& g, const Certificate& cert) {
  return std::visit(
      [&](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExceptionalK>) {
          return {{"type", "exceptional-k"}, {"n", c.n}};
        } else if constexpr (std::is_same_v<T, ExceptionalC6>) {
          return {{"type", "exceptional-c6"}};
        } else if constexpr (std::is_same_v<T, CertifyingMatching>) {
          return {{"type", "matching"}, {"edges", edge_list(g, c.matching.edges())}};
        } else {
          return {{"type", "refutation"},
                  {"reason", to_string(c.reason)},
                  {"vertices", vertex_list(g, c.vertices)},
                  {"detail", c.detail}};
        }
      },
      cert);
}

int cmd_recognize(Context& ctx, const std::string& path, bool with_oracle,
                  const std::string& certificate_out) {
  const Graph g = load_graph(path);
  if (g.vertex_count() == 0) throw DomainError("empty graph");
  const std::size_t delta = min_degree(g);
  if (delta != 2) {
    std::string hint = delta >= 3 ? " (graphs with minimum degree >= 3 never have gamma_t = 2 mu*)"
                                  : " (use 'verify' with a matching, or 'bounds' for the exact oracle)";
    throw DomainError("recognize requires minimum degree 2, got " + std::to_string(delta) + hint);
  }
  const RecognitionOutcome outcome = recognize(g);

  Json components = Json::array();
  std::vector<Edge> certificate_edges;
  for (std::size_t i = 0; i < outcome.components.size(); ++i) {
    const ComponentOutcome& comp = outcome.components[i];
    if (!ctx.json) {
      ctx.out << "component " << i + 1 << " (" << comp.vertices.size() << " vertices): "
              << (comp.verdict ? "yes" : "no") << ", " << describe(g, comp.certificate) << '\n';
    }
    if (const auto* cm = std::get_if<CertifyingMatching>(&comp.certificate)) {
      certificate_edges.insert(certificate_edges.end(), cm->matching.edges().begin(),
                               cm->matching.edges().end());
    }
    components.push_back({{"vertices", vertex_list(g, comp.vertices)},
                          {"verdict", comp.verdict},
                          {"certificate", certificate_json(g, comp.certificate)}});
  }
  if (!ctx.json) {
    ctx.out << "verdict: " << (outcome.verdict ? "yes" : "no") << '\n';
  }
  if (!certificate_out.empty()) write_matching_file(g, certificate_edges, certificate_out);

  Json r;
  r["verdict"] = outcome.verdict;
  r["components"] = std::move(components);
  if (with_oracle) {
    const SolverLimits limits = limits_from_env();
    if (g.vertex_count() > std::min(limits.vertex_limit, kMaxSolverVertices)) {
      if (!ctx.json) ctx.out << "oracle: skipped, graph exceeds solver vertex limit\n";
      r["oracle"] = "skipped";
    } else {
      const OracleVerdict oracle = gamma_t_2mu_oracle(g, limits);
      if (oracle.equal() != outcome.verdict) {
        throw Error("oracle disagrees with recognizer: gamma_t = " + std::to_string(oracle.gamma_t) +
                    ", mu_star = " + std::to_string(oracle.mu_star));
      }
      if (!ctx.json) {
        ctx.out << "oracle: gamma_t = " << oracle.gamma_t << ", mu_star = " << oracle.mu_star
                << ", agrees\n";
      }
      r["oracle"] = {{"gamma_t", oracle.gamma_t}, {"mu_star", oracle.mu_star}, {"agrees", true}};
    }
  }
  return ctx.emit({{"graph", path}, {"fingerprint", fingerprint(g)}}, std::move(r),
                  outcome.verdict ? kAffirmative : kNegative);
}

Json report_json(const Graph& g, const ConditionReport& report) {
  Json verdicts = Json::object();
  for (const auto& v : report.verdicts) verdicts[v.condition] = v.holds;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"condition", v.condition},
                          {"vertices", vertex_list(g, v.vertices)},
                          {"edges", edge_list(g, v.edges)},
                          {"explanation", v.explanation}});
  }
  return {{"holds", report.holds()}, {"verdicts", verdicts}, {"violations", violations}};
}

void print_report(std::ostream& out, const ConditionReport& report) {
  for (const auto& v : report.verdicts) {
    out << "condition (" << v.condition << "): " << (v.holds ? "holds" : "fails") << '\n';
  }
  for (const auto& v : report.violations) {
    out << "  violation (" << v.condition << "): " << v.explanation << '\n';
  }
}

int cmd_verify(Context& ctx, const std::string& graph_path, const std::string& matching_path) {
  const Graph g = load_graph(graph_path);
  if (g.vertex_count() == 0) throw DomainError("empty graph");
  if (g.has_isolated_vertex()) throw DomainError("isolated vertex: gamma_t undefined");
  const std::vector<Edge> edges = load_edges(g, matching_path);
  const std::size_t delta = min_degree(g);
  if (delta > 2) {
    throw DomainError("verify requires minimum degree 1 or 2, got " + std::to_string(delta) +
                      " (graphs with minimum degree >= 3 never have gamma_t = 2 mu*)");
  }
  const Json input = {{"graph", graph_path}, {"matching", matching_path}, {"fingerprint", fingerprint(g)}};
  Json r;
  r["checker"] = delta == 2 ? "min-degree-2" : "four-condition";

  auto reject = [&](const std::string& what) {
    if (!ctx.json) {
      print_fingerprint(ctx.out, g);
      ctx.out << "condition (" << what << "): fails\n";
      ctx.out << "verdict: no\n";
    }
    r["holds"] = false;
    r["verdicts"] = {{what, false}};
    return ctx.emit(input, std::move(r), kNegative);
  };
  if (!is_matching(g, edges)) return reject("matching");

  ConditionReport report;
  if (delta == 2) {
    report = check_corollary2_conditions(g, edges);
  } else {
    if (!is_maximal_matching(g, edges)) return reject("maximal");
    const Matching m(edges);
    report = check_theorem1_conditions(g, m);
    const MatchingPartition part = partition_matching(g, m);
    r["partition"] = {{"m_plus", edge_list(g, part.m_plus)},
                      {"m_minus", edge_list(g, part.m_minus)},
                      {"m_star", edge_list(g, part.m_star)}};
    if (!ctx.json) {
      print_fingerprint(ctx.out, g);
      ctx.out << "M+ = " << edges_text(g, part.m_plus) << '\n';
      ctx.out << "M- = " << edges_text(g, part.m_minus) << '\n';
      ctx.out << "M* = " << edges_text(g, part.m_star) << '\n';
    }
  }
  if (!ctx.json) {
    if (delta == 2) print_fingerprint(ctx.out, g);
    print_report(ctx.out, report);
    ctx.out << "verdict: " << (report.holds() ? "yes" : "no") << '\n';
  }
  const Json details = report_json(g, report);
  for (const auto& [key, value] : details.items()) r[key] = value;
  return ctx.emit(input, std::move(r), report.holds() ? kAffirmative : kNegative);
}

std::size_t to_size(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(token, &used);
    if (used != token.size() || token.front() == '-') throw std::invalid_argument(token);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw DomainError(std::string(what) + " must be a non-negative integer, got '" + token + "'");
  }
}

struct GenerateOptions {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  FRandomParams f_params;
  bool no_marks = false;
  std::string recipe_path;
  std::string matching_out;
};

int cmd_generate(Context& ctx, const GenerateOptions& opt, const std::string& echo) {
  auto param = [&](std::size_t i, const char* what) {
    if (i >= opt.params.size()) throw DomainError("generate " + opt.family + ": missing " + what);
    return to_size(opt.params[i], what);
  };
  auto expect_params = [&](std::size_t count) {
    if (opt.params.size() != count) {
      throw DomainError("generate " + opt.family + " takes " + std::to_string(count) +
                        " parameter(s), got " + std::to_string(opt.params.size()));
    }
  };

  Graph g;
  std::vector<Edge> certificate;
  std::string recipe_text;
  if (opt.family == "spider") {
    expect_params(1);
    g = spider(param(0, "n"));
    for (std::size_t i = 1; i * 3 < g.vertex_count(); ++i) {
      certificate.emplace_back(static_cast<Vertex>(3 * i - 2), static_cast<Vertex>(3 * i - 1));
    }
  } else if (opt.family == "subdivided-grid") {
    expect_params(1);
    const std::size_t n = param(0, "n");
    g = subdivided_grid(n);
    for (std::size_t i = 0; i <= n; ++i) {
      certificate.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + n + 1));
    }
  } else if (opt.family == "k-family") {
    expect_params(1);
    g = k_family(param(0, "n"));
    certificate.emplace_back(0, 1);
  } else if (opt.family == "cycle") {
    expect_params(1);
    g = cycle(param(0, "n"));
  } else if (opt.family == "path") {
    expect_params(1);
    g = path(param(0, "n"));
  } else if (opt.family == "prop2") {
    expect_params(2);
    g = prop2_extremal(param(0, "n"), param(1, "delta"));
  } else if (opt.family == "family-f") {
    expect_params(0);
    FamilyFGraph member;
    if (!opt.recipe_path.empty()) {
      member = family_f_from_recipe(parse_recipe(read_file(opt.recipe_path)));
    } else {
      FRandomParams params = opt.f_params;
      if (opt.no_marks) params.mark_prob = 0.0;
      member = family_f_random(opt.seed, params);
    }
    g = member.graph;
    certificate = member.matching.edges();
    recipe_text = serialize_recipe(member.recipe);
  } else {
    throw DomainError("unknown family '" + opt.family +
                      "' (spider, subdivided-grid, k-family, cycle, path, prop2, family-f)");
  }

  if (!opt.matching_out.empty()) write_matching_file(g, certificate, opt.matching_out);

  if (ctx.json) {
    Json r;
    r["edge_list"] = serialize_edge_list(g);
    if (!certificate.empty()) r["matching"] = edge_list(g, certificate);
    if (!recipe_text.empty()) r["recipe"] = recipe_text;
    return ctx.emit({{"family", opt.family}, {"params", opt.params}}, std::move(r), kAffirmative);
  }
  ctx.out << "# " << echo << '\n';
  if (!recipe_text.empty()) {
    std::istringstream lines(recipe_text);
    for (std::string line; std::getline(lines, line);) ctx.out << "# recipe: " << line << '\n';
  }
  for (const Edge& e : certificate) {
    ctx.out << "# matching: " << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
  ctx.out << serialize_edge_list(g);
  return kAffirmative;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 1; i < args.size(); ++i) s += (i > 1 ? " " : "") + args[i];
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total domination versus minimum maximal matching: exact solvers, the "
               "minimum-degree-2 recognizer, certificate checks and graph families."};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit one JSON document instead of text");

  std::string graph_path, matching_path, certificate_out;
  bool with_oracle = false;
  GenerateOptions gen;

  auto* gamma = app.add_subcommand("gamma-t", "Exact total domination number and witness");
  gamma->add_option("graph", graph_path, "Edge-list file")->required();
  auto* mu = app.add_subcommand("mu-star", "Exact minimum maximal matching and witness");
  mu->add_option("graph", graph_path, "Edge-list file")->required();
  auto* bounds = app.add_subcommand("bounds", "Check gamma_t against the 2 mu* bound");
  bounds->add_option("graph", graph_path, "Edge-list file")->required();

  auto* rec = app.add_subcommand("recognize", "Decide gamma_t = 2 mu* for minimum degree 2");
  rec->add_option("graph", graph_path, "Edge-list file")->required();
  rec->add_flag("--oracle", with_oracle, "Cross-check against the exact solvers");
  rec->add_option("--certificate-out", certificate_out, "Write certifying matching edges here");

  auto* ver = app.add_subcommand("verify", "Check a matching against the characterization");
  ver->add_option("graph", graph_path, "Edge-list file")->required();
  ver->add_option("matching", matching_path, "Matching file (one edge per line)")->required();

  auto* gen_cmd = app.add_subcommand("generate", "Emit a member of a named graph family");
  gen_cmd->add_option("family", gen.family,
                      "spider | subdivided-grid | k-family | cycle | path | prop2 | family-f")
      ->required();
  gen_cmd->add_option("params", gen.params, "Family parameters (n, or n delta for prop2)");
  gen_cmd->add_option("--seed", gen.seed, "family-f: random seed");
  gen_cmd->add_option("--max-k2", gen.f_params.max_k2, "family-f: most K2 copies");
  gen_cmd->add_option("--max-a", gen.f_params.max_a, "family-f: most A vertices");
  gen_cmd->add_option("--mark-prob", gen.f_params.mark_prob, "family-f: mark probability");
  gen_cmd->add_option("--max-vertices", gen.f_params.max_vertices, "family-f: vertex cap");
  gen_cmd->add_flag("--no-marks", gen.no_marks, "family-f: mark nothing (minimum degree 2)");
  gen_cmd->add_option("--recipe", gen.recipe_path, "family-f: build from a recipe file");
  gen_cmd->add_option("--matching-out", gen.matching_out, "Write the certificate matching here");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  Context ctx{out, err, json, ""};
  try {
    if (*gamma) {
      ctx.command = "gamma-t";
      return cmd_gamma_t(ctx, graph_path);
    }
    if (*mu) {
      ctx.command = "mu-star";
      return cmd_mu_star(ctx, graph_path);
    }
    if (*bounds) {
      ctx.command = "bounds";
      return cmd_bounds(ctx, graph_path);
    }
    if (*rec) {
      ctx.command = "recognize";
      return cmd_recognize(ctx, graph_path, with_oracle, certificate_out);
    }
    if (*ver) {
      ctx.command = "verify";
      return cmd_verify(ctx, graph_path, matching_path);
    }
    ctx.command = "generate";
    return cmd_generate(ctx, gen, join_args(args));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace tdmm::cli
