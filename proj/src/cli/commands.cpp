#include "dualpf/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dualpf/centrality.hpp"
#include "dualpf/error.hpp"
#include "dualpf/parse.hpp"
#include "dualpf/report.hpp"

namespace dualpf::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string input;
  std::string instance;
  std::string case_label;
  std::optional<int> num_vertices;
  std::vector<std::string> perturb_files;
  std::vector<std::string> perturb_edges;
  double tol = 1e-12;
  int max_iter = 100000;
  double shift = 1.0;
  std::string format = "text";
  int precision = 4;
  double tie_tol = 1e-8;
  std::string result_path;
  std::string example_name;
  std::string out_dir = ".";
};

/// Host hypergraph plus the summed perturbation for one run.
struct Problem {
  Hypergraph graph;
  Perturbation perturbation;
  /// Set when the perturbation is exactly a built-in case.
  const InstanceCase* known_case = nullptr;
  std::optional<BuiltinInstance> instance;
};

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
  auto* input = cmd->add_option("--input", cfg.input, "Hypergraph edge-list file");
  auto* instance = cmd->add_option("--instance", cfg.instance, "Built-in instance name");
  input->excludes(instance);
  cmd->add_option("--num-vertices", cfg.num_vertices, "Vertex count override")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", cfg.tol, "Power-iteration relative gap")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", cfg.max_iter, "Power-iteration limit")->check(CLI::PositiveNumber);
  cmd->add_option("--shift", cfg.shift, "Power-iteration diagonal shift")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--precision", cfg.precision, "Decimal places in text and csv output")
      ->check(CLI::Range(1, 15));
}

void add_perturbation_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--perturb", cfg.perturb_files, "Perturbation file (repeatable)");
  cmd->add_option("--perturb-edge", cfg.perturb_edges,
                  "Perturbation edge v1,v2,...[,w=W] (repeatable)");
  cmd->add_option("--case", cfg.case_label, "Perturbation case of a built-in instance");
  cmd->add_option("--tie-tol", cfg.tie_tol, "Tie tolerance for ranking")
      ->check(CLI::PositiveNumber);
}

CentralityConfig centrality_config(const RunConfig& cfg) {
  CentralityConfig c;
  c.spectral.tol = cfg.tol;
  c.spectral.max_iter = cfg.max_iter;
  c.spectral.shift = cfg.shift;
  return c;
}

Problem load_problem(const RunConfig& cfg, bool with_perturbation) {
  if (cfg.input.empty() && cfg.instance.empty()) {
    throw Error(ErrorKind::InvalidInput, "one of --input or --instance is required");
  }
  std::optional<BuiltinInstance> instance;
  std::optional<Hypergraph> graph;
  if (!cfg.instance.empty()) {
    instance = builtin_instance(cfg.instance);
    graph = instance->graph;
  } else {
    ParseOptions opts;
    opts.num_vertices = cfg.num_vertices;
    graph = read_hypergraph(cfg.input, opts);
  }

  Problem problem{std::move(*graph), {}, nullptr, std::move(instance)};
  if (!with_perturbation) return problem;

  std::vector<Perturbation> parts;
  for (const auto& f : cfg.perturb_files) parts.push_back(read_perturbation(f));
  for (const auto& e : cfg.perturb_edges) parts.push_back(parse_edge_spec(e));

  if (problem.instance) {
    const bool explicit_parts = !parts.empty();
    if (!cfg.case_label.empty()) {
      problem.known_case = &problem.instance->find_case(cfg.case_label);
    } else if (!explicit_parts && !problem.instance->cases.empty()) {
      problem.known_case = &problem.instance->cases.front();
    }
    if (problem.known_case) {
      parts.insert(parts.begin(), problem.known_case->perturbation);
      if (explicit_parts) problem.known_case = nullptr;
    }
  } else if (!cfg.case_label.empty()) {
    throw Error(ErrorKind::InvalidInput, "--case requires --instance");
  }
  problem.perturbation = combine(parts);
  return problem;
}

std::optional<report::TableVerdict> verdict_for(const Problem& p, const DualCentralityResult& r) {
  if (!p.known_case || !p.known_case->reference_x_d) return std::nullopt;
  return report::TableVerdict{p.known_case->label,
                              compare_to_reference(r.x_d, *p.known_case->reference_x_d)};
}

int cmd_spectral(const RunConfig& cfg, std::ostream& out) {
  const Problem p = load_problem(cfg, false);
  if (!p.graph.is_connected()) throw Error(ErrorKind::NotConnected, "hypergraph is not connected");
  const SparseSymTensor a = adjacency_tensor(p.graph);
  const PerronPair pair = perron_pair(a, centrality_config(cfg).spectral);
  const double residual = eigen_residual(a, pair.lambda_s, pair.x_s);
  if (cfg.format == "json") {
    out << report::dump(report::spectral_json(pair, p.graph.uniformity(), residual));
  } else if (cfg.format == "csv") {
    out << "vertex,x_s\n";
    for (Eigen::Index i = 0; i < pair.x_s.size(); ++i) {
      out << i + 1 << ',' << report::fixed(pair.x_s[i], cfg.precision) << '\n';
    }
  } else {
    out << report::spectral_text(pair, p.graph.uniformity(), residual, cfg.precision);
  }
  return kOk;
}

int cmd_centrality(const RunConfig& cfg, std::ostream& out, bool ranking_only) {
  const Problem p = load_problem(cfg, true);
  const DualCentralityResult r = dual_centrality(p.graph, p.perturbation, centrality_config(cfg));
  const RankTable ranking = rank_vertices(r, cfg.tie_tol);
  const auto verdict = verdict_for(p, r);

  if (ranking_only) {
    if (cfg.format == "json") {
      report::Json j;
      j["ranking"] = report::centrality_json(r, ranking, std::nullopt)["ranking"];
      out << report::dump(j);
    } else if (cfg.format == "csv") {
      out << report::centrality_csv(r, ranking, cfg.precision);
    } else {
      out << format_ranking(ranking) << '\n';
    }
    return kOk;
  }

  if (cfg.format == "json") {
    out << report::dump(report::centrality_json(r, ranking, verdict));
  } else if (cfg.format == "csv") {
    out << report::centrality_csv(r, ranking, cfg.precision);
  } else {
    out << report::centrality_text(r, ranking, verdict, cfg.precision);
  }
  return kOk;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Problem p = load_problem(cfg, true);
  const int n = p.graph.num_vertices();
  const int m = p.graph.uniformity();

  DualEigenPair pair;
  if (cfg.result_path.empty()) {
    const auto r = dual_centrality(p.graph, p.perturbation, centrality_config(cfg));
    pair = r.pair();
  } else {
    if (!p.graph.is_connected()) {
      throw Error(ErrorKind::NotConnected, "hypergraph is not connected");
    }
    const auto stored = report::parse_result_json(slurp(cfg.result_path));
    if (stored.n != n || stored.m != m) {
      throw ParseError(0, "result file does not match the hypergraph shape");
    }
    pair = DualEigenPair{{stored.lambda_s, stored.lambda_d}, stored.x_s, stored.x_d};
  }

  const SparseSymTensor a_s = adjacency_tensor(p.graph);
  const SparseSymTensor a_d = perturbation_tensor(p.perturbation, n, m);
  const ResidualReport residual = verify_dual_eigenpair(a_s, a_d, pair, 1e-8);

  std::vector<InvariantCheck> checks;
  checks.push_back({"residual_standard", residual.standard <= 1e-8, residual.standard, 1e-8});
  checks.push_back({"residual_dual", residual.dual <= 1e-8, residual.dual, 1e-8});
  const double norm_err = std::abs(m_norm(pair.x_s, m) - 1.0);
  checks.push_back({"normalization", norm_err <= 1e-12, norm_err, 1e-12});
  const double ortho = std::abs(pair.x_s.dot(pair.x_d));
  checks.push_back({"orthogonality", ortho <= 1e-10, ortho, 1e-10});

  const MMatrix mm{build_m_symmetric(p.graph, pair.lambda.s, pair.x_s), pair.x_s,
                   pair.x_s / pair.x_s.norm()};
  for (auto& c : check_mmatrix(mm)) checks.push_back(std::move(c));

  std::vector<std::string> failed;
  report::Json list = report::Json::array();
  for (const auto& c : checks) {
    if (!c.passed) failed.push_back(c.name);
    if (cfg.format == "json") {
      report::Json j;
      j["name"] = c.name;
      j["passed"] = c.passed;
      j["value"] = c.value;
      j["threshold"] = c.threshold;
      list.push_back(std::move(j));
    } else {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s %-34s %.3e <= %.1e\n", c.passed ? "PASS" : "FAIL",
                    c.name.c_str(), c.value, c.threshold);
      out << buf;
    }
  }
  const double xd_max = pair.x_d.size() ? pair.x_d.lpNorm<Eigen::Infinity>() : 0.0;
  if (cfg.format == "json") {
    report::Json j;
    j["passed"] = failed.empty();
    j["checks"] = std::move(list);
    j["max_abs_x_d"] = xd_max;
    out << report::dump(j);
  } else {
    out << "max |x_d| = " << report::fixed(xd_max, cfg.precision) << '\n';
    out << (failed.empty() ? "verify: pass" : "verify: FAIL") << '\n';
  }
  if (failed.empty()) return kOk;
  err << "failed invariants:";
  for (const auto& f : failed) err << ' ' << f;
  err << '\n';
  return kVerifyFailed;
}

int cmd_examples(const RunConfig& cfg, std::ostream& out) {
  const BuiltinInstance inst = builtin_instance(cfg.example_name);
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  auto write = [&](const fs::path& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
    f << body;
    out << path.string() << '\n';
  };
  write(dir / (inst.name + ".hgr"), format_hypergraph(inst.graph));
  for (const auto& c : inst.cases) {
    write(dir / (inst.name + "." + c.label + ".pert"), format_perturbation(c.perturbation));
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidInput:
    case ErrorKind::UnknownInstance:
      return kParse;
    case ErrorKind::NotConnected:
    case ErrorKind::NotIrreducible:
      return kNotConnected;
    case ErrorKind::NoConvergence:
      return kNoConvergence;
    case ErrorKind::InvalidPerturbation:
    case ErrorKind::Inconsistent:
      return kBadPerturbation;
    default:
      return kVerifyFailed;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual-number Perron eigenpairs and dual centrality of uniform hypergraphs",
               "dualpf"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* spectral = app.add_subcommand("spectral", "Spectral radius and Perron vector");
  add_input_options(spectral, cfg);

  auto* centrality = app.add_subcommand("centrality", "Dual centrality vector");
  add_input_options(centrality, cfg);
  add_perturbation_options(centrality, cfg);

  auto* rank = app.add_subcommand("rank", "Vertex ranking under the dual order");
  add_input_options(rank, cfg);
  add_perturbation_options(rank, cfg);

  auto* verify = app.add_subcommand("verify", "Check a centrality result and its M-matrix");
  add_input_options(verify, cfg);
  add_perturbation_options(verify, cfg);
  verify->add_option("--result", cfg.result_path, "Centrality JSON to check instead of recomputing");

  auto* examples = app.add_subcommand("examples", "Write a built-in instance to files");
  examples->add_option("name", cfg.example_name, "Instance name")->required();
  examples->add_option("--out", cfg.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dualpf: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (spectral->parsed()) return cmd_spectral(cfg, out);
    if (centrality->parsed()) return cmd_centrality(cfg, out, false);
    if (rank->parsed()) return cmd_centrality(cfg, out, true);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (examples->parsed()) return cmd_examples(cfg, out);
  } catch (const NoConvergenceError& e) {
    err << "dualpf: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const Error& e) {
    err << "dualpf: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "dualpf: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dualpf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dualpf::cli
