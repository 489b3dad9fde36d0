#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualpf/dualeig.hpp"
#include "dualpf/hypergraph.hpp"
#include "dualpf/msolve.hpp"
#include "dualpf/spectral.hpp"

namespace dualpf {

struct CentralityConfig {
  SpectralConfig spectral;
  MsolveConfig msolve;
  /// Residual bound for the dual eigen-equation self-check.
  double verify_tol = 1e-8;
};

struct DualCentralityResult {
  int n = 0;
  int m = 0;
  double lambda_s = 0.0;
  double lambda_d = 0.0;
  Vector x_s;
  Vector x_d;
  DualVector scores;
  int iterations = 0;
  double gap = 0.0;
  ResidualReport residual;
  CentralityConfig config;

  DualEigenPair pair() const { return {{lambda_s, lambda_d}, x_s, x_d}; }
};

/// Perron pair of H, lambda_d = x_s^T (A_d x_s^(m-1)), M(H, x_s), and
/// x_d = M^# (A_d - lambda_d I) x_s^(m-1). Throws Error(NotConnected) for a
/// disconnected or degenerate H and NoConvergenceError from the power iteration.
DualCentralityResult dual_centrality(const Hypergraph& h, const Perturbation& p,
                                     const CentralityConfig& cfg = {});

/// Groups of 0-based vertex ids, best first.
struct RankTable {
  std::vector<std::vector<int>> groups;
};

/// Order by x_s descending, then x_d descending. Consecutive values within
/// tie_tol are chained into one group; ids inside a group are ascending.
RankTable rank_vertices(const Vector& x_s, const Vector& x_d, double tie_tol = 1e-8);
RankTable rank_vertices(const DualCentralityResult& r, double tie_tol = 1e-8);

/// "1 = 2 = 8 > 3 = 5 = 7 > 4 = 6" with 1-based ids.
std::string format_ranking(const RankTable& t);

struct InstanceCase {
  std::string label;
  Perturbation perturbation;
  /// Dual-part scores known to 4 decimals for this case.
  std::optional<std::vector<double>> reference_x_d;
  /// Expected ranking string for this case.
  std::string reference_ranking;
};

struct BuiltinInstance {
  std::string name;
  Hypergraph graph;
  std::vector<InstanceCase> cases;

  const InstanceCase& find_case(std::string_view label) const;
};

/// "fig1-candidate": cubic graph on 8 vertices with a single triangle {1,2,8}.
/// "fig2-candidate": 2-regular 3-uniform hypergraph on 9 vertices.
BuiltinInstance builtin_instance(std::string_view name);
std::vector<std::string> builtin_instance_names();

struct TableMatch {
  bool matched = false;
  double max_abs_diff = 0.0;
  double tol = 0.0;
};

/// Entrywise |computed - reference| <= tol.
TableMatch compare_to_reference(const Vector& x_d, const std::vector<double>& reference,
                                double tol = 5e-4);

}  // namespace dualpf
