#include "dualpf/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dualpf/error.hpp"

namespace dualpf {

DualCentralityResult dual_centrality(const Hypergraph& h, const Perturbation& p,
                                     const CentralityConfig& cfg) {
  if (!h.is_connected()) {
    throw Error(ErrorKind::NotConnected, "hypergraph is not connected");
  }
  const int n = h.num_vertices();
  const int m = h.uniformity();
  const SparseSymTensor a_s = adjacency_tensor(h);
  const SparseSymTensor a_d = perturbation_tensor(p, n, m);

  // Step 1
  const PerronPair perron = perron_pair(a_s, cfg.spectral);
  const Vector& x_s = perron.x_s;

  // Step 2: y is parallel to x_s because M(H, x_s) is symmetric.
  const MMatrix mm = make_mmatrix(build_m_symmetric(h, perron.lambda_s, x_s), x_s,
                                  /*hint_symmetric=*/true, cfg.msolve);
  const double lambda_d = lambda_dual(mm.y_left, a_d, x_s);

  // Step 3
  const Vector x_d = dual_part_vector(mm, a_d, lambda_d, x_s, cfg.msolve);

  DualCentralityResult r;
  r.n = n;
  r.m = m;
  r.lambda_s = perron.lambda_s;
  r.lambda_d = lambda_d;
  r.x_s = x_s;
  r.x_d = x_d;
  r.iterations = perron.iterations;
  r.gap = perron.gap;
  r.config = cfg;
  r.scores = r.pair().x();
  r.residual = verify_dual_eigenpair(a_s, a_d, r.pair(), cfg.verify_tol);
  return r;
}

RankTable rank_vertices(const Vector& x_s, const Vector& x_d, double tie_tol) {
  const int n = static_cast<int>(x_s.size());
  if (x_d.size() != n) throw Error(ErrorKind::DimensionMismatch, "x_s and x_d lengths differ");

  auto chain_groups = [tie_tol](std::vector<int> ids, const Vector& key) {
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) { return key[a] > key[b]; });
    std::vector<std::vector<int>> groups;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (k == 0 || key[ids[k - 1]] - key[ids[k]] > tie_tol) groups.emplace_back();
      groups.back().push_back(ids[k]);
    }
    return groups;
  };

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  RankTable table;
  for (auto& standard_group : chain_groups(all, x_s)) {
    std::sort(standard_group.begin(), standard_group.end());
    for (auto& g : chain_groups(standard_group, x_d)) {
      std::sort(g.begin(), g.end());
      table.groups.push_back(std::move(g));
    }
  }
  return table;
}

RankTable rank_vertices(const DualCentralityResult& r, double tie_tol) {
  return rank_vertices(r.x_s, r.x_d, tie_tol);
}

std::string format_ranking(const RankTable& t) {
  std::string out;
  for (std::size_t g = 0; g < t.groups.size(); ++g) {
    if (g) out += " > ";
    for (std::size_t k = 0; k < t.groups[g].size(); ++k) {
      if (k) out += " = ";
      out += std::to_string(t.groups[g][k] + 1);
    }
  }
  return out;
}

const InstanceCase& BuiltinInstance::find_case(std::string_view label) const {
  for (const auto& c : cases) {
    if (c.label == label) return c;
  }
  throw Error(ErrorKind::UnknownInstance,
              "instance " + name + " has no case '" + std::string(label) + "'");
}

namespace {

std::vector<Edge> to_zero_based(std::initializer_list<Edge> edges) {
  std::vector<Edge> out;
  for (Edge e : edges) {
    for (int& v : e) --v;
    out.push_back(std::move(e));
  }
  return out;
}

Perturbation unit_perturbation(std::initializer_list<Edge> edges) {
  Perturbation p;
  for (auto& e : to_zero_based(edges)) p.edges.push_back({std::move(e), 1.0});
  return p;
}

}  // namespace

BuiltinInstance builtin_instance(std::string_view name) {
  if (name == "fig1-candidate") {
    Hypergraph g(8, 2,
                 to_zero_based({{1, 2}, {2, 8}, {1, 8}, {1, 3}, {2, 5}, {8, 7},
                                {3, 4}, {3, 6}, {5, 4}, {5, 6}, {7, 4}, {7, 6}}));
    InstanceCase triangle{
        "triangle",
        unit_perturbation({{1, 2}, {2, 8}, {1, 8}}),
        std::vector<double>{0.2983, 0.2983, -0.1436, -0.2320, -0.1436, -0.2320, -0.1436,
                            0.2983},
        "1 = 2 = 8 > 3 = 5 = 7 > 4 = 6"};
    return {std::string(name), std::move(g), {std::move(triangle)}};
  }
  if (name == "fig2-candidate") {
    Hypergraph g(9, 3,
                 to_zero_based({{1, 2, 3}, {4, 5, 6}, {1, 4, 5}, {2, 6, 7}, {3, 8, 9},
                                {7, 8, 9}}));
    InstanceCase e123{
        "edge-123",
        unit_perturbation({{1, 2, 3}}),
        std::vector<double>{0.2137, 0.2137, 0.2137, -0.1068, -0.1068, -0.1068, -0.1068,
                            -0.1068, -0.1068},
        "1 = 2 = 3 > 4 = 5 = 6 = 7 = 8 = 9"};
    InstanceCase e456{
        "edge-456",
        unit_perturbation({{4, 5, 6}}),
        std::vector<double>{0.0855, -0.1068, -0.2991, 0.5342, 0.5342, 0.3419, -0.2350,
                            -0.4273, -0.4273},
        "4 = 5 > 6 > 1 > 2 > 7 > 3 > 8 = 9"};
    return {std::string(name), std::move(g), {std::move(e123), std::move(e456)}};
  }
  throw Error(ErrorKind::UnknownInstance, "unknown instance '" + std::string(name) + "'");
}

std::vector<std::string> builtin_instance_names() { return {"fig1-candidate", "fig2-candidate"}; }

TableMatch compare_to_reference(const Vector& x_d, const std::vector<double>& reference,
                                double tol) {
  TableMatch t;
  t.tol = tol;
  if (static_cast<std::size_t>(x_d.size()) != reference.size()) {
    t.max_abs_diff = std::numeric_limits<double>::infinity();
    return t;
  }
  for (std::size_t i = 0; i < reference.size(); ++i) {
    t.max_abs_diff = std::max(t.max_abs_diff, std::abs(x_d[i] - reference[i]));
  }
  t.matched = t.max_abs_diff <= tol;
  return t;
}

}  // namespace dualpf
