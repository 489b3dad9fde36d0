#include "dualpf/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "dualpf/error.hpp"

namespace dualpf {

namespace {

std::string edge_text(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i] + 1);
  }
  return s + "}";
}

}  // namespace

Hypergraph::Hypergraph(int num_vertices, int uniformity, std::vector<Edge> edges)
    : n_(num_vertices), m_(uniformity), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  if (m_ < 2) throw Error(ErrorKind::InvalidInput, "uniformity must be >= 2");
  std::set<Edge> seen;
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != m_) {
      throw Error(ErrorKind::InvalidInput, "edge " + edge_text(e) + " is not " +
                                               std::to_string(m_) + "-uniform");
    }
    if (!detail::all_distinct(e)) {
      throw Error(ErrorKind::InvalidInput, "edge " + edge_text(e) + " repeats a vertex");
    }
    if (e.front() < 0 || e.back() >= n_) {
      throw Error(ErrorKind::InvalidInput, "edge " + edge_text(e) + " leaves vertex range 1.." +
                                               std::to_string(n_));
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate edge " + edge_text(e));
    }
  }
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    for (int v : e) ++deg[v];
  }
  return deg;
}

bool Hypergraph::is_connected() const {
  if (n_ < 2) return false;
  std::vector<std::vector<int>> incident(n_);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    for (int v : edges_[k]) incident[v].push_back(static_cast<int>(k));
  }
  std::vector<char> seen(n_, 0);
  std::vector<int> frontier{0};
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.back();
    frontier.pop_back();
    for (int k : incident[v]) {
      for (int w : edges_[k]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          frontier.push_back(w);
        }
      }
    }
  }
  return reached == n_;
}

SparseSymTensor adjacency_tensor(const Hypergraph& h) {
  const double value = 1.0 / detail::factorial(h.uniformity() - 1);
  std::vector<std::pair<IndexTuple, double>> entries;
  entries.reserve(h.edges().size());
  for (const auto& e : h.edges()) entries.emplace_back(e, value);
  return SparseSymTensor(h.uniformity(), h.num_vertices(), entries);
}

SparseSymTensor perturbation_tensor(const Perturbation& p, int num_vertices, int uniformity) {
  std::vector<std::pair<IndexTuple, double>> entries;
  entries.reserve(p.edges.size());
  for (const auto& we : p.edges) {
    Edge e = we.edge;
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != uniformity) {
      throw Error(ErrorKind::InvalidPerturbation,
                  "perturbation edge " + edge_text(e) + " does not match uniformity " +
                      std::to_string(uniformity));
    }
    if (!detail::all_distinct(e)) {
      throw Error(ErrorKind::InvalidPerturbation,
                  "perturbation edge " + edge_text(e) + " repeats a vertex");
    }
    if (e.front() < 0 || e.back() >= num_vertices) {
      throw Error(ErrorKind::InvalidPerturbation,
                  "perturbation edge " + edge_text(e) + " leaves vertex range 1.." +
                      std::to_string(num_vertices));
    }
    if (!std::isfinite(we.weight)) {
      throw Error(ErrorKind::InvalidPerturbation, "non-finite perturbation weight");
    }
    entries.emplace_back(std::move(e), we.weight);
  }
  return SparseSymTensor(uniformity, num_vertices, entries);
}

Perturbation combine(const std::vector<Perturbation>& parts) {
  Perturbation out;
  for (const auto& p : parts) {
    out.edges.insert(out.edges.end(), p.edges.begin(), p.edges.end());
  }
  return out;
}

}  // namespace dualpf
