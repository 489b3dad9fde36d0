#pragma once

#include <vector>

#include "dualpf/tensor.hpp"

namespace dualpf {

/// Sorted, 0-based vertex ids of one hyperedge.
using Edge = std::vector<int>;

/// n-vertex m-uniform undirected hypergraph without repeated edges.
class Hypergraph {
 public:
  /// Edges may be given in any vertex order; throws Error(InvalidInput) on
  /// out-of-range or repeated vertices, wrong edge size or duplicate edges.
  Hypergraph(int num_vertices, int uniformity, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int uniformity() const { return m_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<int> degrees() const;

  /// True when n >= 2 and every vertex is reachable from every other.
  bool is_connected() const;

 private:
  int n_;
  int m_;
  std::vector<Edge> edges_;
};

struct WeightedEdge {
  Edge edge;
  double weight = 1.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Dual-part tensor spec: `weight` sits at every permutation of each edge.
struct Perturbation {
  std::vector<WeightedEdge> edges;

  bool empty() const { return edges.empty(); }
  friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

/// Value 1/(m-1)! at every permutation of every edge.
SparseSymTensor adjacency_tensor(const Hypergraph& h);

/// Tensor of a perturbation against an n-vertex m-uniform host; repeated
/// edges accumulate. Throws Error(InvalidPerturbation) on size or range mismatch.
SparseSymTensor perturbation_tensor(const Perturbation& p, int num_vertices, int uniformity);

/// Concatenation; the resulting tensor is the sum of the inputs' tensors.
Perturbation combine(const std::vector<Perturbation>& parts);

}  // namespace dualpf
