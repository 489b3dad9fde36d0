#pragma once

// Generators and independent oracles shared by the test binaries. Nothing in
// here calls the library's evaluation paths: tensors are expanded densely
// through SparseSymTensor::value() only.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dualpf/hypergraph.hpp"
#include "dualpf/types.hpp"

namespace dualpf::testing {

using Rng = std::mt19937_64;

inline Edge random_subset(Rng& rng, int n, int m) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  Edge e(all.begin(), all.begin() + m);
  std::sort(e.begin(), e.end());
  return e;
}

/// Connected m-uniform hypergraph: a random spanning chain of edges, each
/// adding one new vertex, plus a few random extra edges.
inline Hypergraph random_connected_hypergraph(Rng& rng, int n, int m, int extra_edges) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Edge> edges;
  edges.insert([&] {
    Edge e(order.begin(), order.begin() + m);
    std::sort(e.begin(), e.end());
    return e;
  }());
  for (int k = m; k < n; ++k) {
    // new vertex order[k] plus m-1 distinct earlier vertices
    std::vector<int> earlier(order.begin(), order.begin() + k);
    std::shuffle(earlier.begin(), earlier.end(), rng);
    Edge e(earlier.begin(), earlier.begin() + (m - 1));
    e.push_back(order[k]);
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  for (int k = 0; k < extra_edges; ++k) edges.insert(random_subset(rng, n, m));
  return Hypergraph(n, m, std::vector<Edge>(edges.begin(), edges.end()));
}

/// Random edge set, connected or not.
inline Hypergraph random_hypergraph(Rng& rng, int n, int m, int num_edges) {
  std::set<Edge> edges;
  for (int k = 0; k < num_edges; ++k) edges.insert(random_subset(rng, n, m));
  return Hypergraph(n, m, std::vector<Edge>(edges.begin(), edges.end()));
}

/// Union-find connectivity, independent of Hypergraph::is_connected.
inline bool union_find_connected(const Hypergraph& h) {
  const int n = h.num_vertices();
  if (n < 2) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : h.edges()) {
    for (std::size_t k = 1; k < e.size(); ++k) parent[find(e[k])] = find(e[0]);
  }
  const int root = find(0);
  for (int v = 1; v < n; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

/// d-regular m-uniform hypergraph on m*blocks vertices as the union of d random
/// perfect matchings into m-sets. Returns false when the draw repeats an edge
/// or is disconnected.
inline std::optional<Hypergraph> random_regular_hypergraph(Rng& rng, int m, int blocks, int d) {
  const int n = m * blocks;
  std::set<Edge> edges;
  for (int r = 0; r < d; ++r) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int b = 0; b < blocks; ++b) {
      Edge e(perm.begin() + b * m, perm.begin() + (b + 1) * m);
      std::sort(e.begin(), e.end());
      if (!edges.insert(e).second) return std::nullopt;
    }
  }
  Hypergraph h(n, m, std::vector<Edge>(edges.begin(), edges.end()));
  if (!union_find_connected(h)) return std::nullopt;
  return h;
}

/// Calls f(index) for every index in {0..n-1}^m (odometer order).
template <class F>
void for_each_index(int n, int m, F&& f) {
  std::vector<int> idx(m, 0);
  while (true) {
    f(static_cast<const std::vector<int>&>(idx));
    int k = m - 1;
    while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
    if (k < 0) return;
  }
}

/// Dense T x^(m-1) straight from the definition.
inline Vector dense_apply(const SparseSymTensor& t, const Vector& x) {
  Vector out = Vector::Zero(t.dim());
  for_each_index(t.dim(), t.order(), [&](const std::vector<int>& idx) {
    const double v = t.value(idx);
    if (v == 0.0) return;
    double prod = v;
    for (std::size_t k = 1; k < idx.size(); ++k) prod *= x[idx[k]];
    out[idx[0]] += prod;
  });
  return out;
}

/// Dense A^(k) for k = 2..m straight from the definition.
inline std::vector<Matrix> dense_contractions(const SparseSymTensor& t, const Vector& x) {
  const int m = t.order();
  std::vector<Matrix> out(m - 1, Matrix::Zero(t.dim(), t.dim()));
  for_each_index(t.dim(), m, [&](const std::vector<int>& idx) {
    const double v = t.value(idx);
    if (v == 0.0) return;
    for (int k = 1; k < m; ++k) {
      double prod = v;
      for (int s = 1; s < m; ++s) {
        if (s != k) prod *= x[idx[s]];
      }
      out[k - 1](idx[0], idx[k]) += prod;
    }
  });
  return out;
}

/// Adjacency matrix of a graph (m = 2).
inline Matrix adjacency_matrix(const Hypergraph& g) {
  Matrix a = Matrix::Zero(g.num_vertices(), g.num_vertices());
  for (const auto& e : g.edges()) {
    a(e[0], e[1]) += 1.0;
    a(e[1], e[0]) += 1.0;
  }
  return a;
}

struct DensePerron {
  double lambda;
  Vector x;  // unit 2-norm, positive
};

/// Plain power method on (A + I), iterated until the vector stops moving.
inline DensePerron dense_power_method(const Matrix& a, double tol = 1e-15,
                                      int max_iter = 2'000'000) {
  const int n = static_cast<int>(a.rows());
  const Matrix shifted = a + Matrix::Identity(n, n);
  Vector x = Vector::Ones(n) / std::sqrt(static_cast<double>(n));
  for (int it = 0; it < max_iter; ++it) {
    Vector y = shifted * x;
    y /= y.norm();
    const double change = (y - x).lpNorm<Eigen::Infinity>();
    x = std::move(y);
    if (change < tol) break;
  }
  return {x.dot(a * x), x};
}

/// Random nonsymmetric irreducible singular M-matrix D - B with B x = D x.
inline Matrix random_nonsymmetric_m(Rng& rng, int n, Vector* x_out) {
  std::uniform_real_distribution<double> u(0.2, 1.5);
  std::bernoulli_distribution keep(0.5);
  Matrix b = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) b(i, (i + 1) % n) = u(rng);  // cycle keeps it irreducible
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && keep(rng)) b(i, j) = u(rng);
    }
  }
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = u(rng);
  Matrix m = -b;
  for (int i = 0; i < n; ++i) m(i, i) = b.row(i).dot(x) / x[i];
  *x_out = x;
  return m;
}

}  // namespace dualpf::testing
