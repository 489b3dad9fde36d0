#include "dualpf/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dualpf/digraph.hpp"
#include "dualpf/error.hpp"

namespace dualpf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::InvalidPerturbation: return "InvalidPerturbation";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotSingular: return "NotSingular";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::SingularBordered: return "SingularBordered";
    case ErrorKind::SubmatrixSingular: return "SubmatrixSingular";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::NotTied: return "NotTied";
    case ErrorKind::UnknownInstance: return "UnknownInstance";
  }
  return "Unknown";
}

namespace detail {

bool all_distinct(const IndexTuple& sorted) {
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace detail

SparseSymTensor::SparseSymTensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 2) throw Error(ErrorKind::InvalidInput, "tensor order must be >= 2");
  if (dim < 1) throw Error(ErrorKind::InvalidInput, "tensor dimension must be >= 1");
}

SparseSymTensor::SparseSymTensor(int order, int dim,
                                 const std::vector<std::pair<IndexTuple, double>>& entries)
    : SparseSymTensor(order, dim) {
  for (auto [index, v] : entries) {
    if (static_cast<int>(index.size()) != order_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "index tuple of length " + std::to_string(index.size()) +
                      " in an order-" + std::to_string(order_) + " tensor");
    }
    for (int i : index) {
      if (i < 0 || i >= dim_) {
        throw Error(ErrorKind::DimensionMismatch, "tensor index " + std::to_string(i) +
                                                      " out of range for dimension " +
                                                      std::to_string(dim_));
      }
    }
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "non-finite tensor entry");
    std::sort(index.begin(), index.end());
    entries_[std::move(index)] += v;
  }
}

double SparseSymTensor::value(IndexTuple index) const {
  std::sort(index.begin(), index.end());
  auto it = entries_.find(index);
  return it == entries_.end() ? 0.0 : it->second;
}

bool SparseSymTensor::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second >= 0.0; });
}

SparseSymTensor SparseSymTensor::scaled(double c) const {
  SparseSymTensor out(order_, dim_);
  for (const auto& [index, v] : entries_) out.entries_.emplace(index, c * v);
  return out;
}

Vector entrywise_pow(const Vector& x, int k) {
  Vector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = std::pow(x[i], k);
  return out;
}

double m_norm(const Vector& x, int m) {
  double acc = 0.0;
  for (double v : x) acc += std::pow(std::abs(v), m);
  return std::pow(acc, 1.0 / m);
}

namespace {

// Accumulates sum over permutations p of value * x[p1] ... x[p_{m-1}] into out[p0].
// Tuples with distinct indices take the closed form (m-1)! * prod_{j != i} x_j.
template <class Scalar, class Value>
void apply_entries(const SparseSymTensor& t, const std::vector<Scalar>& x,
                   std::vector<Scalar>& out, Value make_value) {
  const int m = t.order();
  const double multiplicity = detail::factorial(m - 1);
  for (const auto& [index, v] : t.entries()) {
    const Scalar coeff = make_value(v);
    if (detail::all_distinct(index)) {
      for (int slot = 0; slot < m; ++slot) {
        Scalar prod = coeff * Scalar(multiplicity);
        for (int other = 0; other < m; ++other) {
          if (other != slot) prod *= x[index[other]];
        }
        out[index[slot]] += prod;
      }
    } else {
      detail::for_each_distinct_permutation(index, [&](const IndexTuple& p) {
        Scalar prod = coeff;
        for (int k = 1; k < m; ++k) prod *= x[p[k]];
        out[p[0]] += prod;
      });
    }
  }
}

}  // namespace

Vector tensor_apply(const SparseSymTensor& t, const Vector& x) {
  if (x.size() != t.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(x.size()) +
                                                  " does not match tensor dimension " +
                                                  std::to_string(t.dim()));
  }
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> out(x.size(), 0.0);
  apply_entries(t, xs, out, [](double v) { return v; });
  return Eigen::Map<Vector>(out.data(), static_cast<Eigen::Index>(out.size()));
}

DualVector dual_tensor_apply(const SparseSymTensor& a_s, const SparseSymTensor& a_d,
                             const DualVector& x) {
  if (a_s.order() != a_d.order() || a_s.dim() != a_d.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "standard and dual parts differ in shape");
  }
  if (static_cast<int>(x.size()) != a_s.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "dual vector length does not match tensor");
  }
  DualVector out(x.size());
  apply_entries(a_s, x, out, [](double v) { return DualNumber{v, 0.0}; });
  apply_entries(a_d, x, out, [](double v) { return DualNumber{0.0, v}; });
  return out;
}

std::vector<std::vector<int>> tensor_digraph(const SparseSymTensor& t) {
  std::vector<std::vector<int>> arcs(t.dim());
  for (const auto& [index, v] : t.entries()) {
    if (v == 0.0) continue;
    // Each distinct value i in the tuple leads some permutation; the rest of
    // the tuple (one copy of i removed) gives its trailing indices.
    for (std::size_t pos = 0; pos < index.size(); ++pos) {
      if (pos > 0 && index[pos] == index[pos - 1]) continue;
      const int lead = index[pos];
      for (std::size_t other = 0; other < index.size(); ++other) {
        if (other != pos && index[other] != lead) arcs[lead].push_back(index[other]);
      }
    }
  }
  for (auto& succ : arcs) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return arcs;
}

bool is_weakly_irreducible(const SparseSymTensor& t) {
  if (t.dim() < 2) return false;
  return is_strongly_connected(tensor_digraph(t));
}

}  // namespace dualpf
