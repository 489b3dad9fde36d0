#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "dualpf/dual.hpp"
#include "dualpf/types.hpp"

namespace dualpf {

/// 0-based vertex indices. Stored tuples are sorted ascending.
using IndexTuple = std::vector<int>;

/// Symmetric order-m, dimension-n real tensor kept by support tuple.
///
/// The value attached to a sorted tuple applies to every distinct
/// permutation of that tuple, so a hyperedge costs one entry instead of m!.
/// Repeated indices inside a tuple are allowed.
class SparseSymTensor {
 public:
  SparseSymTensor(int order, int dim);

  /// Entries with the same support (in any index order) are summed.
  SparseSymTensor(int order, int dim,
                  const std::vector<std::pair<IndexTuple, double>>& entries);

  int order() const { return order_; }
  int dim() const { return dim_; }
  const std::map<IndexTuple, double>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Per-permutation value at an index tuple given in any order.
  double value(IndexTuple index) const;

  bool nonnegative() const;
  SparseSymTensor scaled(double c) const;

 private:
  int order_;
  int dim_;
  std::map<IndexTuple, double> entries_;
};

/// Entrywise power x^[k].
Vector entrywise_pow(const Vector& x, int k);

/// (sum_i |x_i|^m)^(1/m).
double m_norm(const Vector& x, int m);

/// T x^(m-1): component i sums T(i, i2..im) x_i2 ... x_im over all i2..im.
Vector tensor_apply(const SparseSymTensor& t, const Vector& x);

/// (A_s + A_d eps) x^(m-1) evaluated in dual arithmetic.
DualVector dual_tensor_apply(const SparseSymTensor& a_s, const SparseSymTensor& a_d,
                             const DualVector& x);

/// Arcs of the tensor digraph: i -> j whenever a nonzero entry with leading
/// index i has j among its trailing indices (all-i tuples contribute nothing).
std::vector<std::vector<int>> tensor_digraph(const SparseSymTensor& t);

/// True when the tensor digraph is strongly connected. Dimension 1 and
/// entry-free tensors are reported as not weakly irreducible.
bool is_weakly_irreducible(const SparseSymTensor& t);

namespace detail {

/// Calls f(permutation) once per distinct permutation of a sorted tuple.
template <class F>
void for_each_distinct_permutation(IndexTuple sorted, F&& f) {
  do {
    f(static_cast<const IndexTuple&>(sorted));
  } while (std::next_permutation(sorted.begin(), sorted.end()));
}

bool all_distinct(const IndexTuple& sorted);

double factorial(int k);

}  // namespace detail

}  // namespace dualpf
