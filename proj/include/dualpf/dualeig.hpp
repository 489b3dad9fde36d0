#pragma once

#include <vector>

#include "dualpf/dual.hpp"
#include "dualpf/hypergraph.hpp"
#include "dualpf/msolve.hpp"
#include "dualpf/spectral.hpp"
#include "dualpf/tensor.hpp"

namespace dualpf {

/// lambda = lambda_s + lambda_d eps with eigenvector x_s + x_d eps,
/// gauge-fixed by ||x_s||_m = 1 and x_s^T x_d = 0.
struct DualEigenPair {
  DualNumber lambda;
  Vector x_s;
  Vector x_d;

  DualVector x() const;
};

/// Matrices A^(k), k = 2..m: contract A_s with x_s in every slot except the
/// first and the k-th. Entry (i, j) collects the permutations with index i in
/// slot 1 and j in slot k.
std::vector<Matrix> contraction_matrices(const SparseSymTensor& a_s, const Vector& x_s);

/// (m-1) lambda_s diag(x_s)^(m-2) - sum_k A^(k), built from the explicit A^(k).
Matrix build_m_general(const SparseSymTensor& a_s, double lambda_s, const Vector& x_s);

/// Same matrix for an adjacency tensor, assembled edge by edge:
/// diagonal (m-1) lambda_s x_u^(m-2); off-diagonal -sum_{e ⊇ {u,v}} prod_{w in e\{u,v}} x_w.
Matrix build_m_symmetric(const Hypergraph& h, double lambda_s, const Vector& x_s);

/// y^T (A_d x_s^(m-1)) / y^T x_s^[m-1]; invariant under scaling of y.
double lambda_dual(const Vector& y, const SparseSymTensor& a_d, const Vector& x_s);

/// (A_d - lambda_d I) x_s^(m-1) = A_d x_s^(m-1) - lambda_d x_s^[m-1].
Vector dual_rhs(const SparseSymTensor& a_d, double lambda_d, const Vector& x_s);

/// ||A_d x_s^(m-1)||_2 + |lambda_d| ||x_s^[m-1]||_2, the size of the two terms
/// of dual_rhs. They cancel exactly when A_d is a multiple of A_s, so this is
/// the reference magnitude for consistency checks on b.
double dual_rhs_scale(const SparseSymTensor& a_d, double lambda_d, const Vector& x_s);

/// z with M z = b and x_s^T z = 0: the group-inverse solution with its x_s
/// component removed (a no-op when y is parallel to x_s).
Vector solve_gauge_fixed(const MMatrix& m, const Vector& b, const Vector& x_s,
                         const MsolveConfig& cfg = {}, double scale = 0.0);

/// Solves M x_d = b with b = dual_rhs(...) through the group inverse and
/// projects out the x_s component, so x_s^T x_d = 0.
Vector dual_part_vector(const MMatrix& m, const SparseSymTensor& a_d, double lambda_d,
                        const Vector& x_s, const MsolveConfig& cfg = {});

/// Which generalized inverse tie_difference evaluates with.
struct InverseKind {
  enum class Kind { Group, Principal } kind = Kind::Group;
  int drop = 0;

  static InverseKind group() { return {}; }
  static InverseKind principal(int drop_index) { return {Kind::Principal, drop_index}; }
};

/// (e_i - e_j)^T G b for G = M^# or a principal-submatrix {1}-inverse. Both give
/// (x_d)_i - (x_d)_j when (x_s)_i = (x_s)_j; otherwise throws Error(NotTied).
double tie_difference(int i, int j, const MMatrix& m, const Vector& b, InverseKind kind,
                      double tie_tol = 1e-9, const MsolveConfig& cfg = {}, double scale = 0.0);

struct ResidualReport {
  double standard = 0.0;
  double dual = 0.0;
  double tol = 0.0;
  bool passed = false;
};

/// ∞-norms of both parts of (A_s + A_d eps) x^(m-1) - lambda x^[m-1],
/// evaluated in dual arithmetic.
ResidualReport verify_dual_eigenpair(const SparseSymTensor& a_s, const SparseSymTensor& a_d,
                                     const DualEigenPair& pair, double tol = 1e-8);

/// Full construction for a general dual tensor: Perron pair of A_s, M from
/// the explicit A^(k), a solved (not assumed) left null vector, lambda_d, x_d.
DualEigenPair solve_dual_eigenpair(const SparseSymTensor& a_s, const SparseSymTensor& a_d,
                                   const SpectralConfig& spectral = {},
                                   const MsolveConfig& cfg = {});

}  // namespace dualpf
