#include "dualpf/dualeig.hpp"

#include <cmath>
#include <string>

#include "dualpf/error.hpp"

namespace dualpf {

namespace {

void require_shape(const SparseSymTensor& t, const Vector& x) {
  if (x.size() != t.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(x.size()) +
                                                  " does not match dimension " +
                                                  std::to_string(t.dim()));
  }
}

}  // namespace

DualVector DualEigenPair::x() const {
  DualVector out(x_s.size());
  for (Eigen::Index i = 0; i < x_s.size(); ++i) out[i] = {x_s[i], x_d.size() ? x_d[i] : 0.0};
  return out;
}

std::vector<Matrix> contraction_matrices(const SparseSymTensor& a_s, const Vector& x_s) {
  require_shape(a_s, x_s);
  const int m = a_s.order();
  const int n = a_s.dim();
  std::vector<Matrix> out(m - 1, Matrix::Zero(n, n));
  for (const auto& [index, v] : a_s.entries()) {
    detail::for_each_distinct_permutation(index, [&](const IndexTuple& p) {
      for (int k = 1; k < m; ++k) {
        double prod = v;
        for (int slot = 1; slot < m; ++slot) {
          if (slot != k) prod *= x_s[p[slot]];
        }
        out[k - 1](p[0], p[k]) += prod;
      }
    });
  }
  return out;
}

Matrix build_m_general(const SparseSymTensor& a_s, double lambda_s, const Vector& x_s) {
  const int m = a_s.order();
  Matrix out = ((m - 1) * lambda_s * entrywise_pow(x_s, m - 2)).asDiagonal();
  for (const auto& a_k : contraction_matrices(a_s, x_s)) out -= a_k;
  return out;
}

Matrix build_m_symmetric(const Hypergraph& h, double lambda_s, const Vector& x_s) {
  const int n = h.num_vertices();
  const int m = h.uniformity();
  if (x_s.size() != n) throw Error(ErrorKind::DimensionMismatch, "x_s length mismatch");
  Matrix out = ((m - 1) * lambda_s * entrywise_pow(x_s, m - 2)).asDiagonal();
  for (const auto& e : h.edges()) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        double prod = 1.0;
        for (int c = 0; c < m; ++c) {
          if (c != a && c != b) prod *= x_s[e[c]];
        }
        out(e[a], e[b]) -= prod;
      }
    }
  }
  return out;
}

double lambda_dual(const Vector& y, const SparseSymTensor& a_d, const Vector& x_s) {
  require_shape(a_d, x_s);
  if (y.size() != x_s.size()) throw Error(ErrorKind::DimensionMismatch, "y length mismatch");
  const double denom = y.dot(entrywise_pow(x_s, a_d.order() - 1));
  if (!(denom > 0.0)) {
    throw Error(ErrorKind::DegenerateDenominator, "y^T x_s^[m-1] is not positive");
  }
  return y.dot(tensor_apply(a_d, x_s)) / denom;
}

Vector dual_rhs(const SparseSymTensor& a_d, double lambda_d, const Vector& x_s) {
  return tensor_apply(a_d, x_s) - lambda_d * entrywise_pow(x_s, a_d.order() - 1);
}

double dual_rhs_scale(const SparseSymTensor& a_d, double lambda_d, const Vector& x_s) {
  return tensor_apply(a_d, x_s).norm() +
         std::abs(lambda_d) * entrywise_pow(x_s, a_d.order() - 1).norm();
}

Vector solve_gauge_fixed(const MMatrix& m, const Vector& b, const Vector& x_s,
                         const MsolveConfig& cfg, double scale) {
  const Vector z = group_apply(m, b, cfg, scale);
  return z - (x_s.dot(z) / x_s.squaredNorm()) * x_s;
}

Vector dual_part_vector(const MMatrix& m, const SparseSymTensor& a_d, double lambda_d,
                        const Vector& x_s, const MsolveConfig& cfg) {
  return solve_gauge_fixed(m, dual_rhs(a_d, lambda_d, x_s), x_s, cfg,
                           dual_rhs_scale(a_d, lambda_d, x_s));
}

double tie_difference(int i, int j, const MMatrix& m, const Vector& b, InverseKind kind,
                      double tie_tol, const MsolveConfig& cfg, double scale) {
  const int n = m.size();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw Error(ErrorKind::InvalidInput, "vertex index out of range");
  }
  if (!(std::abs(m.x_right[i] - m.x_right[j]) <= tie_tol)) {
    throw Error(ErrorKind::NotTied, "vertices " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " differ in x_s");
  }
  if (i == j) return 0.0;
  Vector z;
  if (kind.kind == InverseKind::Kind::Group) {
    z = group_apply(m, b, cfg, scale);
  } else {
    z = one_inverse_principal(m, kind.drop, cfg) * b;
  }
  return z[i] - z[j];
}

ResidualReport verify_dual_eigenpair(const SparseSymTensor& a_s, const SparseSymTensor& a_d,
                                     const DualEigenPair& pair, double tol) {
  const DualVector x = pair.x();
  const DualVector lhs = dual_tensor_apply(a_s, a_d, x);
  const int m = a_s.order();
  ResidualReport r;
  r.tol = tol;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const DualNumber diff = lhs[i] - pair.lambda * pow(x[i], m - 1);
    r.standard = std::max(r.standard, std::abs(diff.s));
    r.dual = std::max(r.dual, std::abs(diff.d));
  }
  r.passed = r.standard <= tol && r.dual <= tol;
  return r;
}

DualEigenPair solve_dual_eigenpair(const SparseSymTensor& a_s, const SparseSymTensor& a_d,
                                   const SpectralConfig& spectral, const MsolveConfig& cfg) {
  if (a_s.order() != a_d.order() || a_s.dim() != a_d.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "standard and dual parts differ in shape");
  }
  const PerronPair perron = perron_pair(a_s, spectral);
  const MMatrix m = make_mmatrix(build_m_general(a_s, perron.lambda_s, perron.x_s),
                                 perron.x_s, false, cfg);
  const double lambda_d = lambda_dual(m.y_left, a_d, perron.x_s);
  return DualEigenPair{{perron.lambda_s, lambda_d}, perron.x_s,
                       dual_part_vector(m, a_d, lambda_d, perron.x_s, cfg)};
}

}  // namespace dualpf
