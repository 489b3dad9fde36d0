#include "dualpf/msolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "dualpf/digraph.hpp"
#include "dualpf/error.hpp"

namespace dualpf {

namespace {

double max_abs(const Matrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

void require_square(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "expected a non-empty square matrix");
  }
}

// Principal submatrix without row/column `drop`.
Matrix principal_minor(const Matrix& a, int drop) {
  const int n = static_cast<int>(a.rows());
  Matrix out(n - 1, n - 1);
  for (int i = 0, r = 0; i < n; ++i) {
    if (i == drop) continue;
    for (int j = 0, c = 0; j < n; ++j) {
      if (j == drop) continue;
      out(r, c++) = a(i, j);
    }
    ++r;
  }
  return out;
}

Eigen::FullPivLU<Matrix> checked_lu(const Matrix& a, double rel_tol) {
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(rel_tol);
  return lu;
}

}  // namespace

Vector left_null_vector(const Matrix& m, bool hint_symmetric, const Vector& x_s,
                        const MsolveConfig& cfg) {
  require_square(m);
  const int n = static_cast<int>(m.rows());
  const double scale = std::max(max_abs(m), 1e-300);

  Vector y;
  if (hint_symmetric) {
    if (x_s.size() != n) throw Error(ErrorKind::DimensionMismatch, "x_s length mismatch");
    y = x_s / x_s.norm();
  } else if (n == 1) {
    y = Vector::Ones(1);
  } else {
    // Pin y_n = 1 and solve the leading (n-1) rows of M^T y = 0.
    const Matrix mt = m.transpose();
    auto lu = checked_lu(mt.topLeftCorner(n - 1, n - 1), cfg.rank_tol);
    if (!lu.isInvertible()) {
      throw Error(ErrorKind::SubmatrixSingular, "leading principal submatrix is singular");
    }
    y.resize(n);
    y.head(n - 1) = lu.solve(-mt.topRightCorner(n - 1, 1));
    y[n - 1] = 1.0;
    y /= y.norm();
  }

  const double residual = (m.transpose() * y).lpNorm<Eigen::Infinity>() / scale;
  if (!(residual <= cfg.null_tol)) {
    throw Error(ErrorKind::NotSingular,
                "no left null vector (relative residual " + std::to_string(residual) + ")");
  }
  if (y.sum() < 0) y = -y;
  if (!(y.minCoeff() > 0.0)) {
    throw Error(ErrorKind::NotPositive, "left null vector changes sign");
  }
  return y;
}

MMatrix make_mmatrix(Matrix m, Vector x_right, bool hint_symmetric, const MsolveConfig& cfg) {
  require_square(m);
  if (x_right.size() != m.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "right null vector length mismatch");
  }
  Vector y = left_null_vector(m, hint_symmetric, x_right, cfg);
  return MMatrix{std::move(m), std::move(x_right), std::move(y)};
}

Vector group_apply(const MMatrix& mm, const Vector& b, const MsolveConfig& cfg, double scale) {
  const int n = mm.size();
  if (b.size() != n) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  const double bnorm = std::max(b.norm(), scale);
  if (bnorm == 0.0) return Vector::Zero(n);
  const double leak = std::abs(mm.y_left.dot(b)) / bnorm;
  if (!(leak <= cfg.consistency_tol)) {
    throw Error(ErrorKind::Inconsistent,
                "right-hand side is not in the range of M (|y^T b|/||b|| = " +
                    std::to_string(leak) + ")");
  }

  Matrix bordered = Matrix::Zero(n + 1, n + 1);
  bordered.topLeftCorner(n, n) = mm.entries;
  bordered.topRightCorner(n, 1) = mm.x_right;
  bordered.bottomLeftCorner(1, n) = mm.y_left.transpose();
  auto lu = checked_lu(bordered, cfg.rank_tol);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularBordered, "bordered system is singular");

  Vector rhs = Vector::Zero(n + 1);
  rhs.head(n) = b;
  Vector sol = lu.solve(rhs);
  return sol.head(n);
}

Matrix group_inverse(const MMatrix& mm, const MsolveConfig& cfg) {
  const Matrix p = mm.x_right * mm.y_left.transpose() / mm.y_left.dot(mm.x_right);
  auto lu = checked_lu(mm.entries + p, cfg.rank_tol);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularBordered, "M + P is singular");
  return lu.inverse() - p;
}

Matrix one_inverse_principal(const MMatrix& mm, int drop, const MsolveConfig& cfg) {
  const int n = mm.size();
  if (drop < 0 || drop >= n) throw Error(ErrorKind::InvalidInput, "drop index out of range");
  Matrix g = Matrix::Zero(n, n);
  if (n == 1) return g;
  auto lu = checked_lu(principal_minor(mm.entries, drop), cfg.rank_tol);
  if (!lu.isInvertible()) {
    throw Error(ErrorKind::SubmatrixSingular,
                "principal submatrix without index " + std::to_string(drop + 1) + " is singular");
  }
  const Matrix inv = lu.inverse();
  for (int i = 0, r = 0; i < n; ++i) {
    if (i == drop) continue;
    for (int j = 0, c = 0; j < n; ++j) {
      if (j == drop) continue;
      g(i, j) = inv(r, c++);
    }
    ++r;
  }
  return g;
}

int numerical_rank(const Matrix& a, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const Vector& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  return static_cast<int>((s.array() > rel_tol * s[0]).count());
}

Vector smallest_singular_vector(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().col(a.cols() - 1);
}

bool is_z_matrix(const Matrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j && a(i, j) > 0.0) return false;
    }
  }
  return true;
}

bool is_irreducible(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 1) return true;
  std::vector<std::vector<int>> succ(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && a(i, j) != 0.0) succ[i].push_back(j);
    }
  }
  return is_strongly_connected(succ);
}

std::vector<InvariantCheck> check_mmatrix(const MMatrix& mm, const MsolveConfig& cfg) {
  const Matrix& m = mm.entries;
  const int n = mm.size();
  const double norm = max_abs(m);
  std::vector<InvariantCheck> out;
  auto add = [&](std::string name, double value, double threshold) {
    out.push_back({std::move(name), value <= threshold, value, threshold});
  };

  double worst_offdiag = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) worst_offdiag = std::max(worst_offdiag, m(i, j));
    }
  }
  add("z_matrix", worst_offdiag, 0.0);
  add("irreducible", is_irreducible(m) ? 0.0 : 1.0, 0.0);
  add("right_null", (m * mm.x_right).lpNorm<Eigen::Infinity>(), 1e-10);
  add("left_null", (m.transpose() * mm.y_left).lpNorm<Eigen::Infinity>(), 1e-10);
  add("positive_null_vectors",
      (mm.x_right.minCoeff() > 0.0 && mm.y_left.minCoeff() > 0.0) ? 0.0 : 1.0, 0.0);
  add("rank_n_minus_1", std::abs(numerical_rank(m, cfg.rank_tol) - (n - 1)), 0.0);

  const Vector k = smallest_singular_vector(m);
  const Vector xhat = mm.x_right / mm.x_right.norm();
  const double kernel_gap = std::min((k - xhat).lpNorm<Eigen::Infinity>(),
                                     (k + xhat).lpNorm<Eigen::Infinity>());
  add("kernel_span_x", kernel_gap, 1e-9);

  double singular_minors = 0.0;
  for (int d = 0; d < n && n > 1; ++d) {
    auto lu = checked_lu(principal_minor(m, d), cfg.rank_tol);
    if (!lu.isInvertible()) singular_minors += 1.0;
  }
  add("principal_submatrices_nonsingular", singular_minors, 0.0);

  const int r1 = numerical_rank(m, cfg.rank_tol);
  Eigen::JacobiSVD<Matrix> svd2(m * m);
  const Vector& s2 = svd2.singularValues();
  const int r2 = static_cast<int>((s2.array() > 1e-8 * norm * norm).count());
  add("rank_m_equals_rank_m2", std::abs(r1 - r2), 0.0);

  try {
    const Matrix x = group_inverse(mm, cfg);
    add("group_mxm", (m * x * m - m).cwiseAbs().maxCoeff(), 1e-9);
    add("group_xmx", (x * m * x - x).cwiseAbs().maxCoeff(), 1e-9);
    add("group_commute", (m * x - x * m).cwiseAbs().maxCoeff(), 1e-9);
  } catch (const Error&) {
    add("group_inverse_exists", 1.0, 0.0);
  }
  return out;
}

}  // namespace dualpf
