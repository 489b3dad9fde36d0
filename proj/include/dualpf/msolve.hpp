#pragma once

#include <string>
#include <vector>

#include "dualpf/types.hpp"

namespace dualpf {

struct MsolveConfig {
  /// Singular values below rank_tol * sigma_max count as zero.
  double rank_tol = 1e-10;
  /// Acceptable ||y^T M||_inf / ||M||_max for a left null vector.
  double null_tol = 1e-8;
  /// Acceptable |y^T b| / ||b||_2 for b to count as lying in R(M).
  double consistency_tol = 1e-8;
};

/// Singular irreducible M-matrix together with its positive null vectors.
struct MMatrix {
  Matrix entries;
  /// Right null vector (the Perron vector).
  Vector x_right;
  /// Positive left null vector with unit 2-norm.
  Vector y_left;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// Positive y with ||y||_2 = 1 and y^T M = 0. With `hint_symmetric` the answer
/// is x_s / ||x_s||_2 (checked, not solved for); otherwise it is solved from
/// M^T with the last coordinate pinned, which is well posed because every
/// proper principal submatrix of an irreducible singular M-matrix is nonsingular.
Vector left_null_vector(const Matrix& m, bool hint_symmetric, const Vector& x_s,
                        const MsolveConfig& cfg = {});

/// Attaches null vectors to M. Throws if the left null vector cannot be found.
MMatrix make_mmatrix(Matrix m, Vector x_right, bool hint_symmetric,
                     const MsolveConfig& cfg = {});

/// z = M^# b via the bordered system [[M, x],[y^T, 0]] [z; mu] = [b; 0].
/// Requires b in R(M): |y^T b| <= consistency_tol * max(||b||_2, scale), else
/// throws Error(Inconsistent). Pass the size of the terms b was formed from as
/// `scale` when b comes out of cancellation and may be pure rounding noise.
Vector group_apply(const MMatrix& m, const Vector& b, const MsolveConfig& cfg = {},
                   double scale = 0.0);

/// M^# = (M + P)^-1 - P with P = x y^T / (y^T x).
Matrix group_inverse(const MMatrix& m, const MsolveConfig& cfg = {});

/// {1}-inverse from the principal submatrix that omits `drop` (0-based):
/// its inverse embedded with a zero row and column at `drop`.
Matrix one_inverse_principal(const MMatrix& m, int drop, const MsolveConfig& cfg = {});

int numerical_rank(const Matrix& a, double rel_tol);

/// Unit right singular vector of the smallest singular value.
Vector smallest_singular_vector(const Matrix& a);

bool is_z_matrix(const Matrix& a);

/// Off-diagonal support graph strongly connected.
bool is_irreducible(const Matrix& a);

struct InvariantCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
};

/// Executable M-matrix checks: Z-pattern, irreducibility, both null vectors,
/// rank n-1, kernel direction, nonsingular (n-1) principal submatrices,
/// rank(M) = rank(M^2) and the three group-inverse identities.
std::vector<InvariantCheck> check_mmatrix(const MMatrix& m, const MsolveConfig& cfg = {});

}  // namespace dualpf
