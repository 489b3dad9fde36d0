#pragma once

#include "dualpf/error.hpp"
#include "dualpf/tensor.hpp"

namespace dualpf {

struct SpectralConfig {
  /// Stop when (r_max - r_min) / r_max drops below this.
  double tol = 1e-12;
  int max_iter = 100000;
  /// Diagonal shift; any value > 0 makes the iteration converge for
  /// weakly irreducible (not necessarily primitive) tensors.
  double shift = 1.0;

  void validate() const;
};

/// Spectral radius and positive eigenvector with ||x_s||_m = 1.
struct PerronPair {
  double lambda_s = 0.0;
  Vector x_s;
  int iterations = 0;
  /// Relative Collatz-Wielandt gap at termination.
  double gap = 0.0;
};

/// Thrown when max_iter runs out; carries the last iterate.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(PerronPair best, const std::string& what)
      : Error(ErrorKind::NoConvergence, what), best_(std::move(best)) {}

  const PerronPair& best() const noexcept { return best_; }

 private:
  PerronPair best_;
};

/// Shifted power iteration
///   y = T x^(m-1) + shift * x^[m-1],  x <- y^[1/(m-1)] / ||.||_m
/// with the ratios y_i / x_i^(m-1) bracketing rho(T) + shift.
PerronPair perron_pair(const SparseSymTensor& t, const SpectralConfig& cfg = {});

/// ||T x^(m-1) - lambda x^[m-1]||_inf
double eigen_residual(const SparseSymTensor& t, double lambda, const Vector& x);

}  // namespace dualpf
