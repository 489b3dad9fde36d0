#include "dualpf/spectral.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dualpf {

void SpectralConfig::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "spectral tol must be > 0");
  if (max_iter < 1) throw Error(ErrorKind::InvalidInput, "max_iter must be >= 1");
  if (!(shift >= 0.0)) throw Error(ErrorKind::InvalidInput, "shift must be >= 0");
}

double eigen_residual(const SparseSymTensor& t, double lambda, const Vector& x) {
  return (tensor_apply(t, x) - lambda * entrywise_pow(x, t.order() - 1)).lpNorm<Eigen::Infinity>();
}

PerronPair perron_pair(const SparseSymTensor& t, const SpectralConfig& cfg) {
  cfg.validate();
  if (!t.nonnegative()) {
    throw Error(ErrorKind::NotIrreducible, "tensor has negative entries");
  }
  if (!is_weakly_irreducible(t)) {
    throw Error(ErrorKind::NotIrreducible, "tensor is not weakly irreducible");
  }

  const int m = t.order();
  const int n = t.dim();
  const double root = 1.0 / (m - 1);

  Vector x = Vector::Constant(n, 1.0);
  x /= m_norm(x, m);

  PerronPair out;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    const Vector xp = entrywise_pow(x, m - 1);
    const Vector y = tensor_apply(t, x) + cfg.shift * xp;

    double r_min = std::numeric_limits<double>::infinity();
    double r_max = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = y[i] / xp[i];
      r_min = std::min(r_min, r);
      r_max = std::max(r_max, r);
    }

    Vector next(n);
    for (int i = 0; i < n; ++i) next[i] = std::pow(y[i], root);
    next /= m_norm(next, m);

    out.iterations = iter;
    out.gap = (r_max - r_min) / r_max;
    out.lambda_s = 0.5 * (r_min + r_max) - cfg.shift;
    if (out.gap < cfg.tol) {
      // The bracket belongs to x, not to the freshly normalized iterate.
      out.x_s = x;
      return out;
    }
    x = std::move(next);
  }
  out.x_s = x;
  throw NoConvergenceError(out, "power iteration did not converge in " +
                                    std::to_string(cfg.max_iter) +
                                    " iterations (gap " + std::to_string(out.gap) + ")");
}

}  // namespace dualpf
