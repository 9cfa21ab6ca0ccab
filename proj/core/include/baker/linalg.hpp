#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace baker {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// y = Op x for a linear operator given only by its action.
using LinearMap = std::function<CVector(const CVector&)>;

struct LanczosOptions {
  double rel_tol = 1e-12;  // residual of the Gram eigenpair, relative to the Ritz value
  int max_iter = 400;
  std::uint64_t seed = 0x5eed;
};

struct NormEstimate {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;  // relative
  bool converged = false;
};

/// Largest singular value of Op via Lanczos with full reorthogonalisation on
/// the Gram operator Op^* Op. The Krylov space is exhausted at `dim`
/// iterations, in which case the value is exact up to rounding.
NormEstimate lanczos_norm(const LinearMap& op, const LinearMap& adjoint, Eigen::Index dim,
                          const LanczosOptions& options = {});

struct PowerOptions {
  double rel_tol = 1e-6;  // stop when the estimate changes by less than this
  int max_iter = 500;
  std::uint64_t seed = 0x5eed;
};

/// Plain power iteration on Op^* Op; the estimate is ||Op x|| for the
/// current unit vector x, so it never overshoots the true norm.
NormEstimate power_norm(const LinearMap& op, const LinearMap& adjoint, Eigen::Index dim,
                        const PowerOptions& options = {});

/// Deterministic unit-norm complex start vector.
CVector seeded_unit_vector(Eigen::Index dim, std::uint64_t seed);

}  // namespace baker
