#include "baker/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

namespace baker {

CVector seeded_unit_vector(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = cplx(normal(gen), normal(gen));
  v.normalize();
  return v;
}

NormEstimate lanczos_norm(const LinearMap& op, const LinearMap& adjoint, Eigen::Index dim,
                          const LanczosOptions& options) {
  NormEstimate result;
  if (dim == 0) {
    result.converged = true;
    return result;
  }
  const int budget = static_cast<int>(std::min<Eigen::Index>(dim, options.max_iter));

  CMatrix basis(dim, budget + 1);
  std::vector<double> alpha;
  std::vector<double> beta;
  basis.col(0) = seeded_unit_vector(dim, options.seed);

  for (int j = 0; j < budget; ++j) {
    CVector w = adjoint(op(basis.col(j)));
    const double a = basis.col(j).dot(w).real();
    alpha.push_back(a);
    // Two passes of classical Gram-Schmidt against the whole basis.
    for (int pass = 0; pass < 2; ++pass) {
      const CVector coeffs = basis.leftCols(j + 1).adjoint() * w;
      w.noalias() -= basis.leftCols(j + 1) * coeffs;
    }
    const double b = w.norm();

    const int m = j + 1;
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1))
                                : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const double theta = tri.eigenvalues()[m - 1];
    const double residual = b * std::abs(tri.eigenvectors()(m - 1, m - 1));

    result.value = std::sqrt(std::max(theta, 0.0));
    result.iterations = m;
    result.residual = theta > 0 ? residual / theta : 0.0;

    const double scale = std::max(theta, 1e-300);
    bool done = residual <= options.rel_tol * scale;
    if (!done && m > 1) {
      const double gap = theta - tri.eigenvalues()[m - 2];
      if (gap > 0 && residual * residual / gap <= options.rel_tol * scale && residual <= 1e-6 * scale) {
        done = true;
      }
    }
    // Invariant subspace found, or Krylov space exhausted.
    if (b <= 1e-14 * std::max(1.0, std::abs(a)) || m == dim) done = true;
    if (done) {
      result.converged = true;
      return result;
    }
    beta.push_back(b);
    basis.col(j + 1) = w / b;
  }
  return result;
}

NormEstimate power_norm(const LinearMap& op, const LinearMap& adjoint, Eigen::Index dim,
                        const PowerOptions& options) {
  NormEstimate result;
  if (dim == 0) {
    result.converged = true;
    return result;
  }
  CVector x = seeded_unit_vector(dim, options.seed);
  double previous = -1.0;
  for (int it = 1; it <= options.max_iter; ++it) {
    const CVector y = op(x);
    const double estimate = y.norm();
    result.value = estimate;
    result.iterations = it;
    if (estimate == 0.0) {
      result.converged = true;
      return result;
    }
    if (previous >= 0.0) {
      result.residual = std::abs(estimate - previous) / estimate;
      if (result.residual < options.rel_tol) {
        result.converged = true;
        return result;
      }
    }
    previous = estimate;
    CVector z = adjoint(y);
    const double zn = z.norm();
    if (zn == 0.0) {
      result.converged = true;
      return result;
    }
    x = z / zn;
  }
  return result;
}

}  // namespace baker
