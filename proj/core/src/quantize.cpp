#include "baker/quantize.hpp"

#include <random>

#include "baker/dft.hpp"
#include "baker/errors.hpp"
#include "baker/modular.hpp"

namespace baker {

QuantumMap::QuantumMap(const Alphabet& a, int k, const CutoffSpec& left, const CutoffSpec& right)
    : alphabet_(a), level_(k), n_(modulus_for(a, k)), block_(0), left_(left), right_(right) {
  if (k < 1) raise(Errc::OutOfRange, "level k must be at least 1");
  block_ = n_ / static_cast<std::uint64_t>(a.base());
  if (n_ > (std::uint64_t{1} << 31)) raise(Errc::CapExceeded, "N too large for a vector operator");
  chi_left_ = discretize(left, static_cast<int>(block_));
  chi_right_ = discretize(right, static_cast<int>(block_));
}

const CMatrix& QuantumMap::active() const {
  if (trimmed_) return trimmed_->matrix;
  if (dense_) return *dense_;
  raise(Errc::NotAssembled, "map has no assembled matrix");
}

std::vector<std::size_t> QuantumMap::support() const {
  std::vector<std::size_t> out;
  bool left_nonzero = false;
  for (double x : chi_left_) left_nonzero = left_nonzero || x != 0.0;
  if (!left_nonzero) return out;
  for (int a : alphabet_.symbols()) {
    for (std::uint64_t l = 0; l < block_; ++l) {
      if (chi_right_[l] != 0.0) out.push_back(static_cast<std::size_t>(a * block_ + l));
    }
  }
  return out;
}

CVector QuantumMap::column(std::size_t l) const {
  CVector w = CVector::Zero(static_cast<Eigen::Index>(n_));
  const std::uint64_t a = l / block_;
  const std::uint64_t lc = l % block_;
  if (!alphabet_.contains(static_cast<int>(a)) || chi_right_[lc] == 0.0) return w;
  const double scale = chi_right_[lc] / std::sqrt(static_cast<double>(block_));
  for (std::uint64_t m = 0; m < block_; ++m) {
    if (chi_left_[m] == 0.0) continue;
    w[static_cast<Eigen::Index>(a * block_ + m)] =
        chi_left_[m] * scale * unit_root(mul_mod(m, lc, block_), block_);
  }
  return dft_apply(w, /*inverse=*/true);
}

CVector QuantumMap::apply(const CVector& v) const {
  if (static_cast<std::uint64_t>(v.size()) != n_) {
    raise(Errc::InvalidArgument, "vector length does not match N");
  }
  const auto nb = static_cast<Eigen::Index>(block_);
  CVector w = CVector::Zero(v.size());
  for (int a : alphabet_.symbols()) {
    auto seg = w.segment(a * nb, nb);
    for (Eigen::Index m = 0; m < nb; ++m) seg[m] = v[a * nb + m] * chi_right_[static_cast<std::size_t>(m)];
    dft_inplace(std::span<cplx>(seg.data(), block_), false);
    for (Eigen::Index m = 0; m < nb; ++m) seg[m] *= chi_left_[static_cast<std::size_t>(m)];
  }
  dft_inplace(std::span<cplx>(w.data(), n_), true);
  return w;
}

CVector QuantumMap::apply_adjoint(const CVector& v) const {
  if (static_cast<std::uint64_t>(v.size()) != n_) {
    raise(Errc::InvalidArgument, "vector length does not match N");
  }
  const auto nb = static_cast<Eigen::Index>(block_);
  CVector u = dft_apply(v, false);
  CVector w = CVector::Zero(v.size());
  for (int a : alphabet_.symbols()) {
    auto seg = w.segment(a * nb, nb);
    for (Eigen::Index m = 0; m < nb; ++m) seg[m] = u[a * nb + m] * chi_left_[static_cast<std::size_t>(m)];
    dft_inplace(std::span<cplx>(seg.data(), block_), true);
    for (Eigen::Index m = 0; m < nb; ++m) seg[m] *= chi_right_[static_cast<std::size_t>(m)];
  }
  return w;
}

QuantumMap build_map(const Alphabet& a, int k, const CutoffSpec& left, const CutoffSpec& right,
                     const Caps& caps) {
  QuantumMap map(a, k, left, right);
  if (map.n_ > caps.dense_n) raise(Errc::CapExceeded, "N exceeds the dense assembly cap");
  const auto n = static_cast<Eigen::Index>(map.n_);
  CMatrix dense = CMatrix::Zero(n, n);
  for (std::size_t l : map.support()) dense.col(static_cast<Eigen::Index>(l)) = map.column(l);
  map.dense_ = std::move(dense);
  return map;
}

QuantumMap build_trimmed(const Alphabet& a, int k, const CutoffSpec& left, const CutoffSpec& right,
                         const Caps& caps) {
  QuantumMap map(a, k, left, right);
  TrimmedMatrix t;
  t.kept = map.support();
  const auto dim = static_cast<Eigen::Index>(t.kept.size());
  if (t.kept.size() > caps.dense_n) raise(Errc::CapExceeded, "trimmed dimension exceeds the dense cap");
  t.matrix.resize(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const CVector col = map.column(t.kept[static_cast<std::size_t>(c)]);
    for (Eigen::Index r = 0; r < dim; ++r) {
      t.matrix(r, c) = col[static_cast<Eigen::Index>(t.kept[static_cast<std::size_t>(r)])];
    }
  }
  map.trimmed_ = std::move(t);
  return map;
}

QuantumMap trim(const QuantumMap& m) {
  if (!m.dense_) raise(Errc::NotAssembled, "trim needs the dense matrix");
  const CMatrix& d = *m.dense_;
  TrimmedMatrix t;
  for (Eigen::Index c = 0; c < d.cols(); ++c) {
    if (d.col(c).cwiseAbs().maxCoeff() != 0.0) t.kept.push_back(static_cast<std::size_t>(c));
  }
  const auto dim = static_cast<Eigen::Index>(t.kept.size());
  t.matrix.resize(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      t.matrix(r, c) = d(static_cast<Eigen::Index>(t.kept[static_cast<std::size_t>(r)]),
                         static_cast<Eigen::Index>(t.kept[static_cast<std::size_t>(c)]));
    }
  }
  QuantumMap out = m;
  out.trimmed_ = std::move(t);
  return out;
}

QuantumMap perturb(const QuantumMap& m, double rel, std::uint64_t seed) {
  const CMatrix& b = m.active();
  if (rel < 0.0) raise(Errc::OutOfRange, "relative perturbation size must be nonnegative");

  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::MatrixXd q(b.rows(), b.cols());
  for (Eigen::Index c = 0; c < q.cols(); ++c) {
    for (Eigen::Index r = 0; r < q.rows(); ++r) q(r, c) = uniform(gen);
  }

  const PowerOptions opts{1e-6, 2000, seed};
  double epsilon = 0.0;
  if (rel > 0.0 && b.size() > 0) {
    const CMatrix qc = q.cast<cplx>();
    const auto qn = power_norm([&](const CVector& x) -> CVector { return qc * x; },
                               [&](const CVector& y) -> CVector { return qc.adjoint() * y; },
                               q.cols(), opts);
    const auto bn = power_norm([&](const CVector& x) -> CVector { return b * x; },
                               [&](const CVector& y) -> CVector { return b.adjoint() * y; },
                               b.cols(), opts);
    if (!qn.converged || !bn.converged) raise(Errc::NonConvergence, "power iteration did not converge");
    epsilon = rel * bn.value / qn.value;
  }

  QuantumMap out = m;
  CMatrix perturbed = b + epsilon * q.cast<cplx>();
  if (out.trimmed_) {
    out.trimmed_->matrix = std::move(perturbed);
    out.dense_.reset();
  } else {
    out.dense_ = std::move(perturbed);
  }
  out.perturbation_ = Perturbation{rel, seed, epsilon, "mt19937_64"};
  return out;
}

}  // namespace baker
