#include "baker/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <tuple>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/LU>

#include "baker/dft.hpp"
#include "baker/errors.hpp"

namespace baker {

std::vector<cplx> eigenvalues_of(const CMatrix& m, const Caps& caps) {
  if (m.rows() != m.cols()) raise(Errc::InvalidArgument, "eigenvalues need a square matrix");
  if (static_cast<std::size_t>(m.rows()) > caps.eig_dim) {
    raise(Errc::CapExceeded, "matrix dimension exceeds the eigensolver cap");
  }
  const auto n = static_cast<lapack_int>(m.rows());
  if (n == 0) return {};
  CMatrix work = m;
  std::vector<cplx> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n, w.data(),
                                        nullptr, 1, nullptr, 1);
  if (info != 0) raise(Errc::SolverFailure, "zgeev failed with info " + std::to_string(info));
  return w;
}

Spectrum eigenvalues(const QuantumMap& m, const Caps& caps) {
  Spectrum s;
  const CMatrix& active = m.active();
  s.eigenvalues = eigenvalues_of(active, caps);
  s.source.base = m.alphabet().base();
  s.source.symbols = m.alphabet().symbols_string();
  s.source.level = m.level();
  s.source.left_cutoff = m.left().name();
  s.source.right_cutoff = m.right().name();
  s.source.trimmed = m.trimmed().has_value();
  s.source.dimension = static_cast<std::size_t>(active.rows());
  s.source.perturbation = m.perturbation();
  return s;
}

double spectral_radius(const Spectrum& s) {
  double r = 0.0;
  for (const cplx& z : s.eigenvalues) r = std::max(r, std::abs(z));
  return r;
}

std::size_t counting(const Spectrum& s, double nu) {
  if (nu < 0.0) raise(Errc::OutOfRange, "nu must be nonnegative");
  // relative slack so eigenvalues of unit modulus up to roundoff count at nu = 0
  const double threshold = std::pow(static_cast<double>(s.source.base), -nu) * (1.0 - 1e-10);
  return static_cast<std::size_t>(std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                                [&](const cplx& z) { return std::abs(z) >= threshold; }));
}

std::size_t annulus_count(const Spectrum& s, double radius, double width) {
  return static_cast<std::size_t>(
      std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                    [&](const cplx& z) { return std::abs(std::abs(z) - radius) < width; }));
}

double weyl_exponent(double delta, double nu) {
  return std::max(0.0, std::min(2.0 * nu + 2.0 * delta - 1.0, delta));
}

WeylFit weyl_fit_spectra(const Alphabet& a, const std::vector<int>& levels,
                         const std::vector<Spectrum>& spectra, const std::vector<double>& nus) {
  if (levels.size() < 2) raise(Errc::DegenerateFit, "a Weyl fit needs at least two levels");
  if (spectra.size() != levels.size()) raise(Errc::InvalidArgument, "one spectrum per level is required");
  WeylFit fit{a, dimension(a), levels, {}, {}};
  for (const auto& s : spectra) fit.dimensions.push_back(s.source.dimension);
  const double log_m = std::log(static_cast<double>(a.base()));

  for (double nu : nus) {
    WeylRow row;
    row.nu = nu;
    row.bound = weyl_exponent(fit.delta, nu);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const std::size_t c = counting(spectra[i], nu);
      row.counts.push_back(c);
      if (c == 0) {
        row.log_counts.push_back(std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      const double x = levels[i];
      const double y = std::log(static_cast<double>(c)) / log_m;
      row.log_counts.push_back(y);
      ++row.usable;
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const auto n = static_cast<double>(row.usable);
    const double denom = n * sxx - sx * sx;
    if (row.usable < 2 || denom == 0.0) {
      row.flagged = true;
      row.slope = std::numeric_limits<double>::quiet_NaN();
      row.intercept = std::numeric_limits<double>::quiet_NaN();
    } else {
      row.slope = (n * sxy - sx * sy) / denom;
      row.intercept = (sy - row.slope * sx) / n;
    }
    fit.rows.push_back(row);
  }
  return fit;
}

WeylFit weyl_fit(const Alphabet& a, const std::vector<int>& levels, const std::vector<double>& nus,
                 const CutoffSpec& cutoff, const Caps& caps) {
  if (levels.size() < 2) raise(Errc::DegenerateFit, "a Weyl fit needs at least two levels");
  std::vector<Spectrum> spectra;
  for (int k : levels) spectra.push_back(eigenvalues(build_trimmed(a, k, cutoff, cutoff, caps), caps));
  return weyl_fit_spectra(a, levels, spectra, nus);
}

std::vector<std::uint64_t> x_rho(const Alphabet& a, int k, double rho, const Caps& caps) {
  if (!(rho > 0.0 && rho <= 1.0)) raise(Errc::OutOfRange, "rho must lie in (0, 1]");
  const CantorSet c = cantor_set(a, k, caps);
  const std::uint64_t n = c.modulus;
  if (n > caps.cantor_points) raise(Errc::CapExceeded, "N exceeds the point cap for x_rho");
  const auto reach = static_cast<std::uint64_t>(
      std::floor(2.0 * std::pow(static_cast<double>(n), 1.0 - rho) + 1e-9));
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  if (2 * reach + 1 >= n) {
    std::fill(in.begin(), in.end(), 1);
  } else {
    for (std::uint64_t p : c.points) {
      for (std::uint64_t d = 0; d <= 2 * reach; ++d) in[(p + n - reach + d) % n] = 1;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (in[j]) out.push_back(j);
  }
  return out;
}

Defects propagation_defect(const QuantumMap& m, double rho, const Caps& caps) {
  const bool smooth = m.left().kind() == CutoffSpec::Kind::Smooth && m.left() == m.right();
  if (!smooth) raise(Errc::NotSmoothCutoff, "propagation defects need equal smooth cutoffs");
  const auto xs = x_rho(m.alphabet(), m.level(), rho, caps);
  const auto n = static_cast<Eigen::Index>(m.dimension());
  Eigen::VectorXd outside = Eigen::VectorXd::Ones(n);
  for (std::uint64_t j : xs) outside[static_cast<Eigen::Index>(j)] = 0.0;

  Defects d;
  d.power = static_cast<int>(std::ceil(rho * m.level() - 1e-12));
  auto forward = [&](CVector v) {
    for (int i = 0; i < d.power; ++i) v = m.apply(v);
    return v;
  };
  auto backward = [&](CVector v) {
    for (int i = 0; i < d.power; ++i) v = m.apply_adjoint(v);
    return v;
  };
  // I - F^* 1_X F, an orthogonal projection.
  auto fourier_cut = [&](const CVector& v) {
    CVector f = dft_apply(v, false);
    f = f.cwiseProduct(outside.cast<cplx>());
    return dft_apply(f, true);
  };

  const PowerOptions opts{1e-3, 40, 0x5eed};
  d.space_defect = power_norm([&](const CVector& v) { return forward(v.cwiseProduct(outside.cast<cplx>())); },
                              [&](const CVector& y) { return CVector(backward(y).cwiseProduct(outside.cast<cplx>())); },
                              n, opts)
                       .value;
  d.fourier_defect = power_norm([&](const CVector& v) { return fourier_cut(forward(v)); },
                                [&](const CVector& y) { return backward(fourier_cut(y)); }, n, opts)
                         .value;
  return d;
}

double resolvent_probe(const QuantumMap& m, cplx lambda) {
  if (!m.dense()) raise(Errc::NotAssembled, "resolvent probe needs the dense matrix");
  const CMatrix& b = *m.dense();
  CMatrix shifted = b;
  shifted.diagonal().array() -= lambda;
  const Eigen::PartialPivLU<CMatrix> lu(shifted);
  if (!(lu.rcond() > 1e-13)) raise(Errc::NearSingular, "lambda is numerically an eigenvalue");

  auto solve = [&](const CVector& x) -> CVector {
    CVector y = lu.solve(x);
    const double residual = (shifted * y - x).norm();
    if (!(residual <= 1e-8 * std::max(1.0, x.norm()) * std::max(1.0, y.norm()))) {
      raise(Errc::NearSingular, "resolvent solve residual too large");
    }
    return y;
  };
  auto solve_adjoint = [&](const CVector& x) -> CVector { return lu.adjoint().solve(x); };
  const auto est = power_norm(solve, solve_adjoint, b.cols(), PowerOptions{1e-6, 500, 0x5eed});
  return est.value;
}

MatchReport match_spectra(const std::vector<cplx>& first, const std::vector<cplx>& second,
                          double r_min) {
  MatchReport report;
  auto one_way = [&](const std::vector<cplx>& from, const std::vector<cplx>& to) {
    std::vector<std::size_t> sources;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (std::abs(from[i]) > r_min) sources.push_back(i);
    }
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    pairs.reserve(sources.size() * to.size());
    for (std::size_t s = 0; s < sources.size(); ++s) {
      for (std::size_t t = 0; t < to.size(); ++t) {
        pairs.emplace_back(std::abs(from[sources[s]] - to[t]), s, t);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<char> used_s(sources.size(), 0);
    std::vector<char> used_t(to.size(), 0);
    std::vector<double> assigned(sources.size(), std::numeric_limits<double>::infinity());
    std::size_t left = sources.size();
    for (const auto& [dist, s, t] : pairs) {
      if (left == 0) break;
      if (used_s[s] || used_t[t]) continue;
      used_s[s] = used_t[t] = 1;
      assigned[s] = dist;
      --left;
    }
    for (std::size_t s = 0; s < sources.size(); ++s) {
      report.max_distance = std::max(report.max_distance, assigned[s]);
      // runner-up among all candidates in `to`
      double best = std::numeric_limits<double>::infinity();
      double second_best = best;
      for (const cplx& z : to) {
        const double d = std::abs(from[sources[s]] - z);
        if (d < best) {
          second_best = best;
          best = d;
        } else if (d < second_best) {
          second_best = d;
        }
      }
      if (second_best < 2.0 * assigned[s]) ++report.ambiguous;
    }
    report.matched = std::max(report.matched, sources.size());
  };
  one_way(first, second);
  one_way(second, first);
  return report;
}

}  // namespace baker
