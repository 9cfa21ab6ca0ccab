#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "baker/alphabet.hpp"
#include "baker/cutoff.hpp"
#include "baker/errors.hpp"
#include "baker/fup.hpp"
#include "baker/quantize.hpp"
#include "baker/spectral.hpp"

using namespace baker;

namespace {

// Each eigenvalue of either list with modulus above floor sits within tol of
// a distinct member of the other list. Eigenvalues near 0 of these
// non-normal matrices are ill-conditioned, hence the floor.
bool same_nonzero(const std::vector<cplx>& a, const std::vector<cplx>& b, double floor, double tol) {
  auto covered = [&](const std::vector<cplx>& from, const std::vector<cplx>& to) {
    std::vector<bool> used(to.size(), false);
    for (const auto& z : from) {
      if (std::abs(z) <= floor) continue;
      std::size_t best = to.size();
      double dist = tol;
      for (std::size_t j = 0; j < to.size(); ++j) {
        if (!used[j] && std::abs(z - to[j]) <= dist) {
          dist = std::abs(z - to[j]);
          best = j;
        }
      }
      if (best == to.size()) return false;
      used[best] = true;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace

TEST(Spectral, EigenvaluesMatchEigenSolver) {
  std::mt19937_64 gen(8);
  std::normal_distribution<double> d;
  CMatrix m(30, 30);
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = {d(gen), d(gen)};
  const auto got = eigenvalues_of(m);
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  const std::vector<cplx> ref(es.eigenvalues().begin(), es.eigenvalues().end());
  EXPECT_TRUE(same_nonzero(got, ref, 0.0, 1e-10));
}

TEST(Spectral, EigenCap) {
  Caps caps;
  caps.eig_dim = 4;
  EXPECT_THROW(eigenvalues_of(CMatrix::Identity(5, 5), caps), Error);
}

TEST(Spectral, ClosedUnitaryCase) {
  const auto map = build_map(Alphabet::create(2, {0, 1}), 3, CutoffSpec::sharp_one(), CutoffSpec::sharp_one());
  const auto s = eigenvalues(map);
  ASSERT_EQ(s.eigenvalues.size(), 8u);
  for (const auto& z : s.eigenvalues) EXPECT_NEAR(std::abs(z), 1.0, 1e-9);
  EXPECT_NEAR(spectral_radius(s), 1.0, 1e-9);
  EXPECT_EQ(counting(s, 0.0), 8u);
}

TEST(Spectral, RegressionRadiusMiddleThird) {
  const auto c = cutoff_tau(0.05);
  const auto trimmed = eigenvalues(build_trimmed(Alphabet::create(3, {0, 2}), 2, c, c));
  EXPECT_EQ(trimmed.source.dimension, 4u);
  EXPECT_NEAR(spectral_radius(trimmed), 0.573046546624938, 1e-12);
  const auto dense = eigenvalues(build_map(Alphabet::create(3, {0, 2}), 2, c, c));
  EXPECT_NEAR(spectral_radius(dense), 0.573046546624938, 1e-12);
}

TEST(Spectral, ZeroMatrixRadius) {
  const auto map = build_map(Alphabet::create(3, {0, 2}), 2, CutoffSpec::zero(), CutoffSpec::zero());
  EXPECT_EQ(spectral_radius(eigenvalues(map)), 0.0);
}

TEST(Spectral, TrimmingPreservesNonzeroSpectrum) {
  for (const auto& [a, k] : {std::pair{Alphabet::create(3, {0, 2}), 6}, std::pair{Alphabet::create(4, {1, 2}), 4},
                             std::pair{Alphabet::create(9, {3, 4, 5}), 3}, std::pair{Alphabet::create(6, {1, 4}), 3}}) {
    for (const auto& c : {cutoff_tau(0.05), cutoff_tau(0.3)}) {
      const auto dense = build_map(a, k, c, c);
      const auto full = eigenvalues(dense);
      const auto cut = eigenvalues(trim(dense));
      EXPECT_LE(cut.source.dimension, full.source.dimension);
      EXPECT_TRUE(same_nonzero(full.eigenvalues, cut.eigenvalues, 1e-3, 1e-8)) << a.to_string();
      EXPECT_LE(spectral_radius(full), 1.0 + 1e-8);
    }
  }
}

TEST(Spectral, CountingAndAnnulus) {
  const auto c = cutoff_tau(0.05);
  const auto s = eigenvalues(build_trimmed(Alphabet::create(4, {1, 2}), 4, c, c));
  std::size_t prev = 0;
  for (int i = 0; i <= 40; ++i) {
    const auto n = counting(s, i * 0.1);
    EXPECT_GE(n, prev);
    prev = n;
  }
  EXPECT_EQ(counting(s, 64.0), s.eigenvalues.size());
  EXPECT_EQ(counting(s, 2.0), static_cast<std::size_t>(std::count_if(
                                  s.eigenvalues.begin(), s.eigenvalues.end(),
                                  [](cplx z) { return std::abs(z) >= 1.0 / 16.0; })));
  EXPECT_LE(counting(s, 2.0), s.source.dimension);
  EXPECT_LE(s.source.dimension, 2u * 64u);
  EXPECT_EQ(annulus_count(s, 0.5, 10.0), s.eigenvalues.size());
}

TEST(Spectral, WeylExponent) {
  EXPECT_NEAR(weyl_exponent(0.6, 0.2), 0.6, 1e-15);
  EXPECT_NEAR(weyl_exponent(0.3, 0.2), 0.0, 1e-15);
  EXPECT_NEAR(weyl_exponent(0.3, 0.1), 0.0, 1e-15);
  EXPECT_NEAR(weyl_exponent(0.7737, 0.2), 0.7737, 1e-15);
  EXPECT_NEAR(weyl_exponent(0.5, 0.1), 0.2, 1e-15);
}

TEST(Spectral, WeylFitNeedsTwoLevels) {
  try {
    weyl_fit(Alphabet::create(3, {0, 2}), {3}, {0.5}, cutoff_tau(0.05));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateFit);
  }
}

TEST(Spectral, WeylFitSlopeOracle) {
  const auto a = Alphabet::create(4, {1, 2});
  const std::vector<int> levels{2, 3, 4};
  const auto fit = weyl_fit(a, levels, {0.3, 2.0}, cutoff_tau(0.05));
  ASSERT_EQ(fit.rows.size(), 2u);
  for (const auto& row : fit.rows) {
    ASSERT_EQ(row.counts.size(), 3u);
    std::vector<double> y;
    for (auto n : row.counts) y.push_back(std::log(double(n)) / std::log(4.0));
    const double xbar = 3.0, ybar = (y[0] + y[1] + y[2]) / 3.0;
    const double slope = (-(y[0] - ybar) + (y[2] - ybar)) / 2.0;
    EXPECT_NEAR(row.slope, slope, 1e-12);
    EXPECT_NEAR(row.intercept, ybar - slope * xbar, 1e-12);
    EXPECT_NEAR(row.bound, weyl_exponent(0.5, row.nu), 1e-15);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(row.counts[i], fit.dimensions[i]);
  }
}

TEST(Spectral, XRho) {
  const auto x = x_rho(Alphabet::create(3, {0, 2}), 2, 1.0);
  ASSERT_EQ(x.size(), 9u);
  for (std::uint64_t i = 0; i < 9; ++i) EXPECT_EQ(x[i], i);
  EXPECT_EQ(x_rho(Alphabet::create(2, {0, 1}), 4, 1.0).size(), 16u);
}

TEST(Spectral, PropagationDefects) {
  const auto c = cutoff_tau(0.05);
  const QuantumMap full(Alphabet::create(3, {0, 2}), 2, c, c);
  const auto d = propagation_defect(full, 1.0);
  EXPECT_NEAR(d.space_defect, 0.0, 1e-14);
  EXPECT_NEAR(d.fourier_defect, 0.0, 1e-14);

  const QuantumMap big(Alphabet::create(3, {0, 2}), 8, c, c);
  const auto e = propagation_defect(big, 0.5);
  EXPECT_EQ(e.power, 4);
  EXPECT_LT(e.space_defect, 1e-4);
  EXPECT_LT(e.fourier_defect, 1e-4);
  EXPECT_LE(e.space_defect, 1.0);

  const QuantumMap sharp(Alphabet::create(3, {0, 2}), 3, CutoffSpec::sharp_one(), CutoffSpec::sharp_one());
  EXPECT_THROW(propagation_defect(sharp, 0.5), Error);
  const QuantumMap mixed(Alphabet::create(3, {0, 2}), 3, cutoff_tau(0.05), cutoff_tau(0.1));
  EXPECT_THROW(propagation_defect(mixed, 0.5), Error);
}

TEST(Spectral, ResolventProbe) {
  const auto c = cutoff_tau(0.05);
  const auto map = build_map(Alphabet::create(3, {0, 2}), 3, c, c);
  const double far = resolvent_probe(map, {2.0, 0.0});
  EXPECT_LE(far, 1.0);
  EXPECT_GE(far, 1.0 / 3.0 - 1e-12);

  const auto s = eigenvalues(map);
  const auto top = *std::max_element(s.eigenvalues.begin(), s.eigenvalues.end(),
                                     [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
  try {
    resolvent_probe(map, top);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NearSingular);
  }
  EXPECT_THROW(resolvent_probe(build_trimmed(Alphabet::create(3, {0, 2}), 3, c, c), 0.5), Error);
}

// ||(B - lambda)^{-1}|| <= C N^{2 nu} on M^{-nu} <= |lambda| <= 1 with
// nu = beta_4 / 2, C fitted at k = 2 and checked at k = 3.
TEST(Spectral, ResolventGrowth) {
  const auto a = Alphabet::create(9, {3, 4, 5});
  const auto c = cutoff_tau(0.05);
  const double nu = 0.5 * (-std::log(r_norm(a, 4)) / (4.0 * std::log(9.0)));
  auto worst = [&](int k) {
    const auto map = build_map(a, k, c, c);
    const double r_min = std::pow(9.0, -nu);
    double w = 0.0;
    for (double r : {r_min, 0.5 * (r_min + 1.0), 1.0}) {
      for (int t = 0; t < 16; ++t) {
        w = std::max(w, resolvent_probe(map, std::polar(r, 2.0 * std::numbers::pi * (t + 0.5) / 16.0)));
      }
    }
    return w;
  };
  const double fitted = worst(2) / std::pow(81.0, 2.0 * nu);
  EXPECT_LE(worst(3), fitted * std::pow(729.0, 2.0 * nu));
}

TEST(Spectral, MatchSpectra) {
  const std::vector<cplx> a{{0.9, 0.0}, {0.0, 0.5}, {0.1, 0.0}};
  const auto same = match_spectra(a, a, 0.25);
  EXPECT_EQ(same.matched, 2u);
  EXPECT_EQ(same.max_distance, 0.0);

  const std::vector<cplx> b{{0.9, 1e-3}, {0.0, 0.5}, {0.3, 0.0}};
  const auto r = match_spectra(a, b, 0.25);
  // b's 0.3 must pair with a's 0.1
  EXPECT_NEAR(r.max_distance, 0.2, 1e-15);
}
