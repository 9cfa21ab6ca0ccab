#include <gtest/gtest.h>

#include <random>

#include "baker/additive.hpp"
#include "baker/alphabet.hpp"
#include "baker/errors.hpp"
#include "oracles.hpp"

using namespace baker;

namespace {

std::vector<int> to_vec(const Alphabet& a) { return {a.symbols().begin(), a.symbols().end()}; }

}  // namespace

TEST(Additive, EnergyExamples) {
  const auto a = Alphabet::create(3, {0, 2});
  EXPECT_EQ(energy(a, 0), 6);
  EXPECT_EQ(energy(a, 2), 4);
  const auto single = Alphabet::create(5, {3});
  EXPECT_EQ(energy(single, 0), 1);
  for (int l = -8; l <= 8; ++l) {
    if (l != 0) {
      EXPECT_EQ(energy(single, l), 0);
    }
  }
}

TEST(Additive, EnergyMatchesQuadrupleOracle) {
  for (int m = 2; m <= 8; ++m) {
    for (int size = 1; size <= m; ++size) {
      for (const auto& a : oracle::subsets(m, size)) {
        const auto p = profile(a);
        for (int l = -(2 * m - 2); l <= 2 * m - 2; ++l) {
          ASSERT_EQ(p.energy_at(l), oracle::energy(to_vec(a), l)) << a.to_string() << " l=" << l;
        }
      }
    }
  }
}

TEST(Additive, ProfileOfMiddleThird) {
  const auto p = profile(Alphabet::create(3, {0, 2}));
  EXPECT_EQ(p.matrix[0][0], 5);
  EXPECT_EQ(p.matrix[0][1], 0);
  EXPECT_EQ(p.matrix[1][0], 0);
  EXPECT_EQ(p.matrix[1][1], 6);
  EXPECT_DOUBLE_EQ(p.rho, 6.0);
  ASSERT_TRUE(p.gamma.has_value());
  EXPECT_NEAR(*p.gamma, std::log(4.0 / 3.0) / std::log(3.0), 1e-14);
  EXPECT_NEAR(*p.gamma, 0.2619, 1e-4);
  EXPECT_EQ(p.energies_mod[0], 6);
  EXPECT_EQ(p.energies_mod[1], 5);
}

TEST(Additive, ProfileOfSingleton) {
  const auto p = profile(Alphabet::create(4, {1}));
  EXPECT_EQ(p.matrix[0][0], 0);
  EXPECT_EQ(p.matrix[0][1], 0);
  EXPECT_EQ(p.matrix[1][0], 0);
  EXPECT_EQ(p.matrix[1][1], 1);
  EXPECT_DOUBLE_EQ(p.rho, 1.0);
  EXPECT_FALSE(p.gamma.has_value());
}

// Portraits count differences; the modular ones fold them, and the energies
// are sums of squared portraits.
TEST(Additive, ProfileIdentities) {
  for (int m = 2; m <= 12; ++m) {
    for (int size = 1; size <= std::min(m, 5); ++size) {
      for (const auto& a : oracle::subsets(m, size)) {
        const auto p = profile(a);
        const auto s = to_vec(a);
        std::int64_t total = 0;
        for (int j = -(m - 1); j <= m - 1; ++j) {
          std::int64_t count = 0;
          for (int x : s)
            for (int y : s) count += (x - y == j);
          ASSERT_EQ(p.portrait_at(j), count);
          total += count;
        }
        EXPECT_EQ(total, std::int64_t{size} * size);
        for (int j = 0; j < m; ++j) {
          EXPECT_EQ(p.portrait_mod[j], p.portrait_at(j) + (j > 0 ? p.portrait_at(j - m) : 0));
        }
        std::int64_t e0 = 0;
        for (int j = -(m - 1); j <= m - 1; ++j) e0 += p.portrait_at(j) * p.portrait_at(j);
        EXPECT_EQ(p.energy_at(0), e0);
        for (int l = 0; l < m; ++l) {
          std::int64_t folded = 0;
          for (int t = -(2 * m - 2); t <= 2 * m - 2; ++t) {
            if (((t - l) % m + m) % m == 0) folded += p.energy_at(t);
          }
          EXPECT_EQ(p.energies_mod[l], folded) << a.to_string();
        }
        EXPECT_EQ(p.matrix[0][0], p.energy_at(m - 1) + p.energy_at(m + 1));
        EXPECT_EQ(p.matrix[0][1], 2 * p.energy_at(m));
        EXPECT_EQ(p.matrix[1][0], p.energy_at(1));
        EXPECT_EQ(p.matrix[1][1], p.energy_at(0));
      }
    }
  }
}

TEST(Additive, RhoStrictlyBelowCube) {
  for (int m = 3; m <= 12; ++m) {
    const int max_size = (2 * m) / 3 - 1;
    for (int size = 2; size <= max_size; ++size) {
      for (const auto& a : enumerate_alphabets(m, size)) {
        const auto p = profile(a);
        EXPECT_LT(p.rho, std::pow(double(size), 3)) << a.to_string();
      }
    }
  }
}

TEST(Additive, SpectralRadius2x2) {
  EXPECT_DOUBLE_EQ(spectral_radius_2x2(5, 0, 0, 6), 6.0);
  EXPECT_NEAR(spectral_radius_2x2(1, 1, 1, 1), 2.0, 1e-15);
  Eigen::Matrix2d m;
  m << 0.3, 0.7, 0.2, 0.5;
  EXPECT_NEAR(spectral_radius_2x2(0.3, 0.7, 0.2, 0.5), m.eigenvalues().cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Additive, CantorEnergyExamples) {
  const auto a = Alphabet::create(3, {0, 2});
  EXPECT_EQ(cantor_energy_mod(a, 1), 6);
  EXPECT_EQ(cantor_energy_mod(a, 2), 36);
  EXPECT_EQ(cantor_energy_carry(a, 2), 36);
  EXPECT_EQ(cantor_energy_brute(a, 2), 36u);
  EXPECT_EQ(cantor_energy_brute(a, 1), 6u);
}

TEST(Additive, FullAlphabetEnergyIsGroupEnergy) {
  const auto a = Alphabet::create(2, {0, 1});
  for (int k = 1; k <= 3; ++k) {
    const std::uint64_t n = oracle::ipow(2, k);
    EXPECT_EQ(cantor_energy_mod(a, k), BigInt(n * n * n));
    EXPECT_EQ(cantor_energy_brute(a, k), n * n * n);
  }
}

TEST(Additive, RecursionsMatchHistogramOracle) {
  for (int m = 2; m <= 5; ++m) {
    for (int size = 1; size <= m; ++size) {
      for (const auto& a : oracle::subsets(m, size)) {
        for (int k = 1; k <= 3; ++k) {
          const auto pts = oracle::cantor_points(m, to_vec(a), k);
          const BigInt expected = oracle::modular_energy(pts, oracle::ipow(m, k));
          ASSERT_EQ(cantor_energy_mod(a, k), expected) << a.to_string() << " k=" << k;
          ASSERT_EQ(cantor_energy_carry(a, k), expected);
          ASSERT_EQ(BigInt(cantor_energy_brute(a, k)), expected);
        }
      }
    }
  }
}

TEST(Additive, CantorEnergyBasicBounds) {
  for (int m = 3; m <= 6; ++m) {
    for (int size = 2; size < m; ++size) {
      for (const auto& a : enumerate_alphabets(m, size)) {
        for (int k = 1; k <= 6; ++k) {
          const BigInt e = cantor_energy_mod(a, k);
          const BigInt c = BigInt(oracle::ipow(size, k));
          const BigInt n = BigInt(oracle::ipow(m, k));
          EXPECT_LE(c * c * c * c, e * n);
          EXPECT_LE(e, c * c * c);
        }
      }
    }
  }
}

// E~(C_k) <= C N^{3 delta - gamma'} with gamma' = 0.99 gamma_A and C fitted at k = 1.
TEST(Additive, EnergyDecayRate) {
  for (int m = 3; m <= 6; ++m) {
    for (int size = 2; size < m; ++size) {
      for (const auto& a : enumerate_alphabets(m, size)) {
        const auto p = profile(a);
        ASSERT_TRUE(p.gamma.has_value());
        const double exponent = 3.0 * dimension(a) - 0.99 * *p.gamma;
        const double c = cantor_energy_mod(a, 1).convert_to<double>() / std::pow(double(m), exponent);
        for (int k = 2; k <= 6; ++k) {
          const double bound = c * std::pow(double(m), exponent * k);
          EXPECT_LE(cantor_energy_mod(a, k).convert_to<double>(), bound * (1 + 1e-12)) << a.to_string();
        }
      }
    }
  }
}

TEST(Additive, BruteForceCap) {
  Caps caps;
  caps.brute_energy_ops = 1000;
  EXPECT_THROW(cantor_energy_brute(Alphabet::create(3, {0, 2}), 4, caps), Error);
}

TEST(Additive, AppendixInequalities) {
  const auto r = check_appendix_inequalities(Alphabet::create(3, {0, 2}));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.e0, 6);
  EXPECT_EQ(r.e1, 0);
  EXPECT_EQ(r.two_em, 0);
  EXPECT_EQ(r.em_sides, 5);
  try {
    check_appendix_inequalities(Alphabet::create(4, {0, 1, 2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateAlphabet);
  }
  for (int m = 3; m <= 10; ++m) {
    for (int size = 2; size < m; ++size) {
      for (const auto& a : enumerate_alphabets(m, size)) {
        const auto rep = check_appendix_inequalities(a);
        EXPECT_TRUE(rep.pass) << a.to_string() << " " << rep.violated;
      }
    }
  }
}

TEST(Additive, TwoByTwoLemma) {
  EXPECT_TRUE(check_two_by_two_lemma(0, 0, 0, 0.75, 0.1));
  try {
    check_two_by_two_lemma(0.75, 0.25, 0.25, 0.75, 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisViolated);
  }
}

TEST(Additive, TwoByTwoLemmaMonteCarlo) {
  const double eps0 = 0.01;
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int accepted = 0;
  while (accepted < 10000) {
    const double s = 0.75 * u(gen);
    const double p = s * u(gen), q = s * u(gen), r = s * u(gen);
    if (p + r > 1.0 || q + s > 1.0) continue;
    if (!(p + r <= 2.0 * std::sqrt(2.0 * eps0) || q + s <= 1.0 - eps0)) continue;
    ++accepted;
    ASSERT_TRUE(check_two_by_two_lemma(p, q, r, s, eps0)) << p << ' ' << q << ' ' << r << ' ' << s;
  }
}
