#include <gtest/gtest.h>

#include <limits>

#include "baker/additive.hpp"
#include "baker/alphabet.hpp"
#include "baker/errors.hpp"
#include "baker/fup.hpp"
#include "oracles.hpp"

using namespace baker;

namespace {

std::vector<int> to_vec(const Alphabet& a) { return {a.symbols().begin(), a.symbols().end()}; }

}  // namespace

TEST(Fup, NormExamples) {
  EXPECT_NEAR(r_norm(Alphabet::create(6, {0, 3}), 3), std::pow(1.0 / 3.0, 1.5), 1e-10);
  EXPECT_NEAR(r_norm(Alphabet::create(3, {0, 2}), 1), 1.0, 1e-10);
  for (int k = 1; k <= 3; ++k) EXPECT_NEAR(r_norm(Alphabet::create(4, {0, 1, 2, 3}), k), 1.0, 1e-12);
}

TEST(Fup, NormMatchesJacobiSvd) {
  for (int m = 3; m <= 6; ++m) {
    for (int size = 2; size < m; ++size) {
      for (const auto& a : enumerate_alphabets(m, size)) {
        for (int k = 1; std::pow(double(size), k) <= 256; ++k) {
          ASSERT_NEAR(r_norm(a, k), oracle::r_k(m, to_vec(a), k), 1e-10) << a.to_string() << " k=" << k;
        }
      }
    }
  }
}

// Above the dense limit r_k comes from the structured transform.
TEST(Fup, StructuredPathMatchesJacobiSvd) {
  const std::vector<std::pair<int, std::vector<int>>> cases = {{3, {1, 2}}, {5, {0, 2, 3}}, {6, {1, 4}}};
  for (const auto& [m, syms] : cases) {
    const auto a = Alphabet::create(m, syms);
    int k = 1;
    while (std::pow(double(syms.size()), k) <= double(kDenseFupLimit)) ++k;
    EXPECT_NEAR(r_norm(a, k), oracle::r_k(m, syms, k), 1e-9) << a.to_string() << " k=" << k;
  }
}

TEST(Fup, NormCap) {
  Caps caps;
  caps.norm_dim = 100;
  EXPECT_THROW(r_norm(Alphabet::create(3, {0, 2}), 7, caps), Error);
}

TEST(Fup, SpecialAlphabetsAreExact) {
  for (const auto& a : {Alphabet::create(6, {0, 3}), Alphabet::create(6, {0, 2, 4}), Alphabet::create(8, {0, 2}),
                        Alphabet::create(8, {0, 1, 4, 5})}) {
    for (int k = 1; k <= 5; ++k) {
      const double expected = std::pow(double(a.size()) / a.base(), k / 2.0);
      EXPECT_NEAR(r_norm(a, k), expected, 1e-9) << a.to_string() << " k=" << k;
    }
  }
}

TEST(Fup, Witnesses) {
  EXPECT_NEAR(witness_constant(Alphabet::create(3, {0, 1, 2}), 2), 1.0, 1e-12);
  const auto a = Alphabet::create(3, {0, 2});
  EXPECT_LE(witness_constant(a, 2), r_norm(a, 2) + 1e-10);
  EXPECT_LE(witness_modulated(a, 3, 2), r_norm(a, 3) + 1e-10);
  const auto s = Alphabet::create(6, {0, 3});
  EXPECT_LE(witness_modulated(s, 2, 3), 1.0 / 3.0 + 1e-10);
  EXPECT_THROW(witness_modulated(a, 2, 1), Error);
}

TEST(Fup, ReportRejectsDegenerate) {
  try {
    fup_report(Alphabet::create(4, {0, 1, 2, 3}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateAlphabet);
  }
}

TEST(Fup, ReportOfSpecialAlphabet) {
  const auto a = Alphabet::create(6, {0, 3});
  const auto r = fup_report(a, 4);
  ASSERT_EQ(r.levels.size(), 4u);
  for (const auto& l : r.levels) EXPECT_NEAR(l.beta, (1.0 - r.delta) / 2.0, 1e-9);
  const auto t = fup_report(Alphabet::create(3, {0, 2}), 1);
  EXPECT_NEAR(t.levels[0].beta, 0.0, 1e-12);
}

// Sandwich, additive-energy bound and witness dominance on every
// non-degenerate alphabet with M <= 6 and |A|^k <= 512.
TEST(Fup, BoundsCorpus) {
  for (int m = 3; m <= 6; ++m) {
    for (int size = 2; size < m; ++size) {
      int k_max = 0;
      while (std::pow(double(size), k_max + 1) <= 512) ++k_max;
      for (const auto& a : enumerate_alphabets(m, size)) {
        const auto rep = fup_report(a, k_max);
        const double lo_beta = std::max(0.0, 0.5 - rep.delta);
        const double hi_beta = (1.0 - rep.delta) / 2.0;
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& l : rep.levels) {
          const double n = std::pow(double(m), l.k);
          EXPECT_NEAR(l.bounds.trivial, std::min(1.0, std::pow(n, rep.delta - 0.5)), 1e-12);
          EXPECT_NEAR(l.bounds.lower, std::pow(n, (rep.delta - 1.0) / 2.0), 1e-12);
          EXPECT_LE(l.bounds.lower, l.r + 1e-10);
          EXPECT_LE(l.r, std::min(l.bounds.trivial, l.bounds.additive) + 1e-10);
          EXPECT_LE(l.bounds.witness_constant, l.r + 1e-10);
          EXPECT_LE(l.bounds.witness_modulated, l.r + 1e-10);
          EXPECT_GE(l.beta, lo_beta - 1e-10) << a.to_string() << " k=" << l.k;
          EXPECT_LE(l.beta, hi_beta + 1e-10) << a.to_string() << " k=" << l.k;
          for (int b : a.symbols()) EXPECT_LE(witness_modulated(a, l.k, b), l.r + 1e-10);
          // additive bound from the exact energy
          const double e = cantor_energy_mod(a, l.k).convert_to<double>();
          const double c = std::pow(double(size), l.k);
          EXPECT_NEAR(l.bounds.additive, std::pow(e, 0.125) * std::pow(c, 0.375) / std::pow(n, 0.375),
                      1e-12 * l.bounds.additive);
          best = std::max(best, l.beta);
        }
        EXPECT_DOUBLE_EQ(rep.beta_best, best);
      }
    }
  }
}

TEST(Fup, BetaBestIsMonotone) {
  const auto a = Alphabet::create(5, {0, 1, 3});
  double prev = -1.0;
  for (int k = 1; k <= 5; ++k) {
    const double b = fup_report(a, k).beta_best;
    EXPECT_GE(b, prev);
    prev = b;
  }
}

TEST(Fup, Submultiplicative) {
  EXPECT_TRUE(check_submultiplicative(Alphabet::create(3, {0, 2}), 1, 1));
  EXPECT_TRUE(check_submultiplicative(Alphabet::create(6, {0, 3}), 1, 2));
  const auto s = Alphabet::create(6, {0, 3});
  EXPECT_NEAR(r_norm(s, 3), r_norm(s, 1) * r_norm(s, 2), 1e-10);
  EXPECT_TRUE(check_submultiplicative(Alphabet::create(4, {1, 2}), 2, 2));
}

TEST(Fup, GapCondition) {
  // (5,{0,1}): |C_1| = 2 and the run {2,3,4} has length 3.
  const auto g = gap_condition(Alphabet::create(5, {0, 1}), 1);
  EXPECT_EQ(g.cantor_size, 2u);
  EXPECT_EQ(g.largest_gap, 3u);
  EXPECT_TRUE(g.gap_condition);
  EXPECT_EQ(g.corollary_gap, 2u);  // ceil(5/2 - 1) = 2
  EXPECT_NEAR(g.norm_bound, std::sqrt(1.0 - std::pow(2.0, -10.0)), 1e-15);
  EXPECT_FALSE(g.bound_is_vacuous);
  // sqrt(1 - 2^{-162}) rounds to 1
  EXPECT_TRUE(gap_condition(Alphabet::create(3, {0, 2}), 4).bound_is_vacuous);

  const auto h = gap_condition(Alphabet::create(3, {0, 2}), 2);
  EXPECT_EQ(h.cantor_size, 4u);  // {0,2,6,8}
  EXPECT_EQ(h.largest_gap, 3u);  // {3,4,5}
  EXPECT_FALSE(h.gap_condition);
}
