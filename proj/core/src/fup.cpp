#include "baker/fup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "baker/additive.hpp"
#include "baker/cantor_dft.hpp"
#include "baker/dft.hpp"
#include "baker/errors.hpp"
#include "baker/modular.hpp"

namespace baker {

double r_norm(const Alphabet& a, int k, const Caps& caps) {
  if (k < 1) raise(Errc::OutOfRange, "level k must be at least 1");
  const std::uint64_t n = modulus_for(a, k);
  const double points = std::pow(static_cast<double>(a.size()), k);
  if (points > static_cast<double>(caps.norm_dim)) {
    raise(Errc::CapExceeded, "|A|^k exceeds the norm cap");
  }
  if (a.size() == a.base()) return 1.0;

  const auto dim = static_cast<std::size_t>(points);
  if (dim <= kDenseFupLimit) {
    const CantorSet c = cantor_set(a, k, caps);
    return singular_values(restricted_dft_matrix(c.points, c.points, n))[0];
  }
  const CantorDft op(a, k);
  const auto est = lanczos_norm([&](const CVector& x) { return op.apply(x); },
                                [&](const CVector& y) { return op.apply_adjoint(y); },
                                static_cast<Eigen::Index>(dim));
  if (!est.converged) raise(Errc::NonConvergence, "Lanczos norm iteration budget exhausted");
  return est.value;
}

namespace {

std::uint64_t repunit_shift(const Alphabet& a, int k, int b) {
  const std::uint64_t n = modulus_for(a, k);
  const auto m = static_cast<std::uint64_t>(a.base());
  std::uint64_t jb = 0;
  std::uint64_t power = 1;
  for (int s = 0; s < k; ++s) {
    jb = (jb + static_cast<std::uint64_t>(b) * power) % n;
    power *= m;
  }
  return jb;
}

double shifted_witness(const Alphabet& a, int k, std::uint64_t shift, const Caps& caps) {
  const CantorSet c = cantor_set(a, k, caps);
  const std::uint64_t n = c.modulus;
  double sum = 0.0;
  for (std::uint64_t j : c.points) {
    sum += std::norm(indicator_dft_product(a, k, (j + n - shift) % n));
  }
  return std::sqrt(sum / static_cast<double>(c.points.size()));
}

}  // namespace

double witness_constant(const Alphabet& a, int k, const Caps& caps) {
  return shifted_witness(a, k, 0, caps);
}

double witness_modulated(const Alphabet& a, int k, int b, const Caps& caps) {
  if (!a.contains(b)) raise(Errc::SymbolNotInAlphabet, "modulation symbol is not in the alphabet");
  return shifted_witness(a, k, repunit_shift(a, k, b), caps);
}

FupReport fup_report(const Alphabet& a, int k_max, const Caps& caps) {
  require_nondegenerate(a, "fup_report");
  if (k_max < 1) raise(Errc::OutOfRange, "k_max must be at least 1");
  FupReport report{a, dimension(a), {}, 0.0};
  const double log_m = std::log(static_cast<double>(a.base()));
  const double delta = report.delta;

  for (int k = 1; k <= k_max; ++k) {
    FupLevel level;
    level.k = k;
    level.modulus = modulus_for(a, k);
    level.r = r_norm(a, k, caps);
    level.beta = -std::log(level.r) / (k * log_m);

    const double log_n = k * log_m;
    const double log_size = k * std::log(static_cast<double>(a.size()));
    auto& b = level.bounds;
    b.trivial = std::min(1.0, std::exp((delta - 0.5) * log_n));
    b.lower = std::exp(0.5 * (delta - 1.0) * log_n);
    const double log_energy = std::log(cantor_energy_mod(a, k).convert_to<double>());
    b.additive = std::exp(log_energy / 8.0 + 3.0 * log_size / 8.0 - 3.0 * log_n / 8.0);
    b.witness_constant = witness_constant(a, k, caps);
    b.witness_modulated = -1.0;
    for (int sym : a.symbols()) {
      const double w = witness_modulated(a, k, sym, caps);
      if (w > b.witness_modulated) {
        b.witness_modulated = w;
        b.witness_symbol = sym;
      }
    }
    report.beta_best = k == 1 ? level.beta : std::max(report.beta_best, level.beta);
    report.levels.push_back(level);
  }
  return report;
}

GapReport gap_condition(const Alphabet& a, int k, const Caps& caps) {
  require_nondegenerate(a, "gap_condition");
  const CantorSet c = cantor_set(a, k, caps);
  const std::uint64_t n = c.modulus;
  GapReport g;
  g.k = k;
  g.cantor_size = c.points.size();
  const auto& p = c.points;
  g.largest_gap = n - 1 - p.back() + p.front();
  for (std::size_t i = 1; i < p.size(); ++i) g.largest_gap = std::max(g.largest_gap, p[i] - p[i - 1] - 1);
  g.gap_condition = g.cantor_size <= g.largest_gap;

  const int m = a.base();
  const int size = a.size();
  const double delta = dimension(a);
  // M^{1-delta} = M/|A|, so ceil(M^{1-delta} - 1) = ceil((M - |A|)/|A|).
  const auto run = static_cast<std::uint64_t>((m - size + size - 1) / size);
  g.threshold = 1.0 / (1.0 - delta) -
                std::log(static_cast<double>(run)) / ((1.0 - delta) * std::log(static_cast<double>(m)));
  g.threshold_met = static_cast<double>(k) >= g.threshold - 1e-12;
  g.corollary_gap = run * (n / static_cast<std::uint64_t>(m));
  g.norm_bound = std::sqrt(1.0 - std::exp2(-2.0 * static_cast<double>(n)));
  g.bound_is_vacuous = g.norm_bound == 1.0;
  return g;
}

bool check_submultiplicative(const Alphabet& a, int k1, int k2, const Caps& caps) {
  return r_norm(a, k1 + k2, caps) <= r_norm(a, k1, caps) * r_norm(a, k2, caps) + 1e-9;
}

}  // namespace baker
