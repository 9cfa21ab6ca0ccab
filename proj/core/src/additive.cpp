#include "baker/additive.hpp"

#include <cmath>

#include "baker/errors.hpp"

namespace baker {

std::int64_t EnergyProfile::portrait_at(int j) const {
  const int idx = j + base - 1;
  if (idx < 0 || idx >= static_cast<int>(portrait.size())) return 0;
  return portrait[static_cast<std::size_t>(idx)];
}

std::int64_t EnergyProfile::energy_at(int l) const {
  const int idx = l + 2 * base - 2;
  if (idx < 0 || idx >= static_cast<int>(energies.size())) return 0;
  return energies[static_cast<std::size_t>(idx)];
}

namespace {

std::vector<std::int64_t> portrait_of(const Alphabet& a) {
  const int m = a.base();
  std::vector<std::int64_t> f(static_cast<std::size_t>(2 * m - 1), 0);
  for (int x : a.symbols()) {
    for (int y : a.symbols()) ++f[static_cast<std::size_t>(x - y + m - 1)];
  }
  return f;
}

// E_l = sum_j F_j F_{j+l}.
std::vector<std::int64_t> energies_of(const std::vector<std::int64_t>& f, int m) {
  const int span = 2 * m - 1;
  std::vector<std::int64_t> e(static_cast<std::size_t>(4 * m - 3), 0);
  for (int i = 0; i < span; ++i) {
    for (int t = 0; t < span; ++t) {
      // j = i - (m-1), j + l = t - (m-1)  =>  l = t - i
      e[static_cast<std::size_t>(t - i + 2 * m - 2)] +=
          f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(t)];
    }
  }
  return e;
}

int floor_mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

std::int64_t energy(const Alphabet& a, int l) {
  const int m = a.base();
  if (l < -(2 * m - 2) || l > 2 * m - 2) return 0;
  const auto e = energies_of(portrait_of(a), m);
  return e[static_cast<std::size_t>(l + 2 * m - 2)];
}

double spectral_radius_2x2(double p, double q, double r, double s) {
  const double disc = (p - s) * (p - s) + 4.0 * q * r;
  return 0.5 * (p + s + std::sqrt(std::max(disc, 0.0)));
}

EnergyProfile profile(const Alphabet& a) {
  const int m = a.base();
  EnergyProfile out;
  out.base = m;
  out.size = a.size();
  out.portrait = portrait_of(a);
  out.energies = energies_of(out.portrait, m);

  out.portrait_mod.assign(static_cast<std::size_t>(m), 0);
  for (int j = -(m - 1); j <= m - 1; ++j) {
    out.portrait_mod[static_cast<std::size_t>(floor_mod(j, m))] += out.portrait_at(j);
  }
  out.energies_mod.assign(static_cast<std::size_t>(m), 0);
  for (int l = -(2 * m - 2); l <= 2 * m - 2; ++l) {
    out.energies_mod[static_cast<std::size_t>(floor_mod(l, m))] += out.energy_at(l);
  }

  out.matrix = {{{out.energy_at(m - 1) + out.energy_at(m + 1), 2 * out.energy_at(m)},
                 {out.energy_at(1), out.energy_at(0)}}};
  out.rho = spectral_radius_2x2(static_cast<double>(out.matrix[0][0]),
                                static_cast<double>(out.matrix[0][1]),
                                static_cast<double>(out.matrix[1][0]),
                                static_cast<double>(out.matrix[1][1]));
  if (!a.degenerate()) {
    out.gamma = 3.0 * dimension(a) - std::log(out.rho) / std::log(static_cast<double>(m));
  }
  return out;
}

BigInt cantor_energy_mod(const Alphabet& a, int k) {
  if (k < 1) raise(Errc::OutOfRange, "level k must be at least 1");
  const auto p = profile(a);
  BigInt y0 = 0;
  BigInt y1 = 1;
  for (int step = 0; step < k; ++step) {
    const BigInt n0 = p.matrix[0][0] * y0 + p.matrix[0][1] * y1;
    const BigInt n1 = p.matrix[1][0] * y0 + p.matrix[1][1] * y1;
    y0 = n0;
    y1 = n1;
  }
  return y0 + y1;
}

BigInt cantor_energy_carry(const Alphabet& a, int k) {
  if (k < 1) raise(Errc::OutOfRange, "level k must be at least 1");
  const auto p = profile(a);
  const int m = a.base();
  const std::int64_t lo = p.energy_at(m - 1);
  const std::int64_t mid = p.energy_at(m);
  const std::int64_t hi = p.energy_at(m + 1);
  const std::int64_t e1 = p.energy_at(1);
  const std::int64_t e0 = p.energy_at(0);
  const std::int64_t t[3][3] = {{lo, mid, hi}, {e1, e0, e1}, {hi, mid, lo}};
  std::array<BigInt, 3> x = {0, 1, 0};
  for (int step = 0; step < k; ++step) {
    std::array<BigInt, 3> next;
    for (int r = 0; r < 3; ++r) {
      next[r] = t[r][0] * x[0] + t[r][1] * x[1] + t[r][2] * x[2];
    }
    x = next;
  }
  return x[0] + x[1] + x[2];
}

std::uint64_t cantor_energy_brute(const Alphabet& a, int k, const Caps& caps) {
  const double ops = std::pow(static_cast<double>(a.size()), 3.0 * k);
  if (ops > static_cast<double>(caps.brute_energy_ops)) {
    raise(Errc::CapExceeded, "brute-force energy exceeds the operation cap");
  }
  const CantorSet c = cantor_set(a, k, caps);
  const std::uint64_t n = c.modulus;
  const auto m = static_cast<std::uint64_t>(a.base());
  std::vector<char> digit_ok(static_cast<std::size_t>(m), 0);
  for (int s : a.symbols()) digit_ok[static_cast<std::size_t>(s)] = 1;
  auto member = [&](std::uint64_t x) {
    for (int d = 0; d < k; ++d) {
      if (!digit_ok[x % m]) return false;
      x /= m;
    }
    return true;
  };

  std::uint64_t count = 0;
  for (std::uint64_t x : c.points) {
    for (std::uint64_t y : c.points) {
      const std::uint64_t sum = (x + y) % n;
      for (std::uint64_t z : c.points) {
        if (member((sum + n - z) % n)) ++count;
      }
    }
  }
  return count;
}

AppendixReport check_appendix_inequalities(const Alphabet& a) {
  require_nondegenerate(a, "appendix inequalities");
  const auto p = profile(a);
  const int m = a.base();
  const std::int64_t size = a.size();
  AppendixReport r;
  r.e0 = p.energy_at(0);
  r.e1 = p.energy_at(1);
  r.two_em = 2 * p.energy_at(m);
  r.em_sides = p.energy_at(m + 1) + p.energy_at(m - 1);

  auto fail = [&](const char* what) {
    if (r.pass) {
      r.pass = false;
      r.violated = what;
    }
  };
  if (r.e1 > r.e0) fail("E_1 <= E_0");
  if (r.two_em > r.e0) fail("2 E_M <= E_0");
  if (r.em_sides > r.e0) fail("E_{M+1} + E_{M-1} <= E_0");
  const std::int64_t cube = size * size * size;
  if (3 * r.e0 > 2 * cube + size) fail("E_0 <= (2/3)|A|^3 + (1/3)|A|");
  if (4 * (2 * cube + size) > 9 * cube) fail("(2/3)|A|^3 + (1/3)|A| <= (3/4)|A|^3");
  return r;
}

bool check_two_by_two_lemma(double p, double q, double r, double s, double eps0) {
  const bool box = 0.0 <= p && 0.0 <= q && 0.0 <= r && p <= s && q <= s && r <= s && s <= 0.75;
  const bool sums = p + r <= 1.0 && q + s <= 1.0;
  const bool eps_ok = eps0 > 0.0 && eps0 < 0.125;
  const bool either = p + r <= 2.0 * std::sqrt(2.0 * eps0) || q + s <= 1.0 - eps0;
  if (!(box && sums && eps_ok && either)) {
    raise(Errc::HypothesisViolated, "2x2 lemma hypotheses do not hold");
  }
  return spectral_radius_2x2(p, q, r, s) < 1.0;
}

}  // namespace baker
