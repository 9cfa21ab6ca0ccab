#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "baker/alphabet.hpp"
#include "baker/caps.hpp"

namespace baker {

using BigInt = boost::multiprecision::cpp_int;

/// Additive portraits and energies of an alphabet.
struct EnergyProfile {
  int base = 0;
  int size = 0;
  // F_j for j in [-(M-1), M-1], stored at j + M - 1.
  std::vector<std::int64_t> portrait;
  // F~_j for j in Z_M.
  std::vector<std::int64_t> portrait_mod;
  // E_l for l in [-(2M-2), 2M-2], stored at l + 2M - 2.
  std::vector<std::int64_t> energies;
  // E~_l for l in Z_M.
  std::vector<std::int64_t> energies_mod;
  // [[E_{M-1} + E_{M+1}, 2 E_M], [E_1, E_0]]
  std::array<std::array<std::int64_t, 2>, 2> matrix{};
  double rho = 0.0;
  std::optional<double> gamma;  // absent for degenerate alphabets

  /// F_j, zero outside the stored range.
  std::int64_t portrait_at(int j) const;
  /// E_l, zero outside the stored range.
  std::int64_t energy_at(int l) const;
};

/// |{(a,b,c,d) in A^4 : a + b - c - d = l}| over the integers.
std::int64_t energy(const Alphabet& a, int l);

EnergyProfile profile(const Alphabet& a);

/// Perron root of a nonnegative 2x2 matrix by the closed form.
double spectral_radius_2x2(double p, double q, double r, double s);

/// Modular additive energy of C_k from the 2x2 carry recursion.
BigInt cantor_energy_mod(const Alphabet& a, int k);

/// The same quantity from the 3x3 carry-digit recursion.
BigInt cantor_energy_carry(const Alphabet& a, int k);

/// Direct count of (a,b,c,d) in C_k^4 with a + b = c + d mod M^k.
/// Throws CapExceeded when |A|^{3k} exceeds caps.brute_energy_ops.
std::uint64_t cantor_energy_brute(const Alphabet& a, int k, const Caps& caps = default_caps());

struct AppendixReport {
  bool pass = true;
  std::string violated;  // empty on pass
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;
  std::int64_t two_em = 0;
  std::int64_t em_sides = 0;  // E_{M+1} + E_{M-1}
};

/// max(E_1, 2E_M, E_{M+1} + E_{M-1}) <= E_0 <= (2/3)|A|^3 + (1/3)|A| <= (3/4)|A|^3,
/// checked in integer arithmetic. Requires |A| > 1.
AppendixReport check_appendix_inequalities(const Alphabet& a);

/// True iff [[p, q], [r, s]] has spectral radius below 1. Throws
/// HypothesisViolated unless 0 <= p, q, r <= s <= 3/4, p + r <= 1, q + s <= 1,
/// eps0 in (0, 1/8), and p + r <= 2 sqrt(2 eps0) or q + s <= 1 - eps0.
bool check_two_by_two_lemma(double p, double q, double r, double s, double eps0);

}  // namespace baker
