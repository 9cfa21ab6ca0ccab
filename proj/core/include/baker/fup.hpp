#pragma once

#include <cstdint>
#include <vector>

#include "baker/alphabet.hpp"
#include "baker/caps.hpp"

namespace baker {

/// Dense SVD is used for r_k up to this many Cantor points; the structured
/// transform with Lanczos takes over beyond it.
inline constexpr std::size_t kDenseFupLimit = 512;

/// r_k = ||1_{C_k} F_N 1_{C_k}||. Throws CapExceeded above caps.norm_dim points.
double r_norm(const Alphabet& a, int k, const Caps& caps = default_caps());

/// sqrt(|A|^{-k} sum_{j in C_k} |F_N(1_{C_k})(j)|^2), a lower bound for r_k.
double witness_constant(const Alphabet& a, int k, const Caps& caps = default_caps());

/// The same bound for the test vector exp(2 pi i j_b l / N) on C_k with
/// j_b = b (1 + M + ... + M^{k-1}). Throws SymbolNotInAlphabet.
double witness_modulated(const Alphabet& a, int k, int b, const Caps& caps = default_caps());

struct FupBounds {
  double trivial = 0.0;            // min(1, N^{delta - 1/2})
  double lower = 0.0;              // N^{(delta - 1)/2}
  double additive = 0.0;           // E~(C_k)^{1/8} |C_k|^{3/8} N^{-3/8}
  double witness_constant = 0.0;
  double witness_modulated = 0.0;  // best over b in A
  int witness_symbol = 0;          // the maximising b
};

struct FupLevel {
  int k = 0;
  std::uint64_t modulus = 0;
  double r = 0.0;
  double beta = 0.0;  // -log r_k / (k log M)
  FupBounds bounds;
};

struct FupReport {
  Alphabet alphabet;
  double delta = 0.0;
  std::vector<FupLevel> levels;  // k = 1..k_max
  double beta_best = 0.0;        // max_k beta_k
};

/// Levels 1..k_max with all bounds. Requires a non-degenerate alphabet.
FupReport fup_report(const Alphabet& a, int k_max, const Caps& caps = default_caps());

struct GapReport {
  int k = 0;
  std::uint64_t cantor_size = 0;
  std::uint64_t largest_gap = 0;  // longest circular run of residues outside C_k
  bool gap_condition = false;     // |C_k| <= largest_gap
  double threshold = 0.0;         // smallest real k at which the gap bound applies
  bool threshold_met = false;
  std::uint64_t corollary_gap = 0;  // ceil(M^{1-delta} - 1) M^{k-1}
  double norm_bound = 1.0;          // sqrt(1 - 2^{-2N}) evaluated in double
  bool bound_is_vacuous = true;     // the bound rounds to 1
};

GapReport gap_condition(const Alphabet& a, int k, const Caps& caps = default_caps());

/// r_{k1 + k2} <= r_{k1} r_{k2} + 1e-9.
bool check_submultiplicative(const Alphabet& a, int k1, int k2, const Caps& caps = default_caps());

}  // namespace baker
