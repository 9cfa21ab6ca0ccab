#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "baker/caps.hpp"

namespace baker {

/// A base M >= 2 together with a set of digits A inside [0, M).
///
/// Degenerate alphabets (a single symbol, or every residue) can be
/// constructed; operations that need 1 < |A| < M reject them with
/// Errc::DegenerateAlphabet.
class Alphabet {
 public:
  /// Validates and sorts the symbols. Throws OutOfRange, Duplicate or
  /// EmptySymbols.
  static Alphabet create(int base, std::vector<int> symbols);

  int base() const noexcept { return base_; }
  std::span<const int> symbols() const noexcept { return symbols_; }
  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  bool degenerate() const noexcept { return size() == 1 || size() == base_; }
  bool contains(int symbol) const noexcept;

  /// "{0,2}"
  std::string symbols_string() const;
  /// "(3,{0,2})"
  std::string to_string() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet(int base, std::vector<int> symbols) : base_(base), symbols_(std::move(symbols)) {}

  int base_;
  std::vector<int> symbols_;
};

/// Throws DegenerateAlphabet unless 1 < |A| < M.
void require_nondegenerate(const Alphabet& a, const char* operation);

/// log|A| / log M.
double dimension(const Alphabet& a);

/// Topological pressure delta - s.
double pressure(const Alphabet& a, double s);

/// Residues of Z_N, N = M^k, whose k base-M digits all lie in A.
struct CantorSet {
  int level = 0;
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> points;  // sorted
};

/// M^k, throwing Overflow when it does not fit in 63 bits.
std::uint64_t modulus_for(const Alphabet& a, int k);

CantorSet cantor_set(const Alphabet& a, int k, const Caps& caps = default_caps());

struct Interval {
  double lo;
  double hi;
};

/// The level-k covering [j/M^k, (j+1)/M^k], j in C_k, of the limiting Cantor set.
std::vector<Interval> cantor_intervals(const Alphabet& a, int k, const Caps& caps = default_caps());

/// G_A(x) = M^{-1/2} sum_{a in A} exp(-2 pi i a x).
std::complex<double> g_function(const Alphabet& a, double x);

/// G_A(num / den) with every phase a*num reduced mod den in exact integer
/// arithmetic. Use this for rational arguments with large denominators.
std::complex<double> g_function_rational(const Alphabet& a, std::uint64_t num, std::uint64_t den);

/// True iff |G_A((b - b')/M)| <= tol for all distinct b, b' in A.
bool is_special(const Alphabet& a, double tol = 1e-9);

/// Lexicographically least image of A under x -> (d x + q) mod M over all
/// units d and shifts q. A deduplication key for special-alphabet listings;
/// it does not preserve r_k in general.
Alphabet canonical_form(const Alphabet& a);

/// A translate set T with Z_M the disjoint union of A + t, t in T; the
/// lexicographically least one, or nullopt when A does not tile.
std::optional<std::vector<int>> tiles(const Alphabet& a);

/// A spectrum B for A: |B| = |A| and G_A((b - b')/M) = 0 for distinct
/// b, b' in B. A itself is returned when it is its own spectrum, otherwise
/// the lexicographically least spectrum.
std::optional<std::vector<int>> spectrum_set(const Alphabet& a, double tol = 1e-9);

/// All C(M, size) alphabets of the given size, in lexicographic order.
/// Requires 1 < size < M.
std::vector<Alphabet> enumerate_alphabets(int base, int size);

/// Parses "1,4" or "{1, 4}" into symbols.
std::vector<int> parse_symbols(const std::string& text);

}  // namespace baker
