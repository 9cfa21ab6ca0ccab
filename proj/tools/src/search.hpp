#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "baker/alphabet.hpp"

namespace baker::cli {

/// Non-degenerate special alphabets of base M containing 0 (every special
/// alphabet has such a translate), in lexicographic order.
std::vector<Alphabet> special_alphabets_with_zero(int base, double tol = 1e-9);

/// One representative per affine orbit: the canonical forms of all special
/// alphabets with base 2..m_max, sorted by (M, symbols).
std::vector<Alphabet> special_alphabets(int m_max, double tol = 1e-9);

struct FugledeCase {
  Alphabet alphabet;
  std::optional<std::vector<int>> spectrum;
  std::optional<std::vector<int>> tiling;
};

struct FugledeSummary {
  int base = 0;
  std::uint64_t checked = 0;
  std::uint64_t spectral = 0;
  std::uint64_t tiles = 0;
  std::vector<FugledeCase> counterexamples;
};

FugledeCase fuglede_case(const Alphabet& a);

/// Checks spectral <=> tile for every nonempty subset of Z_M containing 0;
/// both properties are translation invariant.
FugledeSummary fuglede_check(int base);

}  // namespace baker::cli
