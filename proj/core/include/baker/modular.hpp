#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>

namespace baker {

using u128 = unsigned __int128;

/// base^exp, or nullopt when the result does not fit in 63 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    const u128 next = static_cast<u128>(result) * base;
    if (next >= kLimit) return std::nullopt;
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

/// (a * b) mod n without overflow for a, b < n < 2^64.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % n);
}

/// exp(sign * 2 pi i r / n) for an already reduced residue r in [0, n).
/// The fraction is folded into [-1/2, 1/2) before the trig call.
inline std::complex<double> unit_root(std::uint64_t r, std::uint64_t n, int sign = -1) {
  double frac = static_cast<double>(r) / static_cast<double>(n);
  if (frac >= 0.5) frac -= 1.0;
  const double angle = sign * 2.0 * std::numbers::pi * frac;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace baker
