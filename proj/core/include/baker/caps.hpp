#pragma once

#include <cstddef>
#include <cstdint>

namespace baker {

// Resource guards. Every expensive operation checks one of these before
// allocating; requests beyond a cap fail with Errc::CapExceeded.
struct Caps {
  std::size_t cantor_points = std::size_t{1} << 20;  // |A|^k for explicit Cantor sets
  std::size_t norm_dim = 8192;                       // restricted DFT norms
  std::size_t svd_dim = 4096;                        // full SVD switchover in op_norm
  std::uint64_t dense_n = 16384;                     // dense B_N assembly
  std::size_t eig_dim = 8192;                        // dense eigensolves
  std::uint64_t brute_energy_ops = 1'000'000'000;    // |A|^{3k} for brute-force energies

  // Defaults overridden by BAKER_CAP_CANTOR, BAKER_CAP_NORM, BAKER_CAP_SVD,
  // BAKER_CAP_DENSE, BAKER_CAP_EIG and BAKER_CAP_BRUTE when set.
  static Caps from_env();
};

// Process-wide caps, initialised from the environment on first use.
const Caps& default_caps();
void set_default_caps(const Caps& caps);

}  // namespace baker
