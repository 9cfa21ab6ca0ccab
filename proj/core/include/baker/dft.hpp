#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "baker/alphabet.hpp"
#include "baker/caps.hpp"
#include "baker/linalg.hpp"

namespace baker {

/// Unitary DFT, kernel N^{-1/2} exp(-2 pi i j l / N); `inverse` applies the
/// adjoint. O(N log N) for every N.
CVector dft_apply(const CVector& v, bool inverse = false);

/// In-place variant on raw storage of length n.
void dft_inplace(std::span<cplx> data, bool inverse);

/// The |X| x |Y| block of the unitary DFT matrix with rows X and columns Y.
/// Each phase index j*l is reduced mod N in 128-bit arithmetic first.
CMatrix restricted_dft_matrix(std::span<const std::uint64_t> rows,
                              std::span<const std::uint64_t> cols, std::uint64_t n);

/// Largest singular value. Full SVD up to caps.svd_dim, Lanczos on the
/// Gram operator beyond. Throws CapExceeded or NonConvergence.
double op_norm(const CMatrix& m, const Caps& caps = default_caps());

/// All singular values, descending.
Eigen::VectorXd singular_values(const CMatrix& m);

/// Hilbert-Schmidt norm of 1_X F_N 1_Y: sqrt(|X| |Y| / N).
double hs_norm(std::uint64_t size_x, std::uint64_t size_y, std::uint64_t n);

/// F_N(1_{C_k})(j) through the product of G_A(j / M^s), s = 1..k.
cplx indicator_dft_product(const Alphabet& a, int k, std::uint64_t j);

}  // namespace baker
