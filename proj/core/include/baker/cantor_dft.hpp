#pragma once

#include <cstdint>
#include <vector>

#include "baker/alphabet.hpp"
#include "baker/linalg.hpp"

namespace baker {

/// Fast application of 1_{C_k} F_N 1_{C_k}, viewed as a |A|^k x |A|^k
/// matrix on the sorted Cantor set.
///
/// Writing j = j' + M^{k-1} j_top and l = l_0 + M l' in base-M digits, the
/// phase j l / N splits as
///   j' l_0 / M^k  +  j' l' / M^{k-1}  +  j_top l_0 / M   (mod 1),
/// so the level-k operator is a twiddled radix-M butterfly over |A| copies
/// of the level-(k-1) operator. A mixed-radix decimation in time with
/// |A| x |A| butterflies then costs O(k |A|^{k+1}) per application instead
/// of O(|A|^{2k}).
class CantorDft {
 public:
  CantorDft(const Alphabet& a, int k);

  std::size_t dimension() const noexcept { return dim_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::uint64_t>& points() const noexcept { return points_; }

  /// (1_C F_N 1_C) v with v indexed by the sorted points of C_k.
  CVector apply(const CVector& v) const;
  /// The matrix is complex symmetric, so the adjoint is conj(A conj(v)).
  CVector apply_adjoint(const CVector& v) const;

 private:
  int k_;
  int width_;  // |A|
  std::uint64_t modulus_;
  std::size_t dim_;
  std::vector<std::uint64_t> points_;
  std::vector<std::size_t> reversal_;      // digit-reversal permutation
  CMatrix butterfly_;                      // M^{-1/2} exp(-2 pi i a b / M), a, b in A
  std::vector<std::vector<cplx>> twiddle_;  // per stage: [l0 * sub + j']
};

}  // namespace baker
