#include "baker/cantor_dft.hpp"

#include <cmath>

#include "baker/errors.hpp"
#include "baker/modular.hpp"

namespace baker {

CantorDft::CantorDft(const Alphabet& a, int k)
    : k_(k), width_(a.size()), modulus_(modulus_for(a, k)) {
  const CantorSet c = cantor_set(a, k);
  points_ = c.points;
  dim_ = points_.size();

  const auto m = static_cast<std::uint64_t>(a.base());
  const auto w = static_cast<std::size_t>(width_);
  const auto symbols = a.symbols();

  butterfly_.resize(width_, width_);
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
  for (int r = 0; r < width_; ++r) {
    for (int s = 0; s < width_; ++s) {
      const auto phase = static_cast<std::uint64_t>(symbols[static_cast<std::size_t>(r)] *
                                                    symbols[static_cast<std::size_t>(s)]) % m;
      butterfly_(r, s) = inv_sqrt_m * unit_root(phase, m);
    }
  }

  reversal_.resize(dim_);
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    std::size_t rest = idx;
    std::size_t rev = 0;
    for (int d = 0; d < k; ++d) {
      rev = rev * w + rest % w;
      rest /= w;
    }
    reversal_[idx] = rev;
  }

  // Stage m combines |A| level-(m-1) blocks. The first |A|^{m-1} sorted points
  // of C_k share their high digits, so reducing them mod M^{m-1} lists C_{m-1}
  // in sorted order.
  twiddle_.resize(static_cast<std::size_t>(k));
  std::size_t sub = 1;
  std::uint64_t stage_modulus = m;
  std::uint64_t low_modulus = 1;
  for (int stage = 1; stage <= k; ++stage) {
    auto& tw = twiddle_[static_cast<std::size_t>(stage - 1)];
    tw.resize(w * sub);
    for (std::size_t l0 = 0; l0 < w; ++l0) {
      const auto digit = static_cast<std::uint64_t>(symbols[l0]);
      for (std::size_t jp = 0; jp < sub; ++jp) {
        const std::uint64_t phase = mul_mod(points_[jp] % low_modulus, digit, stage_modulus);
        tw[l0 * sub + jp] = unit_root(phase, stage_modulus);
      }
    }
    sub *= w;
    low_modulus *= m;
    if (stage < k) stage_modulus *= m;
  }
}

CVector CantorDft::apply(const CVector& v) const {
  if (static_cast<std::size_t>(v.size()) != dim_) {
    raise(Errc::InvalidArgument, "vector length does not match the Cantor set size");
  }
  const auto w = static_cast<std::size_t>(width_);
  CVector buf(static_cast<Eigen::Index>(dim_));
  for (std::size_t i = 0; i < dim_; ++i) buf[static_cast<Eigen::Index>(reversal_[i])] = v[static_cast<Eigen::Index>(i)];

  std::vector<cplx> gathered(w);
  std::size_t sub = 1;
  for (int stage = 1; stage <= k_; ++stage) {
    const auto& tw = twiddle_[static_cast<std::size_t>(stage - 1)];
    const std::size_t block = sub * w;
    for (std::size_t start = 0; start < dim_; start += block) {
      for (std::size_t jp = 0; jp < sub; ++jp) {
        for (std::size_t l0 = 0; l0 < w; ++l0) {
          gathered[l0] = buf[static_cast<Eigen::Index>(start + jp + sub * l0)] * tw[l0 * sub + jp];
        }
        for (std::size_t top = 0; top < w; ++top) {
          cplx acc = 0.0;
          for (std::size_t l0 = 0; l0 < w; ++l0) {
            acc += butterfly_(static_cast<Eigen::Index>(top), static_cast<Eigen::Index>(l0)) * gathered[l0];
          }
          buf[static_cast<Eigen::Index>(start + jp + sub * top)] = acc;
        }
      }
    }
    sub = block;
  }
  return buf;
}

CVector CantorDft::apply_adjoint(const CVector& v) const {
  return apply(v.conjugate()).conjugate();
}

}  // namespace baker
