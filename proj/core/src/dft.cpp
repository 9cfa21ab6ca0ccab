#include "baker/dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "baker/errors.hpp"
#include "baker/modular.hpp"

namespace baker {
namespace {

// FFTW planning is not thread safe; execution with the new-array interface is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, bool inverse) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(n, inverse);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<fftw_complex> scratch(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, scratch.data(), scratch.data(),
                                      inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, bool>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void dft_inplace(std::span<cplx> data, bool inverse) {
  if (data.empty()) return;
  const int n = static_cast<int>(data.size());
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_cache().get(n, inverse), raw, raw);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& x : data) x *= scale;
}

CVector dft_apply(const CVector& v, bool inverse) {
  CVector out = v;
  dft_inplace(std::span<cplx>(out.data(), static_cast<std::size_t>(out.size())), inverse);
  return out;
}

CMatrix restricted_dft_matrix(std::span<const std::uint64_t> rows,
                              std::span<const std::uint64_t> cols, std::uint64_t n) {
  if (n == 0) raise(Errc::OutOfRange, "modulus must be positive");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const std::uint64_t l = cols[c] % n;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          scale * unit_root(mul_mod(rows[r] % n, l, n), n);
    }
  }
  return m;
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues();
}

double op_norm(const CMatrix& m, const Caps& caps) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  if (rows > caps.norm_dim || cols > caps.norm_dim) {
    raise(Errc::CapExceeded, "matrix dimension exceeds the norm cap");
  }
  if (m.size() == 0) return 0.0;
  if (std::min(rows, cols) <= caps.svd_dim) return singular_values(m)[0];

  const auto est = lanczos_norm([&](const CVector& x) -> CVector { return m * x; },
                                [&](const CVector& y) -> CVector { return m.adjoint() * y; },
                                m.cols());
  if (!est.converged) raise(Errc::NonConvergence, "Lanczos norm iteration budget exhausted");
  return est.value;
}

double hs_norm(std::uint64_t size_x, std::uint64_t size_y, std::uint64_t n) {
  return std::sqrt(static_cast<double>(size_x) * static_cast<double>(size_y) /
                   static_cast<double>(n));
}

cplx indicator_dft_product(const Alphabet& a, int k, std::uint64_t j) {
  const std::uint64_t n = modulus_for(a, k);
  if (j >= n) raise(Errc::OutOfRange, "frequency outside [0, M^k)");
  cplx product = 1.0;
  std::uint64_t den = 1;
  for (int s = 1; s <= k; ++s) {
    den *= static_cast<std::uint64_t>(a.base());
    product *= g_function_rational(a, j, den);
  }
  return product;
}

}  // namespace baker
