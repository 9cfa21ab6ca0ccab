#include "baker/cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include <boost/math/interpolators/cubic_hermite.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "baker/errors.hpp"

namespace baker {
namespace {

double bump(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return std::exp(-1.0 / (t * (1.0 - t)));
}

// Normalised antiderivative of the bump on [0, 1], tabulated at Chebyshev
// points and interpolated by a monotone cubic Hermite spline.
class StepTable {
 public:
  StepTable() {
    constexpr int kIntervals = 4096;
    using boost::math::quadrature::gauss_kronrod;
    std::vector<double> u(kIntervals + 1);
    for (int i = 0; i <= kIntervals; ++i) {
      u[static_cast<std::size_t>(i)] = 0.5 * (1.0 - std::cos(std::numbers::pi * i / kIntervals));
    }
    u.front() = 0.0;
    u.back() = 1.0;

    // One 15-point Kronrod rule per node interval is accurate to ~1e-17 here.
    std::vector<double> phi(u.size(), 0.0);
    for (std::size_t i = 1; i < u.size(); ++i) {
      phi[i] = phi[i - 1] + gauss_kronrod<double, 15>::integrate(bump, u[i - 1], u[i], 0, 0.0);
    }
    const double total = phi.back();
    std::vector<double> slope(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      phi[i] /= total;
      slope[i] = bump(u[i]) / total;
    }
    phi.back() = 1.0;

    // Fritsch-Carlson limiter: keeps each cubic piece monotone.
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      const double secant = (phi[i + 1] - phi[i]) / (u[i + 1] - u[i]);
      if (secant <= 0.0) {
        slope[i] = 0.0;
        slope[i + 1] = 0.0;
        continue;
      }
      const double alpha = slope[i] / secant;
      const double beta = slope[i + 1] / secant;
      const double norm2 = alpha * alpha + beta * beta;
      if (norm2 > 9.0) {
        const double scale = 3.0 / std::sqrt(norm2);
        slope[i] = scale * alpha * secant;
        slope[i + 1] = scale * beta * secant;
      }
    }
    spline_ = std::make_unique<Spline>(std::move(u), std::move(phi), std::move(slope));
  }

  double operator()(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return std::clamp((*spline_)(t), 0.0, 1.0);
  }

 private:
  using Spline = boost::math::interpolators::cubic_hermite<std::vector<double>>;
  std::unique_ptr<Spline> spline_;
};

const StepTable& step_table() {
  static const StepTable table;
  return table;
}

}  // namespace

double smooth_step(double x) { return step_table()(1.02 * x - 0.01); }

CutoffSpec CutoffSpec::smooth(double tau) {
  if (!(tau > 0.0 && tau <= 0.5)) raise(Errc::OutOfRange, "tau must lie in (0, 1/2]");
  return CutoffSpec(Kind::Smooth, tau);
}

std::string CutoffSpec::name() const {
  switch (kind_) {
    case Kind::Smooth: {
      std::ostringstream os;
      os << "tau=" << tau_;
      return os.str();
    }
    case Kind::SharpOne:
      return "sharp";
    case Kind::Zero:
      return "zero";
  }
  return {};
}

double CutoffSpec::operator()(double x) const {
  switch (kind_) {
    case Kind::SharpOne:
      return 1.0;
    case Kind::Zero:
      return 0.0;
    case Kind::Smooth:
      if (x <= 0.0 || x >= 1.0) return 0.0;
      return smooth_step(x / tau_) * smooth_step((1.0 - x) / tau_);
  }
  return 0.0;
}

std::vector<double> discretize(const CutoffSpec& c, int n) {
  if (n < 1) raise(Errc::OutOfRange, "discretization size must be positive");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = c(static_cast<double>(j) / n);
  return out;
}

}  // namespace baker
