#pragma once

#include <string>
#include <vector>

namespace baker {

/// A cutoff on [0, 1]: the smooth family chi_tau, the constant 1, or 0.
class CutoffSpec {
 public:
  enum class Kind { Smooth, SharpOne, Zero };

  static CutoffSpec smooth(double tau);  // throws OutOfRange unless 0 < tau <= 1/2
  static CutoffSpec sharp_one() { return CutoffSpec(Kind::SharpOne, 0.0); }
  static CutoffSpec zero() { return CutoffSpec(Kind::Zero, 0.0); }

  Kind kind() const noexcept { return kind_; }
  double tau() const noexcept { return tau_; }
  /// "tau=0.05", "sharp" or "zero".
  std::string name() const;

  /// chi(x); zero outside [0, 1] for the smooth kind.
  double operator()(double x) const;

  friend bool operator==(const CutoffSpec&, const CutoffSpec&) = default;

 private:
  CutoffSpec(Kind kind, double tau) : kind_(kind), tau_(tau) {}

  Kind kind_;
  double tau_;
};

inline CutoffSpec cutoff_tau(double tau) { return CutoffSpec::smooth(tau); }

/// The normalised step F(x) = c int_{-inf}^{1.02x - 0.01} 1_[0,1](t) e^{-1/(t(1-t))} dt.
double smooth_step(double x);

/// chi(j/n), j = 0..n-1.
std::vector<double> discretize(const CutoffSpec& c, int n);

}  // namespace baker
