#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baker/alphabet.hpp"
#include "baker/caps.hpp"
#include "baker/cutoff.hpp"
#include "baker/linalg.hpp"
#include "baker/quantize.hpp"

namespace baker {

struct SpectrumSource {
  int base = 0;
  std::string symbols;  // "{1,4}"
  int level = 0;
  std::string left_cutoff;
  std::string right_cutoff;
  bool trimmed = false;
  std::size_t dimension = 0;  // size of the matrix that was diagonalised
  std::optional<Perturbation> perturbation;
};

struct Spectrum {
  std::vector<cplx> eigenvalues;
  SpectrumSource source;
};

/// All eigenvalues of a square matrix (LAPACK zgeev, balanced Hessenberg QR).
/// Throws CapExceeded above caps.eig_dim and SolverFailure on LAPACK errors.
std::vector<cplx> eigenvalues_of(const CMatrix& m, const Caps& caps = default_caps());

/// Eigenvalues of the active (trimmed or dense) matrix.
Spectrum eigenvalues(const QuantumMap& m, const Caps& caps = default_caps());

double spectral_radius(const Spectrum& s);

/// |{lambda : |lambda| >= M^{-nu}}|, with a 1e-10 relative slack on the threshold.
std::size_t counting(const Spectrum& s, double nu);

/// |{lambda : ||lambda| - radius| < width}|.
std::size_t annulus_count(const Spectrum& s, double radius, double width);

/// min(2 nu + 2 delta - 1, delta), floored at 0.
double weyl_exponent(double delta, double nu);

struct WeylRow {
  double nu = 0.0;
  std::vector<std::size_t> counts;  // one per k
  std::vector<double> log_counts;   // log N_k(nu) / log M, NaN for zero counts
  std::size_t usable = 0;
  bool flagged = false;             // fewer than 2 usable points: no slope
  double slope = 0.0;
  double intercept = 0.0;
  double bound = 0.0;               // m(delta, nu)
};

struct WeylFit {
  Alphabet alphabet;
  double delta = 0.0;
  std::vector<int> levels;
  std::vector<std::size_t> dimensions;  // trimmed sizes per k
  std::vector<WeylRow> rows;
};

/// Least-squares slope of log N_k(nu) / log M against k for each nu.
/// Throws DegenerateFit when fewer than 2 levels are given.
WeylFit weyl_fit(const Alphabet& a, const std::vector<int>& levels, const std::vector<double>& nus,
                 const CutoffSpec& cutoff, const Caps& caps = default_caps());

/// The same fit on spectra that are already computed, one per level.
WeylFit weyl_fit_spectra(const Alphabet& a, const std::vector<int>& levels,
                         const std::vector<Spectrum>& spectra, const std::vector<double>& nus);

/// Union of C_k + m mod N over |m| <= 2 N^{1 - rho}, sorted.
std::vector<std::uint64_t> x_rho(const Alphabet& a, int k, double rho, const Caps& caps = default_caps());

struct Defects {
  int power = 0;  // ceil(rho k)
  double space_defect = 0.0;
  double fourier_defect = 0.0;
};

/// ||B^p (I - 1_X)|| and ||(I - F^* 1_X F) B^p|| with X = x_rho and
/// p = ceil(rho k), by power iteration (40 steps or relative change 1e-3).
/// Requires equal smooth cutoffs; throws NotSmoothCutoff otherwise.
Defects propagation_defect(const QuantumMap& m, double rho, const Caps& caps = default_caps());

/// ||(B - lambda)^{-1}|| for the dense matrix, by power iteration on the
/// inverse Gram operator through an LU factorisation. Throws NotAssembled,
/// or NearSingular when lambda is numerically an eigenvalue.
double resolvent_probe(const QuantumMap& m, cplx lambda);

struct MatchReport {
  std::size_t matched = 0;    // annulus eigenvalues on the fuller side
  double max_distance = 0.0;  // worst matched displacement
  std::size_t ambiguous = 0;  // pairs whose runner-up is within twice the distance
};

/// Greedy nearest pairing of the eigenvalues with |lambda| > r_min in each
/// spectrum against the whole other spectrum, in order of increasing
/// distance. Both directions are matched and the worse one is reported.
MatchReport match_spectra(const std::vector<cplx>& first, const std::vector<cplx>& second,
                          double r_min);

}  // namespace baker
