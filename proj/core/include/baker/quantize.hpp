#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baker/alphabet.hpp"
#include "baker/caps.hpp"
#include "baker/cutoff.hpp"
#include "baker/linalg.hpp"

namespace baker {

struct TrimmedMatrix {
  CMatrix matrix;
  std::vector<std::size_t> kept;  // kept row and column indices, ascending
};

struct Perturbation {
  double rel = 0.0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  std::string generator = "mt19937_64";
};

/// The open quantum map
///   B = F_N^* blockdiag_M(chi_{N/M} F_{N/M} chi'_{N/M}) I_{A,M}
/// with the left cutoff chi on the output side of each block and the right
/// cutoff chi' on the input side. Matrices are optional; the operator can be
/// applied without them.
class QuantumMap {
 public:
  QuantumMap(const Alphabet& a, int k, const CutoffSpec& left, const CutoffSpec& right);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int level() const noexcept { return level_; }
  std::uint64_t dimension() const noexcept { return n_; }
  std::uint64_t block() const noexcept { return block_; }
  const CutoffSpec& left() const noexcept { return left_; }
  const CutoffSpec& right() const noexcept { return right_; }
  const std::vector<double>& left_values() const noexcept { return chi_left_; }
  const std::vector<double>& right_values() const noexcept { return chi_right_; }

  const std::optional<CMatrix>& dense() const noexcept { return dense_; }
  const std::optional<TrimmedMatrix>& trimmed() const noexcept { return trimmed_; }
  const std::optional<Perturbation>& perturbation() const noexcept { return perturbation_; }

  /// The trimmed matrix when present, else the dense one. Throws NotAssembled.
  const CMatrix& active() const;

  /// Indices whose columns may be nonzero: block in A, chi'(l/n) != 0, and
  /// chi not identically zero.
  std::vector<std::size_t> support() const;

  /// Column l of B, of length N.
  CVector column(std::size_t l) const;

  /// B v in O(N log N).
  CVector apply(const CVector& v) const;
  /// B^* v.
  CVector apply_adjoint(const CVector& v) const;

 private:
  friend QuantumMap build_map(const Alphabet&, int, const CutoffSpec&, const CutoffSpec&, const Caps&);
  friend QuantumMap build_trimmed(const Alphabet&, int, const CutoffSpec&, const CutoffSpec&,
                                  const Caps&);
  friend QuantumMap trim(const QuantumMap&);
  friend QuantumMap perturb(const QuantumMap&, double, std::uint64_t);

  Alphabet alphabet_;
  int level_;
  std::uint64_t n_;
  std::uint64_t block_;
  CutoffSpec left_;
  CutoffSpec right_;
  std::vector<double> chi_left_;
  std::vector<double> chi_right_;
  std::optional<CMatrix> dense_;
  std::optional<TrimmedMatrix> trimmed_;
  std::optional<Perturbation> perturbation_;
};

/// Assembles the dense N x N matrix. Throws CapExceeded above caps.dense_n.
QuantumMap build_map(const Alphabet& a, int k, const CutoffSpec& left, const CutoffSpec& right,
                     const Caps& caps = default_caps());

/// Assembles only the trimmed matrix, column by column, without forming the
/// dense one. Equal to trim(build_map(...)).
QuantumMap build_trimmed(const Alphabet& a, int k, const CutoffSpec& left, const CutoffSpec& right,
                         const Caps& caps = default_caps());

/// Drops the zero columns of the dense matrix and the matching rows.
/// Throws NotAssembled.
QuantumMap trim(const QuantumMap& m);

/// Adds eps Q to the active matrix, Q entrywise uniform on [0, 1] from a
/// seeded mt19937_64, with eps chosen so that ||eps Q|| = rel ||B|| (both
/// norms by power iteration to relative tolerance 1e-6). A perturbed
/// trimmed map drops its dense matrix. Throws NotAssembled.
QuantumMap perturb(const QuantumMap& m, double rel, std::uint64_t seed);

}  // namespace baker
