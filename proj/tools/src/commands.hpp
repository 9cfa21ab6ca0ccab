#pragma once

#include <optional>
#include <string>
#include <vector>

#include "output.hpp"

namespace baker::cli {

struct CutoffFlags {
  double tau = 0.05;
  bool sharp = false;
  std::optional<double> tau_right;  // right cutoff differs from the left one
  bool sharp_right = false;
};

struct SpectrumOptions {
  int base = 0;
  std::string symbols;
  int k = 1;
  CutoffFlags cutoff;
  bool no_trim = false;
  std::optional<double> perturb;
  std::uint64_t seed = 1;
  std::vector<double> nus;
  double band_width = 0.05;
  std::string csv_path;
  std::string svg_path;
};

struct FupOptions {
  int base = 0;
  std::string symbols;
  int k_max = 4;
  unsigned jobs = 1;
};

struct ScanOptions {
  std::vector<int> bases;  // empty with --table1 means every row
  std::optional<int> size;
  std::uint64_t cap = 5000;
  bool table1 = false;
  unsigned jobs = 1;
};

struct SpecialOptions {
  int m_max = 12;
};

struct FugledeOptions {
  int m_max = 8;
  std::optional<int> base;  // single-set mode with symbols
  std::string symbols;
  bool long_run = false;
  unsigned jobs = 1;
};

struct WeylOptions {
  int base = 0;
  std::string symbols;
  std::vector<int> levels;
  std::vector<double> nus;
  double tau = 0.05;
  std::string csv_path;
  unsigned jobs = 1;
};

struct CutoffCompareOptions {
  int base = 0;
  std::string symbols;
  int k = 1;
  std::vector<double> taus;
  bool sharp = false;
  double annulus = 0.25;
  unsigned jobs = 1;
};

struct EnergyOptions {
  int base = 0;
  std::string symbols;
  std::optional<int> k;
};

struct PropagateOptions {
  int base = 0;
  std::string symbols;
  int k = 1;
  double rho = 0.5;
  double tau = 0.05;
};

json cmd_spectrum(const SpectrumOptions& o);
json cmd_fup(const FupOptions& o);
/// Returns the CSV text.
std::string cmd_scan(const ScanOptions& o);
json cmd_special(const SpecialOptions& o);
json cmd_fuglede(const FugledeOptions& o);
/// Writes the per-k CSV to o.csv_path when set and returns the fit.
json cmd_weyl(const WeylOptions& o);
json cmd_cutoff_compare(const CutoffCompareOptions& o);
json cmd_energy(const EnergyOptions& o);
json cmd_propagate(const PropagateOptions& o);

/// "3..5" or "3,4,5".
std::vector<int> parse_int_range(const std::string& text);
/// "0.1,0.2" or "0.1..1.0:0.1".
std::vector<double> parse_real_list(const std::string& text);

}  // namespace baker::cli
