#include "cli.hpp"

#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "baker/errors.hpp"
#include "baker/parallel.hpp"
#include "commands.hpp"

namespace baker::cli {
namespace {

int code_for(Errc e) {
  switch (e) {
    case Errc::CapExceeded:
      return 3;
    case Errc::SolverFailure:
    case Errc::NonConvergence:
    case Errc::NearSingular:
      return 4;
    default:
      return 2;
  }
}

// Flags shared by every alphabet-taking subcommand.
void alphabet_flags(CLI::App* app, int& base, std::string& symbols) {
  app->add_option("--M", base, "base M >= 2")->required();
  app->add_option("--A", symbols, "alphabet symbols, comma separated")->required();
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Open quantum baker's maps: fractal uncertainty exponents and resonance spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "baker 0.1.0");
  unsigned jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);

  std::string json_out = "-";

  // spectrum
  SpectrumOptions spec;
  std::string spec_nus = "0.1..1.0:0.1";
  auto* sp = app.add_subcommand("spectrum", "eigenvalues of the quantized map B_N");
  alphabet_flags(sp, spec.base, spec.symbols);
  sp->add_option("--k", spec.k, "level, N = M^k")->required();
  sp->add_option("--tau", spec.cutoff.tau, "smooth cutoff width in (0, 1/2]");
  sp->add_flag("--sharp", spec.cutoff.sharp, "use the cutoff identically 1");
  sp->add_option("--tau-right", spec.cutoff.tau_right, "separate width for the right cutoff");
  sp->add_flag("--sharp-right", spec.cutoff.sharp_right, "right cutoff identically 1");
  sp->add_flag("--no-trim", spec.no_trim, "eigensolve the full N x N matrix");
  sp->add_option("--perturb", spec.perturb, "relative size of a random real perturbation");
  sp->add_option("--seed", spec.seed, "perturbation seed");
  sp->add_option("--nu", spec_nus, "counting thresholds: list or lo..hi:step");
  sp->add_option("--band-width", spec.band_width, "half width of the band around sqrt(|A|/M)");
  sp->add_option("--out", spec.csv_path, "eigenvalue CSV (re,im)");
  sp->add_option("--svg", spec.svg_path, "SVG scatter plot");
  sp->add_option("--json", json_out, "JSON summary path (default stdout)");

  // fup
  FupOptions fup;
  auto* fp = app.add_subcommand("fup", "fractal uncertainty exponents beta_k and bounds");
  alphabet_flags(fp, fup.base, fup.symbols);
  fp->add_option("--kmax", fup.k_max, "largest level");
  fp->add_option("--json", json_out, "output path (default stdout)");

  // scan
  ScanOptions scan;
  std::string scan_bases;
  std::string scan_out = "-";
  auto* sc = app.add_subcommand("scan", "beta_k over all alphabets");
  sc->add_option("--M", scan_bases, "bases: list or lo..hi");
  sc->add_option("--size", scan.size, "restrict to |A| = size");
  sc->add_option("--cap", scan.cap, "largest |A|^k");
  sc->add_flag("--table1", scan.table1, "per-(M,|A|) minima at the tabulated levels");
  sc->add_option("--out", scan_out, "CSV path (default stdout)");

  // special
  SpecialOptions special;
  auto* sl = app.add_subcommand("special", "special alphabets up to a base");
  sl->add_option("--M-max", special.m_max, "largest base (<= 32)");
  sl->add_option("--json", json_out, "output path (default stdout)");

  // fuglede
  FugledeOptions fug;
  int fug_base = 0;
  auto* fg = app.add_subcommand("fuglede", "spectral <=> tile over all subsets of Z_M");
  fg->add_option("--M-max", fug.m_max, "largest base (<= 20)");
  fg->add_flag("--long-run", fug.long_run, "allow M-max above 16");
  auto* fg_base = fg->add_option("--M", fug_base, "single-set mode: base");
  auto* fg_syms = fg->add_option("--A", fug.symbols, "single-set mode: symbols");
  fg_base->needs(fg_syms);
  fg_syms->needs(fg_base);
  fg->add_option("--json", json_out, "output path (default stdout)");

  // weyl
  WeylOptions weyl;
  std::string weyl_levels;
  std::string weyl_nus = "0.1..1.0:0.1";
  auto* wy = app.add_subcommand("weyl", "fractal Weyl law counts and slopes");
  alphabet_flags(wy, weyl.base, weyl.symbols);
  wy->add_option("--k", weyl_levels, "levels: list or lo..hi")->required();
  wy->add_option("--nu", weyl_nus, "thresholds: list or lo..hi:step");
  wy->add_option("--tau", weyl.tau, "cutoff width");
  wy->add_option("--out", weyl.csv_path, "CSV of log N_k(nu) / log M");
  wy->add_option("--json", json_out, "fit summary path (default stdout)");

  // cutoff-compare
  CutoffCompareOptions cmp;
  std::string cmp_taus = "0.05,0.2";
  auto* cc = app.add_subcommand("cutoff-compare", "spectra for several cutoffs, matched in an annulus");
  alphabet_flags(cc, cmp.base, cmp.symbols);
  cc->add_option("--k", cmp.k, "level")->required();
  cc->add_option("--taus", cmp_taus, "cutoff widths; the first is the reference");
  cc->add_flag("--sharp", cmp.sharp, "also compare the cutoff identically 1");
  cc->add_option("--annulus", cmp.annulus, "match eigenvalues with |lambda| above this");
  cc->add_option("--json", json_out, "output path (default stdout)");

  // energy
  EnergyOptions en;
  auto* eg = app.add_subcommand("energy", "additive energy profile and Cantor-set energies");
  alphabet_flags(eg, en.base, en.symbols);
  eg->add_option("--k", en.k, "level for the Cantor-set energy");
  eg->add_option("--json", json_out, "output path (default stdout)");

  // propagate
  PropagateOptions pr;
  auto* pg = app.add_subcommand("propagate", "concentration defects of B_N^T on X_rho");
  alphabet_flags(pg, pr.base, pr.symbols);
  pg->add_option("--k", pr.k, "level")->required();
  pg->add_option("--rho", pr.rho, "propagation exponent in (0, 1)");
  pg->add_option("--tau", pr.tau, "cutoff width");
  pg->add_option("--json", json_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sp->parsed()) {
      spec.nus = parse_real_list(spec_nus);
      write_text(json_out, dump(cmd_spectrum(spec)));
    } else if (fp->parsed()) {
      fup.jobs = jobs;
      write_text(json_out, dump(cmd_fup(fup)));
    } else if (sc->parsed()) {
      if (!scan_bases.empty()) scan.bases = parse_int_range(scan_bases);
      scan.jobs = jobs;
      write_text(scan_out, cmd_scan(scan));
    } else if (sl->parsed()) {
      write_text(json_out, dump(cmd_special(special)));
    } else if (fg->parsed()) {
      if (fg_base->count() > 0) fug.base = fug_base;
      fug.jobs = jobs;
      write_text(json_out, dump(cmd_fuglede(fug)));
    } else if (wy->parsed()) {
      weyl.levels = parse_int_range(weyl_levels);
      weyl.nus = parse_real_list(weyl_nus);
      weyl.jobs = jobs;
      write_text(json_out, dump(cmd_weyl(weyl)));
    } else if (cc->parsed()) {
      cmp.taus = parse_real_list(cmp_taus);
      cmp.jobs = jobs;
      write_text(json_out, dump(cmd_cutoff_compare(cmp)));
    } else if (eg->parsed()) {
      write_text(json_out, dump(cmd_energy(en)));
    } else if (pg->parsed()) {
      write_text(json_out, dump(cmd_propagate(pr)));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code_for(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error [InvalidArgument]: malformed number: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error [OutOfRange]: number out of range: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace baker::cli
