#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "baker/additive.hpp"
#include "baker/errors.hpp"
#include "baker/fup.hpp"
#include "baker/modular.hpp"
#include "baker/parallel.hpp"
#include "baker/quantize.hpp"
#include "baker/spectral.hpp"
#include "search.hpp"

namespace baker::cli {

bool checked_pow_ok(int base, int k);

namespace {

Alphabet make_alphabet(int base, const std::string& symbols) {
  return Alphabet::create(base, parse_symbols(symbols));
}

std::string set_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

json perturbation_json(const std::optional<Perturbation>& p) {
  if (!p) return nullptr;
  return json{{"rel", p->rel}, {"seed", p->seed}, {"generator", p->generator}, {"epsilon", p->epsilon}};
}

int largest_level(const Alphabet& a, std::uint64_t cap, int k_limit) {
  int k = 0;
  double points = 1.0;
  while (k < k_limit) {
    points *= a.size();
    if (points > static_cast<double>(cap)) break;
    ++k;
  }
  return k;
}

// Largest k with |A|^k within cap and M^k representable.
int largest_level_for_scan(const Alphabet& a, std::uint64_t cap) {
  int k_limit = 0;
  while (checked_pow_ok(a.base(), k_limit + 1)) ++k_limit;
  return largest_level(a, cap, k_limit);
}

}  // namespace

std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) raise(Errc::InvalidArgument, "empty range " + text);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  if (out.empty()) raise(Errc::InvalidArgument, "empty list " + text);
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto colon = text.find(':', dots);
    if (colon == std::string::npos) raise(Errc::InvalidArgument, "real ranges need a step: lo..hi:step");
    const double lo = std::stod(text.substr(0, dots));
    const double hi = std::stod(text.substr(dots + 2, colon - dots - 2));
    const double step = std::stod(text.substr(colon + 1));
    if (!(step > 0.0) || hi < lo) raise(Errc::InvalidArgument, "bad real range " + text);
    const auto count = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int i = 0; i <= count; ++i) out.push_back(lo + i * step);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) raise(Errc::InvalidArgument, "empty list " + text);
  return out;
}

bool checked_pow_ok(int base, int k) {
  return checked_pow(static_cast<std::uint64_t>(base), k).has_value();
}

// ---------------------------------------------------------------- spectrum

json cmd_spectrum(const SpectrumOptions& o) {
  const Alphabet a = make_alphabet(o.base, o.symbols);
  const CutoffSpec left = o.cutoff.sharp ? CutoffSpec::sharp_one() : cutoff_tau(o.cutoff.tau);
  CutoffSpec right = left;
  if (o.cutoff.sharp_right) right = CutoffSpec::sharp_one();
  if (o.cutoff.tau_right) right = cutoff_tau(*o.cutoff.tau_right);

  QuantumMap map = o.no_trim ? build_map(a, o.k, left, right) : build_trimmed(a, o.k, left, right);
  if (o.perturb) map = perturb(map, *o.perturb, o.seed);
  const Spectrum s = eigenvalues(map);

  const double delta = dimension(a);
  const double m = a.base();
  json j = document("spectrum");
  j["params"] = {{"M", a.base()},
                 {"A", a.symbols_string()},
                 {"k", o.k},
                 {"left_cutoff", left.name()},
                 {"right_cutoff", right.name()},
                 {"trimmed", s.source.trimmed},
                 {"perturbation", perturbation_json(s.source.perturbation)}};
  j["delta"] = delta;
  j["dimension"] = s.source.dimension;
  j["spectral_radius"] = spectral_radius(s);

  json counts = json::array();
  for (double nu : o.nus) counts.push_back({{"nu", nu}, {"count", counting(s, nu)}});
  j["counts"] = counts;

  const double center = std::sqrt(static_cast<double>(a.size()) / m);
  j["band"] = {{"center", center}, {"width", o.band_width}, {"count", annulus_count(s, center, o.band_width)}};

  json circles;
  std::vector<Circle> drawn;
  if (!a.degenerate()) {
    const int k_fup = largest_level(a, default_caps().norm_dim, o.k);
    const double r = r_norm(a, k_fup);
    const double beta = -std::log(r) / (k_fup * std::log(m));
    circles["fup"] = {{"radius", std::pow(m, -beta)}, {"beta", beta}, {"k", k_fup}};
    drawn.push_back({"FUP", std::pow(m, -beta)});
  } else {
    circles["fup"] = nullptr;
  }
  circles["pressure_half"] = std::pow(m, delta - 0.5);
  circles["pressure_one_half"] = std::pow(m, -(1.0 - delta) / 2.0);
  drawn.push_back({"P(1/2)", std::pow(m, delta - 0.5)});
  drawn.push_back({"P(1)/2", std::pow(m, -(1.0 - delta) / 2.0)});
  j["reference_circles"] = circles;

  if (!o.csv_path.empty()) {
    std::string csv = "re,im\n";
    for (const auto& z : s.eigenvalues) csv += fmt17(z.real()) + "," + fmt17(z.imag()) + "\n";
    write_text(o.csv_path, csv);
  }
  if (!o.svg_path.empty()) {
    write_text(o.svg_path, scatter_svg(s.eigenvalues, drawn, a.to_string() + " k=" + std::to_string(o.k)));
  }
  j["outputs"] = {{"csv", o.csv_path.empty() ? json(nullptr) : json(o.csv_path)},
                  {"svg", o.svg_path.empty() ? json(nullptr) : json(o.svg_path)}};
  return j;
}

// --------------------------------------------------------------------- fup

json cmd_fup(const FupOptions& o) {
  const Alphabet a = make_alphabet(o.base, o.symbols);
  const FupReport r = fup_report(a, o.k_max);
  json j = document("fup");
  j["params"] = {{"M", a.base()}, {"A", a.symbols_string()}, {"kmax", o.k_max}};
  j["delta"] = r.delta;
  j["beta_trivial_lower"] = std::max(0.0, 0.5 - r.delta);
  j["beta_trivial_upper"] = (1.0 - r.delta) / 2.0;
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"k", l.k},
                      {"N", l.modulus},
                      {"r", l.r},
                      {"beta", l.beta},
                      {"bounds",
                       {{"trivial", l.bounds.trivial},
                        {"lower", l.bounds.lower},
                        {"additive", l.bounds.additive},
                        {"witness_constant", l.bounds.witness_constant},
                        {"witness_modulated", l.bounds.witness_modulated},
                        {"witness_symbol", l.bounds.witness_symbol}}}});
  }
  j["levels"] = levels;
  j["beta_best"] = r.beta_best;
  return j;
}

// -------------------------------------------------------------------- scan

namespace {

struct Table1Row {
  int base;
  int size;
  int k;
  const char* reference;
};

// Minimal beta_k - max(0, 1/2 - delta) over alphabets of fixed M and |A| at a fixed k.
constexpr Table1Row kTable1[] = {
    {10, 2, 12, "5.4e-3"}, {9, 2, 12, "6.5e-3"},  {8, 2, 12, "9.5e-3"},  {7, 2, 12, "1.3e-2"},
    {6, 2, 12, "2e-2"},    {5, 2, 12, "3.2e-2"},  {10, 3, 7, "3.7e-2"},  {4, 2, 12, "5.4e-2"},
    {9, 3, 7, "4.1e-2"},   {8, 3, 7, "3.4e-2"},   {7, 3, 7, "2.1e-2"},   {10, 4, 6, "7.3e-3"},
    {6, 3, 7, "8.7e-3"},   {3, 2, 12, "6.2e-3"},  {9, 4, 6, "3.6e-3"},   {8, 4, 6, "1.1e-3"},
    {5, 3, 7, "5.1e-4"},   {10, 5, 5, "1.3e-4"},  {7, 4, 6, "4.8e-5"},   {9, 5, 5, "4.6e-6"},
    {6, 4, 6, "3.5e-7"},   {8, 5, 5, "4.5e-8"},   {10, 6, 4, "4.1e-9"},  {4, 3, 7, "3e-7"},
    {9, 6, 4, "<1e-12"},   {7, 5, 5, "1.9e-11"},  {10, 7, 4, "<1e-12"},  {5, 4, 6, "<1e-12"},
    {8, 6, 4, "<1e-12"},   {9, 7, 4, "<1e-12"},   {6, 5, 5, "<1e-12"},   {10, 8, 4, "<1e-12"},
    {7, 6, 4, "<1e-12"},   {8, 7, 4, "<1e-12"},   {9, 8, 4, "<1e-12"},   {10, 9, 3, "<1e-12"},
};

bool arithmetic_progression(const Alphabet& a) {
  const auto s = a.symbols();
  for (std::size_t i = 2; i < s.size(); ++i) {
    if (s[i] - s[i - 1] != s[1] - s[0]) return false;
  }
  return true;
}

struct ScanItem {
  Alphabet alphabet;
  int k;
};

double beta_k(const ScanItem& item) {
  const double r = r_norm(item.alphabet, item.k);
  return -std::log(r) / (item.k * std::log(static_cast<double>(item.alphabet.base())));
}

}  // namespace

std::string cmd_scan(const ScanOptions& o) {
  if (o.cap > default_caps().norm_dim) raise(Errc::CapExceeded, "scan cap exceeds the norm cap");
  std::ostringstream csv;

  if (o.table1) {
    std::vector<ScanItem> items;
    std::vector<const Table1Row*> rows;
    for (const auto& row : kTable1) {
      if (!o.bases.empty() && std::find(o.bases.begin(), o.bases.end(), row.base) == o.bases.end()) continue;
      if (o.size && *o.size != row.size) continue;
      rows.push_back(&row);
      for (auto& a : enumerate_alphabets(row.base, row.size)) items.push_back({a, row.k});
    }
    const auto betas = parallel_map(items, beta_k, o.jobs);

    csv << "M,size,delta,k,beta_min,improvement,alphabet,arithmetic_progression,reference\n";
    std::size_t offset = 0;
    for (const Table1Row* row : rows) {
      std::size_t best = offset;
      const std::size_t count = enumerate_alphabets(row->base, row->size).size();
      for (std::size_t i = offset; i < offset + count; ++i) {
        if (betas[i] < betas[best]) best = i;
      }
      const Alphabet& a = items[best].alphabet;
      const double delta = dimension(a);
      csv << row->base << ',' << row->size << ',' << fmt17(delta) << ',' << row->k << ',' << fmt17(betas[best])
          << ',' << fmt17(betas[best] - std::max(0.0, 0.5 - delta)) << ',' << csv_field(a.symbols_string()) << ','
          << (arithmetic_progression(a) ? "true" : "false") << ',' << row->reference << '\n';
      offset += count;
    }
    return csv.str();
  }

  if (o.bases.empty()) raise(Errc::InvalidArgument, "scan needs --M unless --table1 is given");
  std::vector<ScanItem> items;
  for (int m : o.bases) {
    if (m < 3) raise(Errc::OutOfRange, "scan needs M >= 3");
    for (int size = 2; size < m; ++size) {
      if (o.size && *o.size != size) continue;
      for (auto& a : enumerate_alphabets(m, size)) {
        const int k = largest_level_for_scan(a, o.cap);
        if (k >= 1) items.push_back({a, k});
      }
    }
  }
  const auto betas = parallel_map(items, beta_k, o.jobs);
  csv << "M,alphabet,delta,k,beta_k\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Alphabet& a = items[i].alphabet;
    csv << a.base() << ',' << csv_field(a.symbols_string()) << ',' << fmt17(dimension(a)) << ',' << items[i].k
        << ',' << fmt17(betas[i]) << '\n';
  }
  return csv.str();
}

// ----------------------------------------------------------------- special

json cmd_special(const SpecialOptions& o) {
  if (o.m_max < 2 || o.m_max > 32) raise(Errc::OutOfRange, "--M-max must lie in [2, 32]");
  json j = document("special");
  j["params"] = {{"M_max", o.m_max}};
  json list = json::array();
  for (const auto& a : special_alphabets(o.m_max)) {
    const double r2 = r_norm(a, 2);
    const double expected = static_cast<double>(a.size()) / a.base();
    list.push_back({{"M", a.base()},
                    {"A", a.symbols_string()},
                    {"size", a.size()},
                    {"delta", dimension(a)},
                    {"is_special", is_special(a)},
                    {"r2", r2},
                    {"r2_expected", expected},
                    {"certified", std::abs(r2 - expected) <= 1e-9}});
  }
  j["count"] = list.size();
  j["alphabets"] = list;
  return j;
}

// ----------------------------------------------------------------- fuglede

json cmd_fuglede(const FugledeOptions& o) {
  json j = document("fuglede");
  auto case_json = [](const FugledeCase& c) {
    return json{{"M", c.alphabet.base()},
                {"A", c.alphabet.symbols_string()},
                {"spectral", c.spectrum.has_value()},
                {"spectrum", c.spectrum ? json(set_string(*c.spectrum)) : json(nullptr)},
                {"tiles", c.tiling.has_value()},
                {"tiling", c.tiling ? json(set_string(*c.tiling)) : json(nullptr)}};
  };

  if (o.base) {
    const auto c = fuglede_case(make_alphabet(*o.base, o.symbols));
    j["params"] = {{"M", *o.base}, {"A", c.alphabet.symbols_string()}};
    j["case"] = case_json(c);
    j["consistent"] = c.spectrum.has_value() == c.tiling.has_value();
    return j;
  }

  if (o.m_max < 2 || o.m_max > 20) raise(Errc::OutOfRange, "--M-max must lie in [2, 20]");
  if (o.m_max > 16 && !o.long_run) raise(Errc::InvalidArgument, "--M-max above 16 needs --long-run");
  std::vector<int> bases;
  for (int m = 2; m <= o.m_max; ++m) bases.push_back(m);
  const auto summaries = parallel_map(bases, fuglede_check, o.jobs);

  j["params"] = {{"M_max", o.m_max}};
  json per_base = json::array();
  json counter = json::array();
  std::uint64_t total = 0;
  for (const auto& s : summaries) {
    per_base.push_back({{"M", s.base}, {"checked", s.checked}, {"spectral", s.spectral}, {"tiles", s.tiles},
                        {"counterexamples", s.counterexamples.size()}});
    for (const auto& c : s.counterexamples) counter.push_back(case_json(c));
    total += s.checked;
  }
  j["checked"] = total;
  j["per_base"] = per_base;
  j["counterexamples"] = counter;
  return j;
}

// -------------------------------------------------------------------- weyl

json cmd_weyl(const WeylOptions& o) {
  const Alphabet a = make_alphabet(o.base, o.symbols);
  if (o.levels.size() < 2) raise(Errc::DegenerateFit, "a Weyl fit needs at least two levels");
  const CutoffSpec c = cutoff_tau(o.tau);
  const auto spectra = parallel_map(
      o.levels, [&](int k) { return eigenvalues(build_trimmed(a, k, c, c)); }, o.jobs);
  const WeylFit fit = weyl_fit_spectra(a, o.levels, spectra, o.nus);

  if (!o.csv_path.empty()) {
    std::ostringstream csv;
    csv << "nu";
    for (int k : o.levels) csv << ",k=" << k;
    csv << '\n';
    for (const auto& row : fit.rows) {
      csv << fmt17(row.nu);
      for (double y : row.log_counts) csv << ',' << fmt17(y);
      csv << '\n';
    }
    write_text(o.csv_path, csv.str());
  }

  json j = document("weyl");
  j["params"] = {{"M", a.base()}, {"A", a.symbols_string()}, {"k", o.levels}, {"cutoff", c.name()}};
  j["delta"] = fit.delta;
  j["dimensions"] = fit.dimensions;
  json rows = json::array();
  for (const auto& row : fit.rows) {
    json logs = json::array();
    for (double y : row.log_counts) logs.push_back(std::isnan(y) ? json(nullptr) : json(y));
    rows.push_back({{"nu", row.nu},
                    {"counts", row.counts},
                    {"log_counts", logs},
                    {"usable", row.usable},
                    {"flagged", row.flagged},
                    {"slope", row.flagged ? json(nullptr) : json(row.slope)},
                    {"intercept", row.flagged ? json(nullptr) : json(row.intercept)},
                    {"bound", row.bound}});
  }
  j["rows"] = rows;
  return j;
}

// ---------------------------------------------------------- cutoff-compare

json cmd_cutoff_compare(const CutoffCompareOptions& o) {
  const Alphabet a = make_alphabet(o.base, o.symbols);
  std::vector<CutoffSpec> cutoffs;
  for (double t : o.taus) cutoffs.push_back(cutoff_tau(t));
  if (o.sharp) cutoffs.push_back(CutoffSpec::sharp_one());
  if (cutoffs.size() < 2) raise(Errc::InvalidArgument, "cutoff-compare needs at least two cutoffs");

  const auto spectra = parallel_map(
      cutoffs, [&](const CutoffSpec& c) { return eigenvalues(build_trimmed(a, o.k, c, c)); }, o.jobs);

  auto outside = [&](const Spectrum& s) {
    return std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                         [&](const cplx& z) { return std::abs(z) > o.annulus; });
  };
  json j = document("cutoff-compare");
  j["params"] = {{"M", a.base()}, {"A", a.symbols_string()}, {"k", o.k}, {"annulus", o.annulus}};
  j["reference"] = {{"cutoff", cutoffs[0].name()},
                    {"dimension", spectra[0].source.dimension},
                    {"annulus_count", outside(spectra[0])}};
  json comps = json::array();
  for (std::size_t i = 1; i < cutoffs.size(); ++i) {
    const auto m = match_spectra(spectra[0].eigenvalues, spectra[i].eigenvalues, o.annulus);
    comps.push_back({{"cutoff", cutoffs[i].name()},
                     {"dimension", spectra[i].source.dimension},
                     {"annulus_count", outside(spectra[i])},
                     {"matched", m.matched},
                     {"max_distance", std::isinf(m.max_distance) ? json(nullptr) : json(m.max_distance)},
                     {"unmatched", std::isinf(m.max_distance)},
                     {"ambiguous", m.ambiguous}});
  }
  j["comparisons"] = comps;
  return j;
}

// ------------------------------------------------------------------ energy

json cmd_energy(const EnergyOptions& o) {
  const Alphabet a = make_alphabet(o.base, o.symbols);
  const EnergyProfile p = profile(a);
  const int m = a.base();
  json j = document("energy");
  j["params"] = {{"M", m}, {"A", a.symbols_string()}, {"k", o.k ? json(*o.k) : json(nullptr)}};
  j["portrait"] = {{"offset", -(m - 1)}, {"values", p.portrait}};
  j["portrait_mod"] = p.portrait_mod;
  j["energies"] = {{"offset", -(2 * m - 2)}, {"values", p.energies}};
  j["energies_mod"] = p.energies_mod;
  j["matrix"] = {{p.matrix[0][0], p.matrix[0][1]}, {p.matrix[1][0], p.matrix[1][1]}};
  j["rho"] = p.rho;
  j["gamma"] = p.gamma ? json(*p.gamma) : json(nullptr);

  if (o.k) {
    const BigInt rec = cantor_energy_mod(a, *o.k);
    const BigInt carry = cantor_energy_carry(a, *o.k);
    json ce = {{"k", *o.k},
               {"recursion", rec.str()},
               {"carry_recursion", carry.str()},
               {"value", rec.convert_to<double>()}};
    try {
      const std::uint64_t brute = cantor_energy_brute(a, *o.k);
      ce["brute"] = std::to_string(brute);
      ce["recursion_matches_brute"] = rec == BigInt(brute) && carry == rec;
    } catch (const Error& e) {
      if (e.code() != Errc::CapExceeded) throw;
      ce["brute"] = nullptr;
      ce["recursion_matches_brute"] = nullptr;
    }
    j["cantor_energy"] = ce;
  }
  return j;
}

// --------------------------------------------------------------- propagate

json cmd_propagate(const PropagateOptions& o) {
  const Alphabet a = make_alphabet(o.base, o.symbols);
  const CutoffSpec c = cutoff_tau(o.tau);
  const QuantumMap map(a, o.k, c, c);
  const Defects d = propagation_defect(map, o.rho);
  json j = document("propagate");
  j["params"] = {{"M", a.base()}, {"A", a.symbols_string()}, {"k", o.k}, {"rho", o.rho}, {"cutoff", c.name()}};
  j["power"] = d.power;
  j["x_rho_size"] = x_rho(a, o.k, o.rho).size();
  j["N"] = map.dimension();
  j["space_defect"] = d.space_defect;
  j["fourier_defect"] = d.fourier_defect;
  return j;
}

}  // namespace baker::cli
