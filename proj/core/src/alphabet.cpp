#include "baker/alphabet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "baker/errors.hpp"
#include "baker/modular.hpp"

namespace baker {

Alphabet Alphabet::create(int base, std::vector<int> symbols) {
  if (base < 2) raise(Errc::OutOfRange, "base must be at least 2, got " + std::to_string(base));
  if (symbols.empty()) raise(Errc::EmptySymbols, "alphabet needs at least one symbol");
  for (int s : symbols) {
    if (s < 0 || s >= base) {
      raise(Errc::OutOfRange,
            "symbol " + std::to_string(s) + " outside [0," + std::to_string(base) + ")");
    }
  }
  std::sort(symbols.begin(), symbols.end());
  if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end()) {
    raise(Errc::Duplicate, "repeated symbol in alphabet");
  }
  return Alphabet(base, std::move(symbols));
}

bool Alphabet::contains(int symbol) const noexcept {
  return std::binary_search(symbols_.begin(), symbols_.end(), symbol);
}

std::string Alphabet::symbols_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out << ',';
    out << symbols_[i];
  }
  out << '}';
  return out.str();
}

std::string Alphabet::to_string() const {
  return "(" + std::to_string(base_) + "," + symbols_string() + ")";
}

void require_nondegenerate(const Alphabet& a, const char* operation) {
  if (a.degenerate()) {
    raise(Errc::DegenerateAlphabet,
          std::string(operation) + " needs 1 < |A| < M, got " + a.to_string());
  }
}

double dimension(const Alphabet& a) {
  return std::log(static_cast<double>(a.size())) / std::log(static_cast<double>(a.base()));
}

double pressure(const Alphabet& a, double s) { return dimension(a) - s; }

std::uint64_t modulus_for(const Alphabet& a, int k) {
  if (k < 1) raise(Errc::OutOfRange, "level k must be at least 1");
  auto n = checked_pow(static_cast<std::uint64_t>(a.base()), k);
  if (!n) raise(Errc::Overflow, "M^k does not fit in 63 bits for " + a.to_string());
  return *n;
}

CantorSet cantor_set(const Alphabet& a, int k, const Caps& caps) {
  const std::uint64_t n = modulus_for(a, k);
  const auto count = checked_pow(static_cast<std::uint64_t>(a.size()), k);
  if (!count || *count > caps.cantor_points) {
    raise(Errc::CapExceeded, "|A|^k exceeds the Cantor point cap for " + a.to_string());
  }
  // Build by prepending the most significant digit so the result stays sorted.
  std::vector<std::uint64_t> points{0};
  std::uint64_t place = 1;
  for (int level = 0; level < k; ++level) {
    std::vector<std::uint64_t> next;
    next.reserve(points.size() * a.symbols().size());
    for (int digit : a.symbols()) {
      for (std::uint64_t p : points) next.push_back(p + static_cast<std::uint64_t>(digit) * place);
    }
    points = std::move(next);
    place *= static_cast<std::uint64_t>(a.base());
  }
  return CantorSet{k, n, std::move(points)};
}

std::vector<Interval> cantor_intervals(const Alphabet& a, int k, const Caps& caps) {
  const CantorSet c = cantor_set(a, k, caps);
  const double n = static_cast<double>(c.modulus);
  std::vector<Interval> out;
  out.reserve(c.points.size());
  for (std::uint64_t j : c.points) {
    out.push_back({static_cast<double>(j) / n, static_cast<double>(j + 1) / n});
  }
  return out;
}

std::complex<double> g_function(const Alphabet& a, double x) {
  std::complex<double> sum = 0.0;
  for (int s : a.symbols()) {
    double phase = s * x;
    phase -= std::floor(phase);
    const double angle = -2.0 * std::numbers::pi * phase;
    sum += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum / std::sqrt(static_cast<double>(a.base()));
}

std::complex<double> g_function_rational(const Alphabet& a, std::uint64_t num, std::uint64_t den) {
  const std::uint64_t reduced = num % den;
  std::complex<double> sum = 0.0;
  for (int s : a.symbols()) {
    sum += unit_root(mul_mod(static_cast<std::uint64_t>(s), reduced, den), den);
  }
  return sum / std::sqrt(static_cast<double>(a.base()));
}

namespace {

// |G_A(d/M)| <= tol for d = 0..M-1, as a bitmask (bit d set when G vanishes).
std::uint64_t zero_mask(const Alphabet& a, double tol) {
  std::uint64_t mask = 0;
  const auto m = static_cast<std::uint64_t>(a.base());
  for (std::uint64_t d = 1; d < m; ++d) {
    if (std::abs(g_function_rational(a, d, m)) <= tol) mask |= std::uint64_t{1} << d;
  }
  return mask;
}

void require_small_base(const Alphabet& a, const char* operation) {
  if (a.base() > 64) {
    raise(Errc::OutOfRange, std::string(operation) + " supports bases up to 64");
  }
}

std::uint64_t rotate(std::uint64_t mask, int shift, int m) {
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  if (shift == 0) return mask;
  return ((mask << shift) | (mask >> (m - shift))) & full;
}

}  // namespace

bool is_special(const Alphabet& a, double tol) {
  require_nondegenerate(a, "is_special");
  const auto m = static_cast<std::uint64_t>(a.base());
  for (int b : a.symbols()) {
    for (int b2 : a.symbols()) {
      if (b == b2) continue;
      const std::uint64_t diff = static_cast<std::uint64_t>((b - b2 + a.base()) % a.base());
      if (std::abs(g_function_rational(a, diff, m)) > tol) return false;
    }
  }
  return true;
}

Alphabet canonical_form(const Alphabet& a) {
  const int m = a.base();
  std::vector<int> best(a.symbols().begin(), a.symbols().end());
  std::vector<int> image(best.size());
  for (int d = 1; d < m; ++d) {
    if (std::gcd(d, m) != 1) continue;
    for (int q = 0; q < m; ++q) {
      std::transform(a.symbols().begin(), a.symbols().end(), image.begin(),
                     [&](int x) { return static_cast<int>((static_cast<long long>(d) * x + q) % m); });
      std::sort(image.begin(), image.end());
      if (image < best) best = image;
    }
  }
  return Alphabet::create(m, std::move(best));
}

std::optional<std::vector<int>> tiles(const Alphabet& a) {
  require_small_base(a, "tiles");
  const int m = a.base();
  if (m % a.size() != 0) return std::nullopt;

  std::uint64_t shape = 0;
  for (int s : a.symbols()) shape |= std::uint64_t{1} << s;
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

  std::optional<std::vector<int>> best;
  std::vector<int> chosen;

  // Exact cover: the smallest uncovered residue x must be hit by some a + t,
  // so t ranges over x - a. Every tiling is enumerated and the least kept.
  auto search = [&](auto&& self, std::uint64_t covered) -> void {
    if (covered == full) {
      std::vector<int> t = chosen;
      std::sort(t.begin(), t.end());
      if (!best || t < *best) best = std::move(t);
      return;
    }
    const int x = std::countr_one(covered);
    for (int s : a.symbols()) {
      const int t = ((x - s) % m + m) % m;
      const std::uint64_t placed = rotate(shape, t, m);
      if (placed & covered) continue;
      chosen.push_back(t);
      self(self, covered | placed);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return best;
}

std::optional<std::vector<int>> spectrum_set(const Alphabet& a, double tol) {
  require_small_base(a, "spectrum_set");
  const int m = a.base();
  const std::uint64_t zeros = zero_mask(a, tol);

  const auto in_zero_set = [&](int diff) {
    diff = ((diff % m) + m) % m;
    return diff != 0 && ((zeros >> diff) & 1U);
  };

  bool self_spectral = true;
  for (int b : a.symbols()) {
    for (int b2 : a.symbols()) {
      if (b != b2 && !in_zero_set(b - b2)) self_spectral = false;
    }
  }
  if (self_spectral) return std::vector<int>(a.symbols().begin(), a.symbols().end());

  // Spectra are translation invariant, so the least one contains 0 and the
  // rest is a clique of size |A| - 1 in the Cayley graph on the zero set.
  std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x != y && in_zero_set(y - x)) adjacency[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
    }
  }

  const int target = a.size();
  std::vector<int> chosen{0};
  auto search = [&](auto&& self, std::uint64_t candidates) -> bool {
    if (static_cast<int>(chosen.size()) == target) return true;
    const int needed = target - static_cast<int>(chosen.size());
    while (candidates != 0) {
      if (std::popcount(candidates) < needed) return false;
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      chosen.push_back(v);
      // Only vertices above v keep the clique in increasing order.
      const std::uint64_t above = v == 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
      if (self(self, candidates & adjacency[static_cast<std::size_t>(v)] & above)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, adjacency[0])) return chosen;
  return std::nullopt;
}

std::vector<Alphabet> enumerate_alphabets(int base, int size) {
  if (base < 2 || size <= 1 || size >= base) {
    raise(Errc::DegenerateAlphabet,
          "enumerate_alphabets needs 1 < size < M, got M=" + std::to_string(base) +
              " size=" + std::to_string(size));
  }
  std::vector<Alphabet> out;
  std::vector<int> combo(static_cast<std::size_t>(size));
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    out.push_back(Alphabet::create(base, combo));
    int i = size - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == base - size + i) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<int> parse_symbols(const std::string& text) {
  auto strip = [](std::string s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return std::string();
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
  };
  std::string body = strip(text);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  std::vector<int> out;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = strip(item);
    if (item.empty()) raise(Errc::InvalidArgument, "empty symbol in list '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      raise(Errc::InvalidArgument, "bad symbol '" + item + "'");
    }
    if (used != item.size()) raise(Errc::InvalidArgument, "bad symbol '" + item + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace baker
