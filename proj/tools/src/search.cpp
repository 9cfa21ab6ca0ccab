#include "search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <set>

#include "baker/errors.hpp"
#include "baker/modular.hpp"

namespace baker::cli {
namespace {

// Depth-first walk over subsets {0} u S of Z_M, keeping the sums
// sum_{a in A} omega^{a d} for every d and the difference mask up to date.
class SpecialWalker {
 public:
  SpecialWalker(int base, double tol)
      : m_(base), limit_(tol * std::sqrt(static_cast<double>(base))), roots_(static_cast<std::size_t>(base)),
        sums_(static_cast<std::size_t>(base), std::complex<double>(1.0, 0.0)) {
    for (int j = 0; j < m_; ++j) {
      roots_[static_cast<std::size_t>(j)] = unit_root(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(m_));
    }
    chosen_.push_back(0);
  }

  std::vector<Alphabet> run() {
    descend(1, 0);
    return found_;
  }

 private:
  void descend(int start, std::uint64_t diffs) {
    for (int x = start; x < m_; ++x) {
      std::uint64_t added = diffs;
      for (int a : chosen_) {
        added |= std::uint64_t{1} << ((x - a + m_) % m_);
        added |= std::uint64_t{1} << ((a - x + m_) % m_);
      }
      for (int d = 0; d < m_; ++d) sums_[static_cast<std::size_t>(d)] += roots_[static_cast<std::size_t>((x * d) % m_)];
      chosen_.push_back(x);

      if (static_cast<int>(chosen_.size()) < m_ && vanishes(added)) {
        found_.push_back(Alphabet::create(m_, chosen_));
      }
      descend(x + 1, added);

      chosen_.pop_back();
      for (int d = 0; d < m_; ++d) sums_[static_cast<std::size_t>(d)] -= roots_[static_cast<std::size_t>((x * d) % m_)];
    }
  }

  bool vanishes(std::uint64_t diffs) const {
    while (diffs != 0) {
      const int d = std::countr_zero(diffs);
      diffs &= diffs - 1;
      if (std::abs(sums_[static_cast<std::size_t>(d)]) > limit_) return false;
    }
    return true;
  }

  int m_;
  double limit_;
  std::vector<std::complex<double>> roots_;
  std::vector<std::complex<double>> sums_;
  std::vector<int> chosen_;
  std::vector<Alphabet> found_;
};

}  // namespace

std::vector<Alphabet> special_alphabets_with_zero(int base, double tol) {
  if (base < 2 || base > 63) raise(Errc::OutOfRange, "special-alphabet search supports 2 <= M <= 63");
  auto found = SpecialWalker(base, tol).run();
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Alphabet> special_alphabets(int m_max, double tol) {
  std::set<Alphabet> reps;
  for (int m = 2; m <= m_max; ++m) {
    for (const auto& a : special_alphabets_with_zero(m, tol)) reps.insert(canonical_form(a));
  }
  return {reps.begin(), reps.end()};
}

FugledeCase fuglede_case(const Alphabet& a) {
  return FugledeCase{a, spectrum_set(a), tiles(a)};
}

FugledeSummary fuglede_check(int base) {
  if (base < 2 || base > 32) raise(Errc::OutOfRange, "Fuglede check supports 2 <= M <= 32");
  FugledeSummary s;
  s.base = base;
  const std::uint64_t subsets = std::uint64_t{1} << (base - 1);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> symbols{0};
    for (int b = 1; b < base; ++b) {
      if (mask >> (b - 1) & 1U) symbols.push_back(b);
    }
    auto c = fuglede_case(Alphabet::create(base, std::move(symbols)));
    ++s.checked;
    if (c.spectrum) ++s.spectral;
    if (c.tiling) ++s.tiles;
    if (c.spectrum.has_value() != c.tiling.has_value()) s.counterexamples.push_back(std::move(c));
  }
  return s;
}

}  // namespace baker::cli
