#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace baker {

enum class Errc {
  OutOfRange,
  Duplicate,
  EmptySymbols,
  CapExceeded,
  Overflow,
  NonConvergence,
  DegenerateAlphabet,
  HypothesisViolated,
  NotAssembled,
  SymbolNotInAlphabet,
  SolverFailure,
  NearSingular,
  NotSmoothCutoff,
  DegenerateFit,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the Errc codes so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace baker
