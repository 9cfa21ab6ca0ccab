#include "baker/errors.hpp"

namespace baker {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Duplicate: return "Duplicate";
    case Errc::EmptySymbols: return "EmptySymbols";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Overflow: return "Overflow";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::DegenerateAlphabet: return "DegenerateAlphabet";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotAssembled: return "NotAssembled";
    case Errc::SymbolNotInAlphabet: return "SymbolNotInAlphabet";
    case Errc::SolverFailure: return "SolverFailure";
    case Errc::NearSingular: return "NearSingular";
    case Errc::NotSmoothCutoff: return "NotSmoothCutoff";
    case Errc::DegenerateFit: return "DegenerateFit";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace baker
