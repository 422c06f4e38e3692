#include "mcres/error.hpp"

namespace mcres {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_monomial: return "MalformedMonomial";
    case ErrorKind::duplicate_generator: return "DuplicateGenerator";
    case ErrorKind::non_minimal_generators: return "NonMinimalGenerators";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::not_in_ideal: return "NotInIdeal";
    case ErrorKind::not_linear_quotients: return "NotLinearQuotients";
    case ErrorKind::not_regular: return "NotRegular";
    case ErrorKind::non_commuting_chain_map: return "NonCommutingChainMap";
    case ErrorKind::alpha_not_in_set: return "AlphaNotInSet";
    case ErrorKind::degenerate_chain: return "DegenerateChain";
    case ErrorKind::precondition: return "PreconditionViolation";
    case ErrorKind::orientation_clash: return "OrientationClash";
    case ErrorKind::mismatch_with_algebraic_differential:
      return "MismatchWithAlgebraicDifferential";
    case ErrorKind::not_cointerval: return "NotCointerval";
    case ErrorKind::symbol_not_in_complex: return "SymbolNotInComplex";
    case ErrorKind::not_in_set: return "NotInSet";
    case ErrorKind::too_many_generators: return "TooManyGenerators";
    case ErrorKind::non_monotone_labels: return "NonMonotoneLabels";
    case ErrorKind::search_space_too_large: return "SearchSpaceTooLarge";
    case ErrorKind::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace mcres
