#ifndef MCRES_ERROR_HPP
#define MCRES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcres {

enum class ErrorKind {
  malformed_monomial,
  duplicate_generator,
  non_minimal_generators,
  index_out_of_range,
  not_in_ideal,
  not_linear_quotients,
  not_regular,
  non_commuting_chain_map,
  alpha_not_in_set,
  degenerate_chain,
  precondition,
  orientation_clash,
  mismatch_with_algebraic_differential,
  not_cointerval,
  symbol_not_in_complex,
  not_in_set,
  too_many_generators,
  non_monotone_labels,
  search_space_too_large,
  invalid_input,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; kind() lets
/// callers (and the CLI exit-code mapping) tell them apart.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace mcres

#endif
