#ifndef MCRES_IDEAL_HPP
#define MCRES_IDEAL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mcres/monomial.hpp"

namespace mcres {

/// A minimal monomial generating set in a fixed order m_0, ..., m_{k-1}.
///
/// Generator and variable indices are 0-based in this API. set_of(j) is the
/// list of variables t with x_t in <m_0, ..., m_{j-1}> : m_j, which is
/// well defined for any order; it only describes the whole colon ideal when
/// the order has linear quotients.
class OrderedIdeal {
public:
  OrderedIdeal(std::size_t num_vars, std::vector<Monomial> gens);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const Monomial& gen(std::size_t j) const { return gens_.at(j); }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }

  const std::vector<int>& set_of(std::size_t j) const { return sets_.at(j); }
  bool in_set(std::size_t j, int var) const;

  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Same generators, listed in the given order.
  OrderedIdeal reordered(const std::vector<std::size_t>& order) const;

private:
  std::size_t num_vars_;
  std::vector<Monomial> gens_;
  std::vector<std::vector<int>> sets_;
};

/// Parses the text grammar (`x<i>` factors joined by `*`, monomials joined
/// by `,` or newlines, or bracketed exponent tuples) or the JSON form
/// {"n": int, "gens": [[...], ...]}. num_vars == 0 infers n from the input.
OrderedIdeal parse_ideal(std::string_view text, std::size_t num_vars = 0);

/// Minimal generators of <m_0, ..., m_{j-1}> : m_j.
std::vector<Monomial> colon_by_generator(const OrderedIdeal& ideal, std::size_t j);

struct LinearQuotientResult {
  bool ok = false;
  std::vector<std::vector<int>> sets;  ///< filled on success
  std::size_t failing_index = 0;       ///< first j whose colon is not linear
  Monomial witness;                    ///< a non-variable minimal generator
};

LinearQuotientResult is_linear_quotient_order(const OrderedIdeal& ideal);

/// Lexicographically smallest ordering (in input-index space) that has
/// linear quotients, or nullopt when none exists.
std::optional<std::vector<std::size_t>> find_linear_quotient_order(
    std::size_t num_vars, const std::vector<Monomial>& gens);

/// First ordering found by depth-first search (candidates in index order)
/// that has linear quotients and a regular b; nullopt when none exists or
/// the search visits more than budget prefixes.
std::optional<std::vector<std::size_t>> find_regular_order(std::size_t num_vars,
                                                           const std::vector<Monomial>& gens,
                                                           std::size_t budget = 200000);

/// Index of the first generator dividing m.
std::size_t decomp_b(const OrderedIdeal& ideal, const Monomial& m);

/// A decomposition-type rule tabulated on the products x_t m_j with
/// t in set(m_j). Products outside the table decompose to m_j itself,
/// which is what b does there (x_t m_j has no earlier divisor).
class DecompositionRule {
public:
  DecompositionRule() = default;
  /// table[j][t] is the target generator or -1 when t is not in set(m_j).
  DecompositionRule(const OrderedIdeal& ideal, std::vector<std::vector<int>> table);

  std::size_t apply(std::size_t j, int var) const;
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

  bool operator==(const DecompositionRule&) const = default;

private:
  std::vector<std::vector<int>> table_;
};

/// The rule b(m) = first generator dividing m, restricted to x_t m_j.
DecompositionRule canonical_rule(const OrderedIdeal& ideal);

struct RegularityReport {
  bool regular = true;
  /// (j, t) with set(rule(x_t m_j)) not contained in set(m_j).
  std::vector<std::pair<int, int>> containment_witnesses;
  bool star_commutes = true;
  /// (j, s, t) with rule(x_s rule(x_t m_j)) != rule(x_t rule(x_s m_j)).
  std::vector<std::array<int, 3>> star_witnesses;
};

RegularityReport check_rule_regularity(const OrderedIdeal& ideal,
                                       const DecompositionRule& rule);

/// Regularity of b. Throws NotLinearQuotients when the order fails.
RegularityReport check_regularity(const OrderedIdeal& ideal);

}  // namespace mcres

#endif
