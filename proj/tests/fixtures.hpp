#ifndef MCRES_TEST_FIXTURES_HPP
#define MCRES_TEST_FIXTURES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcres/ideal.hpp"

namespace fixtures {

inline constexpr const char* kExampleOne =
    "x1*x3*x4, x1*x3*x5, x1*x2*x4, x1*x4*x5, x2*x3*x4, x2*x3*x5";
inline constexpr const char* kRunning =
    "x1*x2, x1*x3, x1*x5, x2*x3, x2*x5, x3*x5, x4*x5";

inline mcres::OrderedIdeal example_one() { return mcres::parse_ideal(kExampleOne); }
inline mcres::OrderedIdeal running() { return mcres::parse_ideal(kRunning); }
inline mcres::OrderedIdeal maximal(std::size_t n) {
  std::string text;
  for (std::size_t i = 1; i <= n; ++i) text += (i > 1 ? ", x" : "x") + std::to_string(i);
  return mcres::parse_ideal(text);
}

/// Minimalized random monomials of degree 1..max_deg; may be a single
/// generator. Deterministic for a given engine state.
inline std::vector<mcres::Monomial> random_gens(std::mt19937_64& rng, std::size_t n,
                                                std::size_t k, int max_deg) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<mcres::Monomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    mcres::Monomial m(n);
    int d = deg(rng);
    for (int e = 0; e < d; ++e) m = m.times_variable(static_cast<int>(var(rng)));
    gens.push_back(m);
  }
  return mcres::minimalize(gens);
}

/// Random generators reordered into a linear-quotient order, kept only when
/// b is regular.
inline std::optional<mcres::OrderedIdeal> random_regular(std::mt19937_64& rng, std::size_t n,
                                                         std::size_t k, int max_deg) {
  auto gens = random_gens(rng, n, k, max_deg);
  auto order = mcres::find_linear_quotient_order(n, gens);
  if (!order) return std::nullopt;
  std::vector<mcres::Monomial> g;
  for (auto i : *order) g.push_back(gens[i]);
  mcres::OrderedIdeal ideal(n, g);
  if (!mcres::check_regularity(ideal).regular) return std::nullopt;
  return ideal;
}

}  // namespace fixtures

#endif
