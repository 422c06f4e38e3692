#ifndef MCRES_CORPUS_HPP
#define MCRES_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcres/cointerval.hpp"
#include "mcres/ideal.hpp"

namespace mcres {

/// Minimal generators of the smallest strongly stable ideal containing the
/// seeds (closure under x_j -> x_i for i < j).
std::vector<Monomial> borel_closure(std::size_t num_vars, const std::vector<Monomial>& seeds);

/// Degree first, then lexicographically decreasing exponent vectors.
OrderedIdeal stable_order(std::size_t num_vars, std::vector<Monomial> gens);

bool is_strongly_stable(const OrderedIdeal& ideal);
bool is_squarefree_strongly_stable(const DGraph& h);

/// Every strongly stable ideal of the polynomial ring in num_vars variables
/// with generators of degree at most max_deg, each in stable order.
std::vector<OrderedIdeal> all_stable_ideals(std::size_t num_vars, int max_deg);

/// Every nonempty cointerval d-graph on {1..n}, built layer by layer.
std::vector<DGraph> all_cointerval_graphs(int d, int n);

/// Random ideals reordered to linear quotients with regular b.
std::vector<OrderedIdeal> random_lq_corpus(std::size_t count, std::uint64_t seed,
                                           std::size_t max_gens = 8, std::size_t max_vars = 6);

struct CorpusTags {
  bool linear_quotients = false;
  bool regular = false;
  bool cointerval = false;
  bool stable = false;
};

struct CorpusItem {
  std::string name;
  std::string family;  ///< "stable", "cointerval", "example" or "random"
  OrderedIdeal ideal;
  std::optional<DGraph> graph;
  CorpusTags tags;
};

struct CorpusSpec {
  std::size_t stable_vars = 4;
  int stable_degree = 3;
  int graph_vars = 6;
  int graph_max_d = 3;
  bool examples = true;
  std::size_t random_count = 0;
  std::uint64_t seed = 1;
};

/// The ideal itself when b is regular in its order, otherwise the first
/// regular linear-quotient reordering found within the search budget.
std::optional<OrderedIdeal> regular_form(const OrderedIdeal& ideal, std::size_t budget = 50000);

CorpusTags tag_ideal(const OrderedIdeal& ideal);
std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec);

/// The two worked examples: linear quotients without being stable or
/// cointerval, and the cointerval running example.
OrderedIdeal example_linear_quotients();
OrderedIdeal example_running();

}  // namespace mcres

#endif
