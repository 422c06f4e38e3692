#ifndef MCRES_EK_GEOMETRY_HPP
#define MCRES_EK_GEOMETRY_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mcres/chain_complex.hpp"
#include "mcres/ideal.hpp"

namespace mcres {

/// The chain m, rule(x_{s1} m), rule(x_{s2} rule(x_{s1} m)), ... as
/// generator indices.
struct SimplexChain {
  std::size_t source = 0;
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<std::size_t> vertices;
  bool degenerate = false;
};

SimplexChain ch_simplex(const OrderedIdeal& ideal, const DecompositionRule& rule, std::size_t m,
                        const std::vector<int>& alpha, const std::vector<int>& sigma);
SimplexChain ch_simplex(const OrderedIdeal& ideal, std::size_t m, const std::vector<int>& alpha,
                        const std::vector<int>& sigma);

/// Pushes stuck variables towards the front by adjacent transpositions
/// until the chain no longer repeats a vertex. Precondition: degenerate.
std::vector<int> nondegenerate_lift(const OrderedIdeal& ideal, const DecompositionRule& rule,
                                    std::size_t m, const std::vector<int>& alpha,
                                    const std::vector<int>& sigma);

struct FacetClass {
  bool interior = false;
  std::vector<int> partner;  ///< the adjacent transposition, when interior
};

/// Classifies the facet of a non-degenerate chain missing vertex `dropped`.
FacetClass classify_facet(const OrderedIdeal& ideal, const DecompositionRule& rule,
                          const SimplexChain& chain, std::size_t dropped);

/// Sign of the permutation taking sigma to its descending arrangement.
int orientation_sign(const std::vector<int>& sigma);

/// Oriented simplices keyed by their ascending vertex tuple.
using GeometricChain = std::map<std::vector<std::size_t>, long>;

/// Simplicial boundary; a vertex maps to the empty simplex.
GeometricChain simplicial_boundary(const GeometricChain& chain);

/// Which permutations enter a cell (all of them when empty).
using PermutationFilter =
    std::function<bool(std::size_t m, const std::vector<int>& alpha, const std::vector<int>& sigma)>;

struct GlueCell {
  std::size_t source = 0;
  std::vector<int> alpha;
  std::vector<SimplexChain> simplices;  ///< non-degenerate members
  std::vector<int> signs;               ///< orientation of each member
  GeometricChain chain;                 ///< signed sum of the members

  std::size_t dim() const noexcept { return alpha.size(); }
};

/// U(m, alpha): union of the non-degenerate chains over the admitted
/// permutations. Raises OrientationClash unless every shared facet is met by
/// exactly two members with opposite orientations.
GlueCell build_cell(const OrderedIdeal& ideal, const DecompositionRule& rule, std::size_t m,
                    const std::vector<int>& alpha, const PermutationFilter& filter = {});
GlueCell build_cell(const OrderedIdeal& ideal, std::size_t m, const std::vector<int>& alpha);

/// The algebraic boundary of U(m, alpha) without coefficients:
/// sum_p (-1)^p U(m, a - a_p) - sum_{p selected} (-1)^p U(rule(x_{a_p} m), a - a_p).
std::vector<std::pair<Symbol, long>> cell_boundary(const OrderedIdeal& ideal,
                                                   const DecompositionRule& rule,
                                                   const GlueCell& cell,
                                                   const TermSelector& select = {});

struct CWCell {
  Symbol symbol;
  Monomial label;
  GlueCell geometry;
  /// Faces as (cell id, incidence); the unit cell has id 0.
  std::vector<std::pair<std::size_t, long>> boundary;

  std::size_t dim() const noexcept { return symbol.alpha.size(); }
};

/// Cells U(m, alpha) for all symbols, with boundaries read off the
/// geometry and checked against cell_boundary. Cell 0 is the empty cell.
struct CWComplex {
  OrderedIdeal ideal;
  std::vector<CWCell> cells;
  /// Per dimension p, the sign s_p with geometric = s_p * algebraic boundary.
  std::vector<int> dim_signs;

  std::vector<std::size_t> f_vector() const;
  std::optional<std::size_t> find(const Symbol& s) const;
};

struct CellOptions {
  TermSelector select;
  PermutationFilter filter;
};

CWComplex build_cw(const OrderedIdeal& ideal, const DecompositionRule& rule,
                   const CellOptions& options = {});
/// Requires linear quotients and a regular b.
CWComplex build_ek_cw(const OrderedIdeal& ideal);

/// Labelled cellular chain complex with coefficients label(cell)/label(face).
LabeledChainComplex cellular_chain_complex(const CWComplex& x);

bool affinely_independent(const std::vector<Monomial>& points);

/// Whether a cell of dimension <= 3 is a ball, judged by its boundary
/// complex: two points, a single cycle, or a connected closed surface of
/// Euler characteristic 2. Higher dimensions return nullopt.
std::optional<bool> is_ball(const GlueCell& cell);

}  // namespace mcres

#endif
