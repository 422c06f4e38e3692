#ifndef MCRES_COINTERVAL_HPP
#define MCRES_COINTERVAL_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mcres/chain_complex.hpp"
#include "mcres/ek_geometry.hpp"
#include "mcres/ideal.hpp"

namespace mcres {

/// A d-uniform hypergraph. Vertices are integers (1..n for graphs read
/// from input); edges are ascending vertex tuples kept in lexicographic
/// order. Vertex v corresponds to the variable with 0-based index v - 1.
struct DGraph {
  int d = 0;
  std::vector<int> vertices;
  std::vector<std::vector<int>> edges;
};

/// Validates and normalizes edges on vertex set {1..n}.
DGraph make_dgraph(int d, int n, std::vector<std::vector<int>> edges);

/// Header "d n", then one edge per line.
DGraph parse_dgraph(std::string_view text);

/// Edge ideal with generators in lexicographic order of the edge tuples.
OrderedIdeal edge_ideal(const DGraph& h, std::size_t num_vars = 0);

/// The hypergraph of a squarefree ideal generated in one degree.
std::optional<DGraph> dgraph_of(const OrderedIdeal& ideal);

/// (d-1)-graph {e - v : v = min e} on the vertices above v.
DGraph v_layer(const DGraph& h, int v);

bool is_cointerval(const DGraph& h);

/// The exchange test: for every edge (i_1..i_d) and t <= d, every
/// j_1 < ... < j_t with j_s <= i_s and j_t < i_{t+1} gives an edge
/// (j_1..j_t, i_{t+1}..i_d).
bool is_cointerval_exchange(const DGraph& h);

/// Whether the ideal is the edge ideal of a cointerval hypergraph listed
/// in lexicographic order.
bool is_cointerval_ideal(const OrderedIdeal& ideal);

/// Cells of X_H as block tuples (sigma_1 < ... < sigma_d), vertices 1-based.
using BlockTuple = std::vector<std::vector<int>>;

struct HomCell {
  BlockTuple blocks;
  std::size_t dim = 0;
  Monomial label;
};

struct HomComplex {
  DGraph graph;
  std::size_t num_vars = 0;
  std::vector<HomCell> cells;  ///< ordered by (dim, blocks)

  std::optional<std::size_t> find(const BlockTuple& blocks) const;
  std::vector<std::size_t> f_vector() const;
};

HomComplex build_hom_complex(const DGraph& h, std::size_t num_vars = 0);

/// Signed faces obtained by deleting one element from a block of size >= 2.
std::vector<std::pair<BlockTuple, long>> hom_boundary(const BlockTuple& cell);

/// The bijection between faces and symbols via block maxima.
Symbol symbol_of_face(const OrderedIdeal& ideal, const BlockTuple& cell);
BlockTuple face_of_symbol(const OrderedIdeal& ideal, const Symbol& symbol);

/// A_1, ..., A_d for generator j (0-based variable indices).
std::vector<std::vector<int>> partition_A(const OrderedIdeal& ideal, std::size_t j);

/// Maxima of alpha within each nonempty block, ascending.
std::vector<int> compute_T(const OrderedIdeal& ideal, std::size_t j, const std::vector<int>& alpha);

/// c(x_t m_j): replace the smallest support variable above t by x_t.
std::size_t decomp_c(const OrderedIdeal& ideal, std::size_t j, int t);

DecompositionRule c_rule(const OrderedIdeal& ideal);

/// Selector returning T(alpha).
TermSelector block_maxima_selector(const OrderedIdeal& ideal);

/// Permutations whose entries from each block A_l appear in descending order.
PermutationFilter admissible_filter(const OrderedIdeal& ideal);

/// Raises NotCointerval unless the ideal is a lex-ordered cointerval edge ideal.
LabeledChainComplex homcone_resolution(const OrderedIdeal& ideal);

/// Union of c-chains over admissible permutations.
GlueCell admissible_perm_cells(const OrderedIdeal& ideal, std::size_t j,
                               const std::vector<int>& alpha);

/// The c-rule counterpart of build_ek_cw.
CWComplex build_admissible_cw(const OrderedIdeal& ideal);

/// Labelled chain complex of X_H with bases translated to symbols.
LabeledChainComplex hom_cellular_complex(const HomComplex& x, const OrderedIdeal& ideal);

}  // namespace mcres

#endif
