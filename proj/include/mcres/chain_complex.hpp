#ifndef MCRES_CHAIN_COMPLEX_HPP
#define MCRES_CHAIN_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcres/ideal.hpp"
#include "mcres/monomial.hpp"

namespace mcres {

inline constexpr int kUnit = -1;

/// Basis label (m_gen; alpha). gen == kUnit marks the generator of F_0 in a
/// resolution; Koszul and Taylor complexes reuse the same shape (a tag plus
/// an index subset).
struct Symbol {
  int gen = kUnit;
  std::vector<int> alpha;

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;
};

std::string to_string(const Symbol& s);

struct Term {
  std::size_t row;
  long coeff;
  Monomial mono;
};

/// Column-major sparse matrix over the polynomial ring: each column holds a
/// list of (row, integer coefficient, monomial) terms.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_.size(); }
  std::size_t nonzeros() const;

  /// Adds coeff*mono at (row, col), merging with a term of the same
  /// monomial and dropping it if it cancels.
  void add(std::size_t row, std::size_t col, long coeff, const Monomial& mono);
  const std::vector<Term>& column(std::size_t col) const { return cols_.at(col); }
  std::vector<Term>& column(std::size_t col) { return cols_.at(col); }

  /// Orders every column by (row, monomial).
  void sort_columns();

private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Term>> cols_;
};

/// Entries of a matrix product, keyed by (row, monomial) per column.
using PolyColumns = std::vector<std::map<std::pair<std::size_t, Monomial>, long>>;
PolyColumns multiply(const SparseMatrix& a, const SparseMatrix& b);

enum class BasisKind { symbol, koszul, taylor, cell };

/// Graded free modules F_0, F_1, ... with symbol bases, multidegrees and
/// differentials diff[i] : F_i -> F_{i-1}. diff[0] has zero rows.
struct LabeledChainComplex {
  std::size_t num_vars = 0;
  BasisKind kind = BasisKind::symbol;
  std::vector<std::vector<Symbol>> basis;
  std::vector<std::vector<Monomial>> multidegree;
  std::vector<SparseMatrix> diff;

  std::size_t length() const noexcept { return basis.size(); }
  std::size_t rank(std::size_t degree) const;
  std::vector<std::size_t> ranks() const;
  /// Ranks in homological degrees >= 1 (the Betti numbers of a resolution).
  std::vector<std::size_t> betti_ranks() const;
  std::optional<std::size_t> index_of(std::size_t degree, const Symbol& s) const;

  /// Appends an empty module in the next degree.
  void push_degree();
  void add_basis(std::size_t degree, Symbol s, Monomial mdeg);
};

LabeledChainComplex koszul_complex(std::size_t num_vars, const std::vector<int>& vars,
                                   const Monomial& shift, int tag = kUnit);

struct ChainMap {
  LabeledChainComplex source;
  LabeledChainComplex target;
  /// maps[i] : source_i -> target_i
  std::vector<SparseMatrix> maps;
};

struct Witness {
  std::size_t degree = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// First degree where d_target * psi != psi * d_source, if any.
std::optional<Witness> chain_map_defect(const ChainMap& psi);

/// Cone with degree-i basis source_{i-1} followed by target_i and
/// differential [-d_source, 0; psi, d_target].
LabeledChainComplex mapping_cone(const ChainMap& psi);

/// Which alpha positions carry a decomposition term, as variable indices.
/// An empty selector means all of alpha.
using TermSelector =
    std::function<std::vector<int>(std::size_t gen, const std::vector<int>& alpha)>;

/// Symbols (m_j; alpha) with alpha in set(m_j), graded by |alpha| + 1, plus
/// the unit in degree 0, in canonical order.
LabeledChainComplex symbol_skeleton(const OrderedIdeal& ideal);

/// d(m;a) = sum_p (-1)^p x_{a_p} (m; a - a_p)
///        + sum_{p selected} (-1)^(p-1) (x_{a_p} m / m_g) (m_g; a - a_p),
/// g = rule(m, a_p), with (m_g; b) = 0 when b is not inside set(m_g).
LabeledChainComplex rule_resolution(const OrderedIdeal& ideal, const DecompositionRule& rule,
                                    const TermSelector& select = {});

/// The same complex assembled as an iterated mapping cone over the
/// generators; raises NonCommutingChainMap if a step is not a chain map.
LabeledChainComplex rule_resolution_by_cones(const OrderedIdeal& ideal,
                                             const DecompositionRule& rule,
                                             const TermSelector& select = {});

/// Requires linear quotients and a regular b.
LabeledChainComplex ht_resolution(const OrderedIdeal& ideal);
LabeledChainComplex ht_resolution_by_cones(const OrderedIdeal& ideal);

/// sum_j C(|set(m_j)|, i-1) for i = 1, 2, ...
std::vector<std::size_t> symbol_counts(const OrderedIdeal& ideal);

std::optional<Witness> dd_zero_defect(const LabeledChainComplex& c);
inline bool check_dd_zero(const LabeledChainComplex& c) { return !dd_zero_defect(c); }

bool check_minimal(const LabeledChainComplex& c);
std::optional<Witness> homogeneity_defect(const LabeledChainComplex& c);

/// Sorts every basis by Symbol and permutes the matrices to match.
void canonicalize(LabeledChainComplex& c);

struct ComparisonResult {
  bool equal = false;
  /// Sign s_i with diff_a[i] = s_i diff_b[i].
  std::vector<int> degree_signs;
  std::string mismatch;
};

/// Compares two complexes by basis symbols, multidegrees and differential
/// entries; with allow_degree_sign one global sign per degree is permitted.
ComparisonResult compare_complexes(const LabeledChainComplex& a, const LabeledChainComplex& b,
                                   bool allow_degree_sign);

}  // namespace mcres

#endif
