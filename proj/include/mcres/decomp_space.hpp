#ifndef MCRES_DECOMP_SPACE_HPP
#define MCRES_DECOMP_SPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcres/chain_complex.hpp"
#include "mcres/cointerval.hpp"
#include "mcres/ek_geometry.hpp"
#include "mcres/exact.hpp"
#include "mcres/ideal.hpp"

namespace mcres {

/// Which alpha positions carry the decomposition term: all of them, or only
/// the maxima of the blocks A_l (the pattern of the cointerval resolution,
/// paired with admissible permutations in the geometry).
enum class RuleShape { full, block_maxima };

std::string to_string(RuleShape shape);

struct RegularRule {
  DecompositionRule rule;
  RuleShape shape = RuleShape::full;
  LabeledChainComplex resolution;
};

struct EnumerationOptions {
  /// Largest number of candidate tables to examine.
  std::size_t cap = 1000000;
  RankOptions rank;
};

/// Whether the blocks A_l cover set(m_j) for every generator, which the
/// block_maxima shape needs.
bool blocks_cover_sets(const OrderedIdeal& ideal);

/// Every table with g < j, m_g | x_t m_j and set(m_g) inside set(m_j),
/// kept for a shape when (for the full shape) the rule commutes as in (*),
/// and the induced differential squares to zero, is minimal and passes the
/// cellular criterion. A table accepted under both shapes with the same
/// complex is listed once, under the full shape. Deterministic order.
/// Raises NotLinearQuotients, or SearchSpaceTooLarge above options.cap.
std::vector<RegularRule> enumerate_regular_rules(const OrderedIdeal& ideal,
                                                 const EnumerationOptions& options = {});

/// The CW complex built from the rule in the given shape.
CWComplex complex_for_rule(const OrderedIdeal& ideal, const DecompositionRule& rule,
                           RuleShape shape = RuleShape::full);

/// Cells with dimensions and codimension-one faces; the empty cell is left out.
struct FacePoset {
  std::vector<int> dims;
  std::vector<std::vector<std::size_t>> faces;
};

FacePoset face_poset(const CWComplex& x);
FacePoset face_poset(const HomComplex& x);
/// The closure of one cell.
FacePoset closure(const FacePoset& poset, std::size_t cell);

/// Canonical certificate of the face poset: equal strings exactly for
/// isomorphic posets. Colour refinement with individualization, taking the
/// smallest certificate over the search tree.
std::string combinatorial_type(const FacePoset& poset);
inline std::string combinatorial_type(const CWComplex& x) { return combinatorial_type(face_poset(x)); }

struct FamilyMember {
  RegularRule rule;
  CWComplex complex;
  std::string type;
  std::vector<std::size_t> f_vector;
};

struct Family {
  std::vector<FamilyMember> members;
  /// One representative member index per distinct type, in member order.
  std::vector<std::size_t> distinct;
  /// Rules whose geometry could not be assembled, with the reason.
  std::vector<std::pair<RegularRule, std::string>> rejected;
};

Family rule_family(const OrderedIdeal& ideal, const EnumerationOptions& options = {});

}  // namespace mcres

#endif
