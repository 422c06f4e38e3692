#ifndef MCRES_VERIFICATION_HPP
#define MCRES_VERIFICATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcres/chain_complex.hpp"
#include "mcres/exact.hpp"
#include "mcres/ideal.hpp"

namespace mcres {

inline constexpr std::size_t kDefaultTaylorCap = 16;

/// Full simplex on the generators with lcm labels. Basis symbols are
/// (unit; S) for subsets S of generator indices, in degree |S|.
LabeledChainComplex taylor_complex(const OrderedIdeal& ideal, std::size_t cap = kDefaultTaylorCap);

/// Multigraded Betti numbers beta_{i,b} for i >= 1.
struct BettiTable {
  std::size_t num_vars = 0;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> values;

  /// Totals beta_1, beta_2, ... up to the last nonzero degree.
  std::vector<std::size_t> totals() const;
  /// (i, total degree of b) -> sum of beta_{i,b}.
  std::map<std::pair<std::size_t, int>, std::size_t> by_total_degree() const;
  bool operator==(const BettiTable&) const = default;
};

/// Betti numbers as the homology of the Taylor strands with label exactly b.
BettiTable multigraded_betti(const OrderedIdeal& ideal, const RankOptions& options,
                             std::size_t cap = kDefaultTaylorCap);

/// Basis multidegrees of a resolution in degrees >= 1; these are the Betti
/// numbers when the resolution is minimal.
BettiTable betti_of_resolution(const LabeledChainComplex& x);

/// All lcms of nonempty subsets of the generators, sorted.
std::vector<Monomial> lcm_lattice(const OrderedIdeal& ideal);

struct CellularReport {
  bool ok = false;
  std::optional<Monomial> witness;  ///< first failing lattice point
  std::map<int, std::size_t> homology;  ///< homology of the failing strand
  std::string reason;
};

/// Basis elements are cells of dimension (degree - 1), the degree-0 element
/// being the empty cell; differential coefficients are the incidences.
/// Passes iff the degree-1 labels are exactly the generators and every
/// subcomplex of cells with label dividing an lcm-lattice point is acyclic.
/// Throws NonMonotoneLabels when a face label does not divide its cell label.
CellularReport check_cellular_resolution(const LabeledChainComplex& x, const OrderedIdeal& ideal,
                                         const RankOptions& options);

/// The same criterion for the Taylor complex, without materializing it:
/// below b the Taylor complex is the full simplex on the generators dividing
/// b, walked as bitmasks. Handles up to 24 generators.
CellularReport check_taylor_cellular(const OrderedIdeal& ideal, const RankOptions& options);

}  // namespace mcres

#endif
