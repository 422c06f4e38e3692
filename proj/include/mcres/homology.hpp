#ifndef MCRES_HOMOLOGY_HPP
#define MCRES_HOMOLOGY_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mcres/exact.hpp"

namespace mcres {

using Incidence = std::vector<std::pair<std::size_t, long>>;

/// A based chain complex seen cell by cell: each basis element has a
/// homological degree and integer incidences to the degree below.
class CellView {
public:
  virtual ~CellView() = default;
  virtual std::size_t size() const = 0;
  virtual int degree(std::size_t cell) const = 0;
  virtual void boundary(std::size_t cell, Incidence& out) const = 0;
  virtual void coboundary(std::size_t cell, Incidence& out) const = 0;
};

/// Explicitly listed cells; coboundaries are derived on construction.
class ExplicitCells : public CellView {
public:
  ExplicitCells(std::vector<int> degrees, std::vector<Incidence> boundaries);

  std::size_t size() const override { return degrees_.size(); }
  int degree(std::size_t cell) const override { return degrees_[cell]; }
  void boundary(std::size_t cell, Incidence& out) const override { out = boundaries_[cell]; }
  void coboundary(std::size_t cell, Incidence& out) const override { out = coboundaries_[cell]; }

private:
  std::vector<int> degrees_;
  std::vector<Incidence> boundaries_;
  std::vector<Incidence> coboundaries_;
};

/// Ranks of homology by degree over Q (zero ranks omitted). Pairs with a
/// unit incidence are cancelled first (coreductions and free-face
/// collapses, neither of which changes other incidences); the rest goes
/// to exact elimination.
std::map<int, std::size_t> homology_ranks(const CellView& cells, const RankOptions& options);

inline bool is_acyclic(const CellView& cells, const RankOptions& options) {
  return homology_ranks(cells, options).empty();
}

}  // namespace mcres

#endif
