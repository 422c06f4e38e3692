#include "mcres/verification.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "mcres/error.hpp"
#include "mcres/homology.hpp"

namespace mcres {
namespace {

std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) out.push_back(i);
  return out;
}

void require_cap(const OrderedIdeal& ideal, std::size_t cap) {
  if (ideal.size() > cap || ideal.size() > 24)
    throw Error(ErrorKind::too_many_generators,
                std::to_string(ideal.size()) + " generators exceed the Taylor bound " +
                    std::to_string(std::min<std::size_t>(cap, 24)));
}

/// lcm label of every subset of generators, indexed by bitmask.
std::vector<Monomial> subset_labels(const OrderedIdeal& ideal) {
  const std::size_t k = ideal.size();
  std::vector<Monomial> label(std::size_t{1} << k);
  label[0] = Monomial(ideal.num_vars());
  for (std::uint32_t mask = 1; mask < label.size(); ++mask) {
    int low = std::countr_zero(mask);
    label[mask] = lcm(label[mask & (mask - 1)], ideal.gen(static_cast<std::size_t>(low)));
  }
  return label;
}

/// Sign of the face S \ {bit}: (-1)^(number of members of S below bit).
long face_sign(std::uint32_t mask, int bit) {
  return (std::popcount(mask & ((1U << bit) - 1U)) % 2 == 0) ? 1 : -1;
}

/// The full simplex on k vertices including the empty face; cell = bitmask.
class SimplexCells : public CellView {
public:
  explicit SimplexCells(int k) : k_(k) {}
  std::size_t size() const override { return std::size_t{1} << k_; }
  int degree(std::size_t cell) const override { return std::popcount(static_cast<std::uint32_t>(cell)); }
  void boundary(std::size_t cell, Incidence& out) const override {
    out.clear();
    auto mask = static_cast<std::uint32_t>(cell);
    for (int b = 0; b < k_; ++b)
      if (mask & (1U << b)) out.push_back({mask ^ (1U << b), face_sign(mask, b)});
  }
  void coboundary(std::size_t cell, Incidence& out) const override {
    out.clear();
    auto mask = static_cast<std::uint32_t>(cell);
    for (int b = 0; b < k_; ++b)
      if (!(mask & (1U << b))) out.push_back({mask | (1U << b), face_sign(mask | (1U << b), b)});
  }

private:
  int k_;
};

}  // namespace

LabeledChainComplex taylor_complex(const OrderedIdeal& ideal, std::size_t cap) {
  require_cap(ideal, cap);
  const std::size_t k = ideal.size();
  const auto label = subset_labels(ideal);
  LabeledChainComplex out;
  out.num_vars = ideal.num_vars();
  out.kind = BasisKind::taylor;
  for (std::size_t d = 0; d <= k; ++d) out.push_degree();

  // Subsets of each size in lexicographic order of their member lists.
  std::vector<std::vector<std::uint32_t>> by_size(k + 1);
  for (std::uint32_t mask = 0; mask < label.size(); ++mask) by_size[std::popcount(mask)].push_back(mask);
  for (auto& list : by_size)
    std::sort(list.begin(), list.end(),
              [](std::uint32_t a, std::uint32_t b) { return members(a) < members(b); });
  std::vector<std::size_t> position(label.size());
  for (std::size_t d = 0; d <= k; ++d)
    for (std::size_t p = 0; p < by_size[d].size(); ++p) {
      std::uint32_t mask = by_size[d][p];
      position[mask] = p;
      out.add_basis(d, Symbol{kUnit, members(mask)}, label[mask]);
    }
  for (std::size_t d = 1; d <= k; ++d)
    for (std::size_t p = 0; p < by_size[d].size(); ++p) {
      std::uint32_t mask = by_size[d][p];
      for (int b : members(mask)) {
        std::uint32_t face = mask ^ (1U << b);
        out.diff[d].add(position[face], p, face_sign(mask, b), label[mask].quotient(label[face]));
      }
    }
  for (auto& m : out.diff) m.sort_columns();
  return out;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (const auto& [key, v] : values) {
    if (v == 0) continue;
    if (out.size() < key.first) out.resize(key.first, 0);
    out[key.first - 1] += v;
  }
  return out;
}

std::map<std::pair<std::size_t, int>, std::size_t> BettiTable::by_total_degree() const {
  std::map<std::pair<std::size_t, int>, std::size_t> out;
  for (const auto& [key, v] : values)
    if (v > 0) out[{key.first, key.second.degree()}] += v;
  return out;
}

BettiTable multigraded_betti(const OrderedIdeal& ideal, const RankOptions& options, std::size_t cap) {
  require_cap(ideal, cap);
  const auto label = subset_labels(ideal);
  std::map<Monomial, std::vector<std::uint32_t>> strands;
  for (std::uint32_t mask = 1; mask < label.size(); ++mask) strands[label[mask]].push_back(mask);

  BettiTable table;
  table.num_vars = ideal.num_vars();
  for (const auto& [b, masks] : strands) {
    // Within the strand only faces keeping the label b survive after
    // tensoring with the field.
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i]] = i;
    std::vector<int> degrees;
    std::vector<Incidence> boundaries;
    for (std::uint32_t mask : masks) {
      degrees.push_back(std::popcount(mask));
      Incidence inc;
      for (int bit : members(mask)) {
        auto it = index.find(mask ^ (1U << bit));
        if (it != index.end()) inc.push_back({it->second, face_sign(mask, bit)});
      }
      boundaries.push_back(std::move(inc));
    }
    for (const auto& [deg, r] : homology_ranks(ExplicitCells(std::move(degrees), std::move(boundaries)), options))
      table.values[{static_cast<std::size_t>(deg), b}] = r;
  }
  return table;
}

BettiTable betti_of_resolution(const LabeledChainComplex& x) {
  BettiTable table;
  table.num_vars = x.num_vars;
  for (std::size_t d = 1; d < x.length(); ++d)
    for (const auto& m : x.multidegree[d]) ++table.values[{d, m}];
  return table;
}

std::vector<Monomial> lcm_lattice(const OrderedIdeal& ideal) {
  std::set<Monomial> lattice(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (const auto& g : ideal.gens()) {
        Monomial l = lcm(m, g);
        if (lattice.insert(l).second) next.push_back(l);
      }
    frontier = std::move(next);
  }
  return {lattice.begin(), lattice.end()};
}

CellularReport check_cellular_resolution(const LabeledChainComplex& x, const OrderedIdeal& ideal,
                                         const RankOptions& options) {
  CellularReport report;
  std::vector<std::size_t> offset(x.length() + 1, 0);
  for (std::size_t d = 0; d < x.length(); ++d) offset[d + 1] = offset[d] + x.rank(d);

  for (std::size_t d = 1; d < x.length(); ++d)
    for (std::size_t c = 0; c < x.rank(d); ++c)
      for (const auto& t : x.diff[d].column(c))
        if (!x.multidegree[d - 1][t.row].divides(x.multidegree[d][c]))
          throw Error(ErrorKind::non_monotone_labels,
                      "face " + to_string(x.basis[d - 1][t.row]) + " has a label not dividing that of " +
                          to_string(x.basis[d][c]));

  std::vector<Monomial> vertices = x.length() > 1 ? x.multidegree[1] : std::vector<Monomial>{};
  std::vector<Monomial> gens = ideal.gens();
  std::sort(vertices.begin(), vertices.end());
  std::sort(gens.begin(), gens.end());
  if (vertices != gens) {
    report.reason = "vertex labels differ from the generators";
    return report;
  }

  for (const auto& b : lcm_lattice(ideal)) {
    std::vector<std::size_t> local(offset.back(), SIZE_MAX);
    std::vector<int> degrees;
    std::vector<Incidence> boundaries;
    for (std::size_t d = 0; d < x.length(); ++d)
      for (std::size_t c = 0; c < x.rank(d); ++c) {
        if (!x.multidegree[d][c].divides(b)) continue;
        local[offset[d] + c] = degrees.size();
        degrees.push_back(static_cast<int>(d));
        std::map<std::size_t, long> sum;
        if (d > 0)
          for (const auto& t : x.diff[d].column(c)) sum[local[offset[d - 1] + t.row]] += t.coeff;
        Incidence inc;
        for (const auto& [row, v] : sum)
          if (v != 0) inc.push_back({row, v});
        boundaries.push_back(std::move(inc));
      }
    auto h = homology_ranks(ExplicitCells(std::move(degrees), std::move(boundaries)), options);
    if (!h.empty()) {
      report.witness = b;
      report.homology = std::move(h);
      report.reason = "strand below " + b.to_string() + " is not acyclic";
      return report;
    }
  }
  report.ok = true;
  return report;
}

CellularReport check_taylor_cellular(const OrderedIdeal& ideal, const RankOptions& options) {
  require_cap(ideal, 24);
  CellularReport report;
  for (const auto& b : lcm_lattice(ideal)) {
    int k = 0;
    for (const auto& g : ideal.gens())
      if (g.divides(b)) ++k;
    auto h = homology_ranks(SimplexCells(k), options);
    if (!h.empty()) {
      report.witness = b;
      report.homology = std::move(h);
      report.reason = "strand below " + b.to_string() + " is not acyclic";
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace mcres
