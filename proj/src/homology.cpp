#include "mcres/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>

namespace mcres {

ExplicitCells::ExplicitCells(std::vector<int> degrees, std::vector<Incidence> boundaries)
    : degrees_(std::move(degrees)), boundaries_(std::move(boundaries)) {
  if (degrees_.size() != boundaries_.size())
    throw std::invalid_argument("cell degrees and boundaries differ in length");
  coboundaries_.resize(degrees_.size());
  for (std::size_t c = 0; c < boundaries_.size(); ++c)
    for (const auto& [face, coeff] : boundaries_[c]) {
      if (face >= degrees_.size() || degrees_[face] + 1 != degrees_[c])
        throw std::invalid_argument("boundary face has the wrong degree");
      coboundaries_[face].push_back({c, coeff});
    }
}

std::map<int, std::size_t> homology_ranks(const CellView& cells, const RankOptions& options) {
  const std::size_t size = cells.size();
  std::vector<char> active(size, 1);
  std::vector<std::uint32_t> faces(size), cofaces(size);
  Incidence buf;
  for (std::size_t c = 0; c < size; ++c) {
    cells.boundary(c, buf);
    faces[c] = static_cast<std::uint32_t>(buf.size());
    cells.coboundary(c, buf);
    cofaces[c] = static_cast<std::uint32_t>(buf.size());
  }

  std::deque<std::size_t> queue;
  for (std::size_t c = 0; c < size; ++c) queue.push_back(c);
  Incidence around;
  auto remove = [&](std::size_t x) {
    active[x] = 0;
    cells.coboundary(x, around);
    for (const auto& [y, v] : around)
      if (active[y]) {
        --faces[y];
        queue.push_back(y);
      }
    cells.boundary(x, around);
    for (const auto& [z, v] : around)
      if (active[z]) {
        --cofaces[z];
        queue.push_back(z);
      }
  };
  // The only active entry of a list, if it is a unit.
  auto unit_partner = [&](const Incidence& list) -> std::optional<std::size_t> {
    for (const auto& [x, v] : list)
      if (active[x]) return (v == 1 || v == -1) ? std::optional<std::size_t>(x) : std::nullopt;
    return std::nullopt;
  };

  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    if (!active[c]) continue;
    std::optional<std::size_t> partner;
    if (faces[c] == 1) {
      cells.boundary(c, buf);
      partner = unit_partner(buf);
    }
    if (!partner && cofaces[c] == 1) {
      cells.coboundary(c, buf);
      partner = unit_partner(buf);
    }
    if (!partner) continue;
    remove(c);
    remove(*partner);
  }

  // Exact ranks on what is left.
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t c = 0; c < size; ++c)
    if (active[c]) by_degree[cells.degree(c)].push_back(c);
  std::map<int, std::size_t> boundary_rank;
  for (const auto& [deg, list] : by_degree) {
    auto below = by_degree.find(deg - 1);
    if (below == by_degree.end()) continue;
    std::map<std::size_t, std::size_t> row_of;
    for (std::size_t r = 0; r < below->second.size(); ++r) row_of[below->second[r]] = r;
    ExactMatrix m(below->second.size(), list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
      cells.boundary(list[k], buf);
      for (const auto& [face, v] : buf)
        if (active[face]) m(row_of.at(face), k) += v;
    }
    boundary_rank[deg] = rank(m, options);
  }
  std::map<int, std::size_t> out;
  for (const auto& [deg, list] : by_degree) {
    std::size_t r = list.size() - boundary_rank[deg] - boundary_rank[deg + 1];
    if (r > 0) out[deg] = r;
  }
  return out;
}

}  // namespace mcres
