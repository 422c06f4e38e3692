#include "mcres/ek_geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "mcres/error.hpp"
#include "mcres/exact.hpp"

namespace mcres {

namespace {

std::string describe(std::size_t m, const std::vector<int>& alpha) {
  return to_string(Symbol{static_cast<int>(m), alpha});
}

/// Sign of the permutation sorting v ascending (entries distinct).
int sorting_sign(const std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

/// Global orientation factor per cell dimension: 1, 1, -1, -1, 1, ...
int dimension_factor(std::size_t p) { return p % 4 < 2 ? 1 : -1; }

std::vector<int> without(const std::vector<int>& alpha, std::size_t pos) {
  std::vector<int> out = alpha;
  out.erase(out.begin() + static_cast<long>(pos));
  return out;
}

}  // namespace

SimplexChain ch_simplex(const OrderedIdeal& ideal, const DecompositionRule& rule, std::size_t m,
                        const std::vector<int>& alpha, const std::vector<int>& sigma) {
  if (m >= ideal.size()) throw Error(ErrorKind::index_out_of_range, "generator out of range");
  const auto& set = ideal.set_of(m);
  if (!std::is_sorted(alpha.begin(), alpha.end()) ||
      std::adjacent_find(alpha.begin(), alpha.end()) != alpha.end() ||
      !std::includes(set.begin(), set.end(), alpha.begin(), alpha.end()))
    throw Error(ErrorKind::alpha_not_in_set, describe(m, alpha));
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != alpha)
    throw Error(ErrorKind::precondition, "sigma is not a permutation of alpha");
  SimplexChain c;
  c.source = m;
  c.alpha = alpha;
  c.sigma = sigma;
  c.vertices.push_back(m);
  for (int t : sigma) c.vertices.push_back(rule.apply(c.vertices.back(), t));
  std::vector<std::size_t> v = c.vertices;
  std::sort(v.begin(), v.end());
  c.degenerate = std::adjacent_find(v.begin(), v.end()) != v.end();
  return c;
}

SimplexChain ch_simplex(const OrderedIdeal& ideal, std::size_t m, const std::vector<int>& alpha,
                        const std::vector<int>& sigma) {
  return ch_simplex(ideal, canonical_rule(ideal), m, alpha, sigma);
}

std::vector<int> nondegenerate_lift(const OrderedIdeal& ideal, const DecompositionRule& rule,
                                    std::size_t m, const std::vector<int>& alpha,
                                    const std::vector<int>& sigma) {
  auto chain = ch_simplex(ideal, rule, m, alpha, sigma);
  if (!chain.degenerate) throw Error(ErrorKind::precondition, "chain is already non-degenerate");
  std::vector<int> s = sigma;
  const std::size_t cap = 16 + s.size() * s.size() * s.size();
  for (std::size_t iter = 0; iter < cap; ++iter) {
    chain = ch_simplex(ideal, rule, m, alpha, s);
    if (!chain.degenerate) return s;
    std::size_t stuck = 0;
    while (chain.vertices[stuck + 1] != chain.vertices[stuck]) ++stuck;
    if (stuck == 0) throw std::logic_error("first step of a chain cannot stall");
    std::swap(s[stuck - 1], s[stuck]);
  }
  throw std::logic_error("non-degenerate lift did not terminate for " + describe(m, alpha));
}

FacetClass classify_facet(const OrderedIdeal& ideal, const DecompositionRule& rule,
                          const SimplexChain& chain, std::size_t dropped) {
  if (chain.degenerate) throw Error(ErrorKind::degenerate_chain, describe(chain.source, chain.alpha));
  const std::size_t p = chain.sigma.size();
  if (p == 0 || dropped > p) throw Error(ErrorKind::index_out_of_range, "facet position");
  FacetClass result;
  if (dropped == 0 || dropped == p) return result;
  const int s_l = chain.sigma[dropped - 1];
  const int s_next = chain.sigma[dropped];
  const std::size_t prev = chain.vertices[dropped - 1];
  const std::size_t swapped = rule.apply(prev, s_next);
  if (swapped == prev || !ideal.in_set(swapped, s_l)) return result;
  result.interior = true;
  result.partner = chain.sigma;
  std::swap(result.partner[dropped - 1], result.partner[dropped]);
  return result;
}

int orientation_sign(const std::vector<int>& sigma) {
  const std::size_t p = sigma.size();
  int sign = 1;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (sigma[i] < sigma[j]) sign = -sign;  // inversions against descending order
  return sign;
}

GeometricChain simplicial_boundary(const GeometricChain& chain) {
  GeometricChain out;
  for (const auto& [simplex, coeff] : chain) {
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      std::vector<std::size_t> face = simplex;
      face.erase(face.begin() + static_cast<long>(i));
      long& v = out[face];
      v += i % 2 == 0 ? coeff : -coeff;
      if (v == 0) out.erase(face);
    }
  }
  return out;
}

GlueCell build_cell(const OrderedIdeal& ideal, const DecompositionRule& rule, std::size_t m,
                    const std::vector<int>& alpha, const PermutationFilter& filter) {
  GlueCell cell;
  cell.source = m;
  cell.alpha = alpha;
  std::vector<int> sigma = alpha;
  std::map<std::vector<std::size_t>, std::pair<int, long>> facets;  // count, net
  do {
    if (filter && !filter(m, alpha, sigma)) continue;
    auto chain = ch_simplex(ideal, rule, m, alpha, sigma);
    if (chain.degenerate) continue;
    std::vector<std::size_t> sorted = chain.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (cell.chain.count(sorted))
      throw Error(ErrorKind::orientation_clash,
                  "two permutations give the same simplex in " + describe(m, alpha));
    int sign = orientation_sign(sigma) * dimension_factor(alpha.size()) *
               sorting_sign(chain.vertices);
    cell.chain[sorted] = sign;
    for (const auto& [face, c] : simplicial_boundary({{sorted, sign}})) {
      auto& f = facets[face];
      ++f.first;
      f.second += c;
    }
    cell.simplices.push_back(std::move(chain));
    cell.signs.push_back(sign);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (const auto& [face, f] : facets)
    if (f.first > 2 || (f.first == 2 && f.second != 0))
      throw Error(ErrorKind::orientation_clash, "facet shared inconsistently in " + describe(m, alpha));
  if (cell.simplices.empty())
    throw Error(ErrorKind::precondition, "no non-degenerate simplex in " + describe(m, alpha));
  return cell;
}

GlueCell build_cell(const OrderedIdeal& ideal, std::size_t m, const std::vector<int>& alpha) {
  return build_cell(ideal, canonical_rule(ideal), m, alpha);
}

std::vector<std::pair<Symbol, long>> cell_boundary(const OrderedIdeal& ideal,
                                                   const DecompositionRule& rule,
                                                   const GlueCell& cell,
                                                   const TermSelector& select) {
  std::vector<std::pair<Symbol, long>> out;
  const auto& alpha = cell.alpha;
  if (alpha.empty()) {
    out.push_back({Symbol{kUnit, {}}, 1});
    return out;
  }
  std::vector<int> chosen = select ? select(cell.source, alpha) : alpha;
  for (std::size_t p = 0; p < alpha.size(); ++p) {
    long sign = p % 2 == 0 ? -1 : 1;  // (-1)^i with i = p + 1
    std::vector<int> beta = without(alpha, p);
    out.push_back({Symbol{static_cast<int>(cell.source), beta}, sign});
    if (std::find(chosen.begin(), chosen.end(), alpha[p]) == chosen.end()) continue;
    std::size_t g = rule.apply(cell.source, alpha[p]);
    const auto& sg = ideal.set_of(g);
    if (!std::includes(sg.begin(), sg.end(), beta.begin(), beta.end())) continue;
    out.push_back({Symbol{static_cast<int>(g), beta}, -sign});
  }
  return out;
}

std::vector<std::size_t> CWComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (std::size_t id = 1; id < cells.size(); ++id) {
    std::size_t d = cells[id].dim();
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

std::optional<std::size_t> CWComplex::find(const Symbol& s) const {
  for (std::size_t id = 0; id < cells.size(); ++id)
    if (cells[id].symbol == s) return id;
  return std::nullopt;
}

CWComplex build_cw(const OrderedIdeal& ideal, const DecompositionRule& rule,
                   const CellOptions& options) {
  CWComplex x{ideal, {}, {}};
  const std::size_t n = ideal.num_vars();
  CWCell empty;
  empty.symbol = Symbol{kUnit, {}};
  empty.label = Monomial(n);
  empty.geometry.chain[{}] = 1;
  x.cells.push_back(std::move(empty));

  auto skeleton = symbol_skeleton(ideal);
  for (std::size_t i = 1; i < skeleton.length(); ++i) {
    for (std::size_t k = 0; k < skeleton.basis[i].size(); ++k) {
      const Symbol& s = skeleton.basis[i][k];
      CWCell cell;
      cell.symbol = s;
      cell.label = skeleton.multidegree[i][k];
      cell.geometry = build_cell(ideal, rule, static_cast<std::size_t>(s.gen), s.alpha, options.filter);
      x.cells.push_back(std::move(cell));
    }
  }

  std::map<std::vector<std::size_t>, std::pair<std::size_t, long>> owner;
  std::map<Symbol, std::size_t> id_of;
  for (std::size_t id = 0; id < x.cells.size(); ++id) {
    id_of[x.cells[id].symbol] = id;
    for (const auto& [simplex, c] : x.cells[id].geometry.chain)
      if (!owner.emplace(simplex, std::make_pair(id, c)).second)
        throw Error(ErrorKind::mismatch_with_algebraic_differential,
                    "cells " + to_string(x.cells[id].symbol) + " and " +
                        to_string(x.cells[owner[simplex].first].symbol) + " overlap");
  }

  for (std::size_t id = 1; id < x.cells.size(); ++id) {
    CWCell& cell = x.cells[id];
    const std::size_t p = cell.dim();
    std::map<std::size_t, long> incidence;
    std::map<std::size_t, std::size_t> hits;
    for (const auto& [face, c] : simplicial_boundary(cell.geometry.chain)) {
      auto it = owner.find(face);
      if (it == owner.end())
        throw Error(ErrorKind::mismatch_with_algebraic_differential,
                    "boundary of " + to_string(cell.symbol) + " leaves the complex");
      auto [fid, fc] = it->second;
      long ratio = c * fc;
      std::size_t face_rank = fid == 0 ? 0 : x.cells[fid].dim() + 1;  // dim + 1
      if ((ratio != 1 && ratio != -1) || face_rank != p ||
          (incidence.count(fid) && incidence[fid] != ratio))
        throw Error(ErrorKind::mismatch_with_algebraic_differential,
                    "boundary of " + to_string(cell.symbol) + " is not a signed sum of cells");
      incidence[fid] = ratio;
      ++hits[fid];
    }
    for (const auto& [fid, count] : hits)
      if (count != x.cells[fid].geometry.chain.size())
        throw Error(ErrorKind::mismatch_with_algebraic_differential,
                    "boundary of " + to_string(cell.symbol) + " covers part of " +
                        to_string(x.cells[fid].symbol));
    for (const auto& [fid, inc] : incidence) cell.boundary.push_back({fid, inc});

    std::map<std::size_t, long> formula;
    for (const auto& [sym, sign] : cell_boundary(ideal, rule, cell.geometry, options.select)) {
      auto it = id_of.find(sym);
      if (it == id_of.end())
        throw Error(ErrorKind::mismatch_with_algebraic_differential,
                    "formula face " + to_string(sym) + " is not a cell");
      formula[it->second] += sign;
    }
    std::erase_if(formula, [](const auto& kv) { return kv.second == 0; });
    if (x.dim_signs.size() <= p) x.dim_signs.resize(p + 1, 0);
    int& sp = x.dim_signs[p];
    if (sp == 0 && !formula.empty() && incidence.count(formula.begin()->first))
      sp = incidence[formula.begin()->first] == formula.begin()->second ? 1 : -1;
    bool same = formula.size() == incidence.size();
    for (const auto& [fid, v] : formula) same = same && incidence.count(fid) && incidence[fid] == sp * v;
    if (!same)
      throw Error(ErrorKind::mismatch_with_algebraic_differential,
                  "geometric and algebraic boundary of " + to_string(cell.symbol) + " differ");
  }
  return x;
}

CWComplex build_ek_cw(const OrderedIdeal& ideal) {
  auto report = check_regularity(ideal);
  if (!report.regular) throw Error(ErrorKind::not_regular, "b is not regular");
  return build_cw(ideal, canonical_rule(ideal));
}

LabeledChainComplex cellular_chain_complex(const CWComplex& x) {
  LabeledChainComplex c;
  c.num_vars = x.ideal.num_vars();
  c.kind = BasisKind::symbol;
  std::size_t top = 0;
  for (const auto& cell : x.cells) top = std::max(top, cell.dim());
  std::vector<std::size_t> position(x.cells.size());
  std::vector<std::vector<std::size_t>> ids(top + 2);
  ids[0].push_back(0);
  for (std::size_t id = 1; id < x.cells.size(); ++id) ids[x.cells[id].dim() + 1].push_back(id);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    c.basis.emplace_back();
    c.multidegree.emplace_back();
    for (std::size_t k = 0; k < ids[i].size(); ++k) {
      position[ids[i][k]] = k;
      c.basis[i].push_back(x.cells[ids[i][k]].symbol);
      c.multidegree[i].push_back(x.cells[ids[i][k]].label);
    }
    c.diff.emplace_back(i == 0 ? 0 : ids[i - 1].size(), ids[i].size());
  }
  for (std::size_t i = 1; i < ids.size(); ++i)
    for (std::size_t k = 0; k < ids[i].size(); ++k) {
      const auto& cell = x.cells[ids[i][k]];
      for (const auto& [fid, inc] : cell.boundary) {
        const auto& face = x.cells[fid];
        if (!face.label.divides(cell.label))
          throw Error(ErrorKind::non_monotone_labels, to_string(face.symbol));
        c.diff[i].add(position[fid], k, inc, cell.label.quotient(face.label));
      }
    }
  canonicalize(c);
  return c;
}

bool affinely_independent(const std::vector<Monomial>& points) {
  if (points.size() <= 1) return true;
  const std::size_t n = points[0].size();
  ExactMatrix m(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) m(i - 1, k) = points[i][k] - points[0][k];
  return exact_rank(m) == points.size() - 1;
}

std::optional<bool> is_ball(const GlueCell& cell) {
  const std::size_t p = cell.dim();
  if (p > 3) return std::nullopt;
  if (p == 0) return cell.chain.size() == 1;
  std::vector<std::vector<std::size_t>> faces;
  for (const auto& [face, c] : simplicial_boundary(cell.chain)) faces.push_back(face);
  if (p == 1) return faces.size() == 2;

  // Connectivity of the boundary through shared codimension-one faces, plus
  // counts of vertices and ridges.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> ridges;
  std::set<std::size_t> vertices;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t v : faces[f]) vertices.insert(v);
    for (std::size_t i = 0; i < faces[f].size(); ++i) {
      auto r = faces[f];
      r.erase(r.begin() + static_cast<long>(i));
      ridges[r].push_back(f);
    }
  }
  for (const auto& [r, fs] : ridges)
    if (fs.size() != 2) return false;
  std::vector<std::size_t> parent(faces.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = root(parent[a]);
  };
  for (const auto& [r, fs] : ridges) parent[root(fs[0])] = root(fs[1]);
  std::set<std::size_t> components;
  for (std::size_t f = 0; f < faces.size(); ++f) components.insert(root(f));
  if (components.size() != 1) return false;
  if (p == 2) return vertices.size() == faces.size();  // a cycle
  long euler = static_cast<long>(vertices.size()) - static_cast<long>(ridges.size()) +
               static_cast<long>(faces.size());
  return euler == 2;
}

}  // namespace mcres
