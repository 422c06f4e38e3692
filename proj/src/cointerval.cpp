#include "mcres/cointerval.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "mcres/error.hpp"

namespace mcres {

namespace {

std::string describe(const BlockTuple& cell) {
  std::ostringstream out;
  out << '(';
  for (std::size_t l = 0; l < cell.size(); ++l) {
    out << (l ? ",{" : "{");
    for (std::size_t k = 0; k < cell[l].size(); ++k) out << (k ? "," : "") << cell[l][k];
    out << '}';
  }
  out << ')';
  return out.str();
}

bool in_ideal(const OrderedIdeal& ideal, const Monomial& m) {
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

Monomial swap_variable(const Monomial& m, int out, int in) {
  std::vector<int> e = m.exponents();
  --e.at(static_cast<std::size_t>(out));
  ++e.at(static_cast<std::size_t>(in));
  return Monomial(std::move(e));
}

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void require_generator(const OrderedIdeal& ideal, std::size_t j) {
  if (j >= ideal.size()) throw Error(ErrorKind::index_out_of_range, "generator out of range");
}

}  // namespace

DGraph make_dgraph(int d, int n, std::vector<std::vector<int>> edges) {
  if (d < 1) throw Error(ErrorKind::invalid_input, "edge size must be positive");
  if (n < 0) throw Error(ErrorKind::invalid_input, "vertex count must be non-negative");
  DGraph h;
  h.d = d;
  for (int v = 1; v <= n; ++v) h.vertices.push_back(v);
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != d || std::adjacent_find(e.begin(), e.end()) != e.end())
      throw Error(ErrorKind::invalid_input, "edge needs " + std::to_string(d) + " distinct vertices");
    if (e.front() < 1 || e.back() > n)
      throw Error(ErrorKind::invalid_input, "edge vertex outside 1.." + std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorKind::duplicate_generator, "repeated edge");
  h.edges = std::move(edges);
  return h;
}

DGraph parse_dgraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long>> rows;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorKind::invalid_input, "not an integer: '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty() || rows[0].size() != 2)
    throw Error(ErrorKind::invalid_input, "expected a header line 'd n'");
  const long d = rows[0][0], n = rows[0][1];
  if (d < 1 || d > 64 || n < 0 || n > 4096)
    throw Error(ErrorKind::invalid_input, "header values out of range");
  std::vector<std::vector<int>> edges;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (static_cast<long>(rows[r].size()) != d)
      throw Error(ErrorKind::invalid_input, "edge line " + std::to_string(r + 1) + " has the wrong size");
    std::vector<int> e;
    for (long v : rows[r]) {
      if (v < 1 || v > n) throw Error(ErrorKind::invalid_input, "vertex out of range");
      e.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(e));
  }
  return make_dgraph(static_cast<int>(d), static_cast<int>(n), std::move(edges));
}

OrderedIdeal edge_ideal(const DGraph& h, std::size_t num_vars) {
  std::size_t n = num_vars;
  for (int v : h.vertices) n = std::max(n, static_cast<std::size_t>(v));
  std::vector<Monomial> gens;
  for (const auto& e : h.edges) {
    std::vector<int> vars;
    for (int v : e) vars.push_back(v - 1);
    gens.push_back(squarefree_monomial(n, vars));
  }
  return OrderedIdeal(n, std::move(gens));
}

std::optional<DGraph> dgraph_of(const OrderedIdeal& ideal) {
  const int d = ideal.gen(0).degree();
  std::vector<std::vector<int>> edges;
  for (const auto& g : ideal.gens()) {
    if (g.degree() != d) return std::nullopt;
    auto s = g.support();
    if (static_cast<int>(s.size()) != d) return std::nullopt;
    for (int& v : s) ++v;
    edges.push_back(std::move(s));
  }
  return make_dgraph(d, static_cast<int>(ideal.num_vars()), std::move(edges));
}

DGraph v_layer(const DGraph& h, int v) {
  if (h.d < 2) throw Error(ErrorKind::precondition, "layers need d >= 2");
  DGraph layer;
  layer.d = h.d - 1;
  for (int u : h.vertices)
    if (u > v) layer.vertices.push_back(u);
  for (const auto& e : h.edges)
    if (e.front() == v) layer.edges.emplace_back(e.begin() + 1, e.end());
  return layer;
}

bool is_cointerval(const DGraph& h) {
  if (h.d <= 1) return true;
  std::vector<DGraph> layers;
  for (int v : h.vertices) {
    layers.push_back(v_layer(h, v));
    if (!is_cointerval(layers.back())) return false;
  }
  // vertices are ascending, so nesting of consecutive layers suffices
  for (std::size_t i = 0; i + 1 < layers.size(); ++i)
    if (!std::includes(layers[i].edges.begin(), layers[i].edges.end(),
                       layers[i + 1].edges.begin(), layers[i + 1].edges.end()))
      return false;
  return true;
}

bool is_cointerval_exchange(const DGraph& h) {
  std::set<std::vector<int>> edges(h.edges.begin(), h.edges.end());
  const std::size_t d = static_cast<std::size_t>(h.d);
  for (const auto& e : h.edges) {
    for (std::size_t t = 1; t <= d; ++t) {
      std::vector<int> j(t);
      // enumerate increasing j with j_s <= e_s, j_t < e_{t+1}
      std::function<bool(std::size_t, int)> rec = [&](std::size_t s, int low) -> bool {
        if (s == t) {
          std::vector<int> tuple(j.begin(), j.end());
          tuple.insert(tuple.end(), e.begin() + static_cast<long>(t), e.end());
          return edges.count(tuple) > 0;
        }
        int high = e[s];
        if (s + 1 == t && t < d) high = std::min(high, e[t] - 1);
        for (int v : h.vertices) {
          if (v <= low || v > high) continue;
          j[s] = v;
          if (!rec(s + 1, v)) return false;
        }
        return true;
      };
      if (!rec(0, std::numeric_limits<int>::min())) return false;
    }
  }
  return true;
}

bool is_cointerval_ideal(const OrderedIdeal& ideal) {
  auto h = dgraph_of(ideal);
  return h && is_cointerval(*h);
}

std::optional<std::size_t> HomComplex::find(const BlockTuple& blocks) const {
  std::size_t size = 0;
  for (const auto& b : blocks) size += b.size();
  if (size < blocks.size()) return std::nullopt;
  const std::size_t dim = size - blocks.size();
  auto it = std::lower_bound(cells.begin(), cells.end(), std::tie(dim, blocks),
                             [](const HomCell& c, const auto& key) {
                               return std::tie(c.dim, c.blocks) < key;
                             });
  if (it == cells.end() || it->blocks != blocks) return std::nullopt;
  return static_cast<std::size_t>(it - cells.begin());
}

std::vector<std::size_t> HomComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& c : cells) {
    if (f.size() <= c.dim) f.resize(c.dim + 1, 0);
    ++f[c.dim];
  }
  return f;
}

HomComplex build_hom_complex(const DGraph& h, std::size_t num_vars) {
  HomComplex x;
  x.graph = h;
  x.num_vars = num_vars;
  for (int v : h.vertices) x.num_vars = std::max(x.num_vars, static_cast<std::size_t>(v));
  const std::size_t d = static_cast<std::size_t>(h.d);
  std::set<std::vector<int>> prefixes;
  for (const auto& e : h.edges)
    for (std::size_t l = 1; l <= d; ++l) prefixes.emplace(e.begin(), e.begin() + static_cast<long>(l));

  BlockTuple blocks;
  std::vector<std::vector<int>> products{{}};
  std::function<void(int)> rec = [&](int low) {
    if (blocks.size() == d) {
      HomCell cell;
      cell.blocks = blocks;
      cell.label = Monomial(x.num_vars);
      std::size_t size = 0;
      for (const auto& b : blocks) {
        size += b.size();
        for (int v : b) cell.label = cell.label.times_variable(v - 1);
      }
      cell.dim = size - d;
      x.cells.push_back(std::move(cell));
      return;
    }
    std::vector<int> ok;
    for (int v : h.vertices) {
      if (v <= low) continue;
      bool all = std::all_of(products.begin(), products.end(), [&](std::vector<int> p) {
        p.push_back(v);
        return prefixes.count(p) > 0;
      });
      if (all) ok.push_back(v);
    }
    const auto saved = products;
    for (std::size_t mask = 1; mask < (std::size_t{1} << ok.size()); ++mask) {
      std::vector<int> block;
      for (std::size_t i = 0; i < ok.size(); ++i)
        if (mask >> i & 1) block.push_back(ok[i]);
      products.clear();
      for (const auto& p : saved)
        for (int v : block) {
          products.push_back(p);
          products.back().push_back(v);
        }
      blocks.push_back(block);
      rec(block.back());
      blocks.pop_back();
    }
    products = saved;
  };
  if (d > 0 && !h.edges.empty()) rec(std::numeric_limits<int>::min());
  std::sort(x.cells.begin(), x.cells.end(), [](const HomCell& a, const HomCell& b) {
    return std::tie(a.dim, a.blocks) < std::tie(b.dim, b.blocks);
  });
  return x;
}

std::vector<std::pair<BlockTuple, long>> hom_boundary(const BlockTuple& cell) {
  std::vector<std::pair<BlockTuple, long>> out;
  std::size_t before = 0;  // |sigma_1| + ... + |sigma_{l-1}|
  for (std::size_t l = 0; l < cell.size(); ++l) {
    if (cell[l].size() >= 2) {
      for (std::size_t j = 0; j < cell[l].size(); ++j) {
        // (-1)^(l-1) (-1)^(j + before) with 1-based l and j
        std::size_t exponent = l + (j + 1) + before;
        BlockTuple face = cell;
        face[l].erase(face[l].begin() + static_cast<long>(j));
        out.push_back({std::move(face), exponent % 2 == 0 ? 1 : -1});
      }
    }
    before += cell[l].size();
  }
  return out;
}

Symbol symbol_of_face(const OrderedIdeal& ideal, const BlockTuple& cell) {
  const std::size_t n = ideal.num_vars();
  std::vector<int> support, alpha;
  int previous = 0;
  for (const auto& b : cell) {
    if (b.empty() || !std::is_sorted(b.begin(), b.end()) || b.front() <= previous ||
        b.back() > static_cast<int>(n))
      throw Error(ErrorKind::symbol_not_in_complex, describe(cell));
    previous = b.back();
    support.push_back(b.back() - 1);
    for (std::size_t k = 0; k + 1 < b.size(); ++k) alpha.push_back(b[k] - 1);
  }
  auto j = ideal.index_of(squarefree_monomial(n, support));
  if (!j) throw Error(ErrorKind::symbol_not_in_complex, describe(cell) + " has no generator");
  const auto& set = ideal.set_of(*j);
  if (!std::includes(set.begin(), set.end(), alpha.begin(), alpha.end()))
    throw Error(ErrorKind::symbol_not_in_complex, describe(cell) + " is not a symbol");
  return Symbol{static_cast<int>(*j), alpha};
}

BlockTuple face_of_symbol(const OrderedIdeal& ideal, const Symbol& symbol) {
  if (symbol.gen < 0 || static_cast<std::size_t>(symbol.gen) >= ideal.size())
    throw Error(ErrorKind::symbol_not_in_complex, to_string(symbol));
  const auto j = static_cast<std::size_t>(symbol.gen);
  const auto& set = ideal.set_of(j);
  if (!std::is_sorted(symbol.alpha.begin(), symbol.alpha.end()) ||
      !std::includes(set.begin(), set.end(), symbol.alpha.begin(), symbol.alpha.end()))
    throw Error(ErrorKind::symbol_not_in_complex, to_string(symbol));
  BlockTuple cell;
  int low = -1;
  std::size_t used = 0;
  for (int i : ideal.gen(j).support()) {
    std::vector<int> block;
    for (int a : symbol.alpha)
      if (a > low && a < i) block.push_back(a + 1);
    used += block.size();
    block.push_back(i + 1);
    cell.push_back(std::move(block));
    low = i;
  }
  if (used != symbol.alpha.size())
    throw Error(ErrorKind::symbol_not_in_complex, to_string(symbol));
  return cell;
}

std::vector<std::vector<int>> partition_A(const OrderedIdeal& ideal, std::size_t j) {
  require_generator(ideal, j);
  const Monomial& m = ideal.gen(j);
  std::vector<std::vector<int>> blocks;
  int low = -1;
  for (int i : m.support()) {
    std::vector<int> block;
    for (int v = low + 1; v < i; ++v)
      if (m[static_cast<std::size_t>(v)] == 0 && in_ideal(ideal, swap_variable(m, i, v)))
        block.push_back(v);
    blocks.push_back(std::move(block));
    low = i;
  }
  return blocks;
}

std::vector<int> compute_T(const OrderedIdeal& ideal, std::size_t j, const std::vector<int>& alpha) {
  std::vector<int> out;
  for (const auto& block : partition_A(ideal, j)) {
    int best = -1;
    for (int a : alpha)
      if (contains(block, a)) best = std::max(best, a);
    if (best >= 0) out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t decomp_c(const OrderedIdeal& ideal, std::size_t j, int t) {
  require_generator(ideal, j);
  if (!ideal.in_set(j, t))
    throw Error(ErrorKind::not_in_set, "x" + std::to_string(t + 1) + " for generator " +
                                           ideal.gen(j).to_string());
  const Monomial& m = ideal.gen(j);
  for (int i : m.support()) {
    if (i <= t) continue;
    Monomial target = swap_variable(m, i, t);
    auto g = ideal.index_of(target);
    if (!g) throw Error(ErrorKind::not_in_ideal, target.to_string());
    return *g;
  }
  throw Error(ErrorKind::not_in_set, "no support variable above x" + std::to_string(t + 1));
}

DecompositionRule c_rule(const OrderedIdeal& ideal) {
  std::vector<std::vector<int>> table(ideal.size(), std::vector<int>(ideal.num_vars(), -1));
  for (std::size_t j = 0; j < ideal.size(); ++j)
    for (int t : ideal.set_of(j))
      table[j][static_cast<std::size_t>(t)] = static_cast<int>(decomp_c(ideal, j, t));
  return DecompositionRule(ideal, std::move(table));
}

TermSelector block_maxima_selector(const OrderedIdeal& ideal) {
  std::vector<std::vector<std::vector<int>>> parts;
  for (std::size_t j = 0; j < ideal.size(); ++j) parts.push_back(partition_A(ideal, j));
  return [parts](std::size_t j, const std::vector<int>& alpha) {
    std::vector<int> out;
    for (const auto& block : parts.at(j)) {
      int best = -1;
      for (int a : alpha)
        if (contains(block, a)) best = std::max(best, a);
      if (best >= 0) out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
}

PermutationFilter admissible_filter(const OrderedIdeal& ideal) {
  std::vector<std::vector<std::vector<int>>> parts;
  for (std::size_t j = 0; j < ideal.size(); ++j) parts.push_back(partition_A(ideal, j));
  return [parts](std::size_t j, const std::vector<int>&, const std::vector<int>& sigma) {
    for (const auto& block : parts.at(j)) {
      int last = std::numeric_limits<int>::max();
      for (int s : sigma) {
        if (!contains(block, s)) continue;
        if (s > last) return false;
        last = s;
      }
    }
    return true;
  };
}

namespace {

void require_lex_cointerval(const OrderedIdeal& ideal) {
  auto h = dgraph_of(ideal);
  if (!h || !is_cointerval(*h))
    throw Error(ErrorKind::not_cointerval, "not the edge ideal of a cointerval hypergraph");
  // dgraph_of sorts the edges; the generators must already be in that order
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    auto s = ideal.gen(j).support();
    for (int& v : s) ++v;
    if (s != h->edges[j])
      throw Error(ErrorKind::not_cointerval, "generators are not in lexicographic order");
  }
  if (!is_linear_quotient_order(ideal).ok)
    throw Error(ErrorKind::not_linear_quotients, "lexicographic order fails the colon test");
}

}  // namespace

LabeledChainComplex homcone_resolution(const OrderedIdeal& ideal) {
  require_lex_cointerval(ideal);
  return rule_resolution(ideal, c_rule(ideal), block_maxima_selector(ideal));
}

GlueCell admissible_perm_cells(const OrderedIdeal& ideal, std::size_t j,
                               const std::vector<int>& alpha) {
  require_lex_cointerval(ideal);
  return build_cell(ideal, c_rule(ideal), j, alpha, admissible_filter(ideal));
}

CWComplex build_admissible_cw(const OrderedIdeal& ideal) {
  require_lex_cointerval(ideal);
  CellOptions options{block_maxima_selector(ideal), admissible_filter(ideal)};
  return build_cw(ideal, c_rule(ideal), options);
}

LabeledChainComplex hom_cellular_complex(const HomComplex& x, const OrderedIdeal& ideal) {
  LabeledChainComplex c;
  c.num_vars = ideal.num_vars();
  c.kind = BasisKind::symbol;
  std::size_t top = 0;
  for (const auto& cell : x.cells) top = std::max(top, cell.dim);
  std::vector<std::vector<std::size_t>> ids(x.cells.empty() ? 1 : top + 2);
  for (std::size_t i = 0; i < x.cells.size(); ++i) ids[x.cells[i].dim + 1].push_back(i);
  std::vector<std::size_t> position(x.cells.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    c.basis.emplace_back();
    c.multidegree.emplace_back();
    if (i == 0) {
      c.basis[0].push_back(Symbol{kUnit, {}});
      c.multidegree[0].push_back(Monomial(c.num_vars));
    }
    for (std::size_t k = 0; k < ids[i].size(); ++k) {
      const auto& cell = x.cells[ids[i][k]];
      position[ids[i][k]] = k;
      c.basis[i].push_back(symbol_of_face(ideal, cell.blocks));
      c.multidegree[i].push_back(cell.label);
    }
    c.diff.emplace_back(i == 0 ? 0 : c.basis[i - 1].size(), c.basis[i].size());
  }
  for (std::size_t i = 1; i < ids.size(); ++i) {
    for (std::size_t k = 0; k < ids[i].size(); ++k) {
      const auto& cell = x.cells[ids[i][k]];
      if (cell.dim == 0) {
        c.diff[i].add(0, k, 1, cell.label);
        continue;
      }
      for (const auto& [face, sign] : hom_boundary(cell.blocks)) {
        auto f = x.find(face);
        if (!f) throw Error(ErrorKind::symbol_not_in_complex, describe(face));
        const auto& fc = x.cells[*f];
        if (!fc.label.divides(cell.label))
          throw Error(ErrorKind::non_monotone_labels, describe(face));
        c.diff[i].add(position[*f], k, sign, cell.label.quotient(fc.label));
      }
    }
  }
  canonicalize(c);
  return c;
}

}  // namespace mcres
