#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "mcres/cointerval.hpp"
#include "mcres/error.hpp"

using namespace mcres;

namespace {

DGraph running_graph() {
  return make_dgraph(2, 5, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 5}, {4, 5}});
}

DGraph complete(int d, int n) {
  std::vector<std::vector<int>> edges;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != d) continue;
    std::vector<int> e;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) e.push_back(v + 1);
    edges.push_back(e);
  }
  return make_dgraph(d, n, edges);
}

/// All d-graphs on [n], one per subset of the possible edges.
std::vector<DGraph> all_graphs(int d, int n) {
  auto full = complete(d, n).edges;
  std::vector<DGraph> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << full.size()); ++mask) {
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < full.size(); ++i)
      if (mask >> i & 1) edges.push_back(full[i]);
    out.push_back(make_dgraph(d, n, edges));
  }
  return out;
}

/// Closure under moving coordinate s < d to any vertex strictly between
/// its neighbours, which unwinds the recursive layer definition.
bool shift_closed(const DGraph& h) {
  std::set<std::vector<int>> edges(h.edges.begin(), h.edges.end());
  for (const auto& e : h.edges)
    for (std::size_t s = 0; s + 1 < e.size(); ++s)
      for (int v : h.vertices) {
        if (v >= e[s] || (s > 0 && v <= e[s - 1])) continue;
        auto f = e;
        f[s] = v;
        if (!edges.count(f)) return false;
      }
  return true;
}

/// Squarefree strongly stable closure of an edge set on [n].
DGraph squarefree_borel(int d, int n, std::vector<std::vector<int>> seeds) {
  std::set<std::vector<int>> edges(seeds.begin(), seeds.end());
  std::vector<std::vector<int>> todo(seeds);
  while (!todo.empty()) {
    auto e = todo.back();
    todo.pop_back();
    for (std::size_t s = 0; s < e.size(); ++s)
      for (int v = 1; v < e[s]; ++v) {
        if (std::find(e.begin(), e.end(), v) != e.end()) continue;
        auto f = e;
        f[s] = v;
        std::sort(f.begin(), f.end());
        if (edges.insert(f).second) todo.push_back(f);
      }
  }
  return make_dgraph(d, n, {edges.begin(), edges.end()});
}

std::vector<std::vector<int>> subsets(const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (1u << s.size()); ++mask) {
    std::vector<int> a;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask >> i & 1) a.push_back(s[i]);
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("layers") {
  auto h = running_graph();
  auto l1 = v_layer(h, 1);
  CHECK(l1.d == 1);
  CHECK(l1.edges == std::vector<std::vector<int>>{{2}, {3}, {5}});
  CHECK(v_layer(h, 5).edges.empty());
  auto k = v_layer(complete(3, 5), 1);
  CHECK(k.edges == std::vector<std::vector<int>>{{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(k.vertices == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("cointerval recognition") {
  CHECK(is_cointerval(running_graph()));
  CHECK(is_cointerval(complete(3, 5)));
  CHECK(is_cointerval(complete(2, 4)));
  CHECK_FALSE(is_cointerval(make_dgraph(2, 4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(is_cointerval_ideal(fixtures::example_one()));
  CHECK(is_cointerval_ideal(fixtures::running()));
}

TEST_CASE("recursive definition agrees with shift closure") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& h : all_graphs(d, 5)) CHECK(is_cointerval(h) == shift_closed(h));
}

TEST_CASE("exchange test") {
  CHECK(is_cointerval_exchange(complete(3, 5)));
  CHECK(is_cointerval_exchange(complete(2, 4)));
  CHECK_FALSE(is_cointerval_exchange(running_graph()));
  CHECK(is_cointerval(running_graph()));
  // squarefree strongly stable graphs: both tests accept
  for (int d = 2; d <= 3; ++d)
    for (const auto& seed : complete(d, 6).edges) {
      auto h = squarefree_borel(d, 6, {seed});
      CHECK(is_cointerval(h));
      CHECK(is_cointerval_exchange(h));
    }
}

TEST_CASE("homomorphism complexes") {
  auto x = build_hom_complex(running_graph());
  CHECK(x.f_vector() == std::vector<std::size_t>{7, 11, 6, 1});
  CHECK(x.cells.back().blocks == BlockTuple{{1, 2, 3, 4}, {5}});
  auto single = build_hom_complex(make_dgraph(2, 3, {{1, 3}}));
  CHECK(single.f_vector() == std::vector<std::size_t>{1});
  auto tri = build_hom_complex(complete(2, 3));
  CHECK(tri.f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(tri.find({{1, 2}, {3}}));
  CHECK(tri.find({{1}, {2, 3}}));
  for (const auto& cell : x.cells) {
    Monomial lcm_label(5);
    // every product vertex is an edge, and the label is their lcm
    std::vector<std::vector<int>> products{{}};
    for (const auto& b : cell.blocks) {
      std::vector<std::vector<int>> next;
      for (const auto& p : products)
        for (int v : b) {
          next.push_back(p);
          next.back().push_back(v);
        }
      products = next;
    }
    for (const auto& p : products) {
      CHECK(std::binary_search(x.graph.edges.begin(), x.graph.edges.end(), p));
      std::vector<int> vars;
      for (int v : p) vars.push_back(v - 1);
      lcm_label = lcm(lcm_label, squarefree_monomial(5, vars));
    }
    CHECK(lcm_label == cell.label);
  }
}

TEST_CASE("boundary of product cells") {
  auto b = hom_boundary({{1, 2, 3}, {5}});
  REQUIRE(b.size() == 3);
  CHECK(b[0] == std::make_pair(BlockTuple{{2, 3}, {5}}, -1L));
  CHECK(b[1] == std::make_pair(BlockTuple{{1, 3}, {5}}, 1L));
  CHECK(b[2] == std::make_pair(BlockTuple{{1, 2}, {5}}, -1L));
  auto e = hom_boundary({{1, 2}, {5}});
  REQUIRE(e.size() == 2);
  CHECK(e[0].second == -e[1].second);

  auto x = build_hom_complex(running_graph());
  for (const auto& cell : x.cells) {
    std::map<BlockTuple, long> dd;
    for (const auto& [f, s] : hom_boundary(cell.blocks)) {
      REQUIRE(x.find(f));
      CHECK(x.cells[*x.find(f)].label.divides(cell.label));
      for (const auto& [g, t] : hom_boundary(f)) dd[g] += s * t;
    }
    for (const auto& [g, v] : dd) CHECK(v == 0);
  }
}

TEST_CASE("faces and symbols") {
  auto I = fixtures::running();
  CHECK(symbol_of_face(I, {{1, 2, 3}, {5}}) == Symbol{5, {0, 1}});
  CHECK(face_of_symbol(I, Symbol{5, {0, 1}}) == BlockTuple{{1, 2, 3}, {5}});
  CHECK(symbol_of_face(I, {{4}, {5}}) == Symbol{6, {}});
  CHECK_THROWS_AS(symbol_of_face(I, {{1, 3}, {4}}), Error);
  CHECK_THROWS_AS(face_of_symbol(I, Symbol{0, {2}}), Error);
  auto x = build_hom_complex(running_graph());
  for (const auto& cell : x.cells)
    CHECK(face_of_symbol(I, symbol_of_face(I, cell.blocks)) == cell.blocks);
}

TEST_CASE("blocks, maxima and the c function") {
  auto I = fixtures::running();
  auto a5 = partition_A(I, 5);
  CHECK(a5 == std::vector<std::vector<int>>{{0, 1}, {}});
  CHECK(compute_T(I, 5, {0, 1}) == std::vector<int>{1});
  auto a4 = partition_A(I, 4);
  CHECK(a4 == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(compute_T(I, 4, {0, 2}) == std::vector<int>{0, 2});
  CHECK(partition_A(I, 6) == std::vector<std::vector<int>>{{0, 1, 2}, {}});
  CHECK(compute_T(I, 6, {0, 1, 2}) == std::vector<int>{2});

  CHECK(decomp_c(I, 6, 2) == 5);
  CHECK(decomp_c(I, 4, 0) == 2);
  CHECK(decomp_b(I, I.gen(4).times_variable(0)) == 0);
  try {
    decomp_c(I, 4, 1);
    FAIL("expected NotInSet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_in_set);
  }

  auto K = edge_ideal(complete(3, 5));
  auto m = *K.index_of(squarefree_monomial(5, {2, 3, 4}));
  CHECK(K.set_of(m) == std::vector<int>{0, 1});
  auto left = decomp_c(K, decomp_c(K, m, 0), 1);
  auto right = decomp_c(K, decomp_c(K, m, 1), 0);
  CHECK(K.gen(left) == squarefree_monomial(5, {0, 1, 4}));
  CHECK(K.gen(right) == squarefree_monomial(5, {0, 3, 4}));
}

TEST_CASE("the homomorphism-complex resolution") {
  auto I = fixtures::running();
  auto F = homcone_resolution(I);
  CHECK(F.betti_ranks() == std::vector<std::size_t>{7, 11, 6, 1});
  CHECK(check_dd_zero(F));
  CHECK(check_minimal(F));
  Symbol col{5, {0, 1}};
  auto k = *F.index_of(3, col);
  std::map<Symbol, std::pair<long, Monomial>> terms;
  for (const auto& t : F.diff[3].column(k)) terms[F.basis[2][t.row]] = {t.coeff, t.mono};
  CHECK(terms.size() == 3);
  CHECK(terms[Symbol{5, {1}}] == std::make_pair(-1L, Monomial::variable(5, 0)));
  CHECK(terms[Symbol{5, {0}}] == std::make_pair(1L, Monomial::variable(5, 1)));
  CHECK(terms[Symbol{4, {0}}] == std::make_pair(-1L, Monomial::variable(5, 2)));

  auto C = hom_cellular_complex(build_hom_complex(running_graph()), I);
  auto cmp = compare_complexes(C, F, true);
  CHECK_MESSAGE(cmp.equal, cmp.mismatch);

  try {
    homcone_resolution(fixtures::example_one());
    FAIL("expected NotCointerval");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_cointerval);
  }
}

TEST_CASE("admissible permutation cells") {
  auto I = fixtures::running();
  auto top = admissible_perm_cells(I, 6, {0, 1, 2});
  REQUIRE(top.simplices.size() == 1);
  CHECK(top.simplices[0].vertices == std::vector<std::size_t>{6, 5, 4, 2});
  auto vertex = admissible_perm_cells(I, 3, {});
  CHECK(vertex.chain.size() == 1);
  auto X = build_admissible_cw(I);
  auto cmp = compare_complexes(cellular_chain_complex(X), homcone_resolution(I), true);
  CHECK_MESSAGE(cmp.equal, cmp.mismatch);
}

TEST_CASE("exhaustive checks on cointerval graphs over five vertices") {
  int graphs = 0;
  for (int d = 2; d <= 3; ++d) {
    for (const auto& h : all_graphs(d, 5)) {
      if (!is_cointerval(h)) continue;
      ++graphs;
      auto I = edge_ideal(h);
      REQUIRE(is_linear_quotient_order(I).ok);
      auto x = build_hom_complex(h);
      CHECK(x.f_vector() == symbol_counts(I));
      for (const auto& cell : x.cells)
        CHECK(face_of_symbol(I, symbol_of_face(I, cell.blocks)) == cell.blocks);
      auto F = homcone_resolution(I);
      CHECK(check_dd_zero(F));
      CHECK(check_minimal(F));
      CHECK(compare_complexes(hom_cellular_complex(x, I), F, true).equal);
      CHECK(compare_complexes(cellular_chain_complex(build_admissible_cw(I)), F, true).equal);
      for (std::size_t j = 0; j < I.size(); ++j) {
        auto parts = partition_A(I, j);
        std::vector<int> joined;
        for (const auto& p : parts) joined.insert(joined.end(), p.begin(), p.end());
        std::sort(joined.begin(), joined.end());
        CHECK(joined == I.set_of(j));
        for (const auto& p : parts)
          for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) {
              int s = p[a], t = p[b];
              CHECK(decomp_c(I, decomp_c(I, j, t), s) == decomp_c(I, j, s));
            }
        for (const auto& alpha : subsets(I.set_of(j))) {
          auto T = compute_T(I, j, alpha);
          CHECK(std::includes(alpha.begin(), alpha.end(), T.begin(), T.end()));
        }
      }
    }
  }
  CHECK(graphs > 100);
}
