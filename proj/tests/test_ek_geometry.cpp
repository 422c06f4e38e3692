#include <algorithm>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "fixtures.hpp"
#include "mcres/chain_complex.hpp"
#include "mcres/ek_geometry.hpp"
#include "mcres/error.hpp"

using namespace mcres;
using Rational = boost::multiprecision::cpp_rational;

namespace {

/// Rank of the difference vectors by Gauss-Jordan over the rationals.
bool independent_oracle(const std::vector<Monomial>& pts) {
  if (pts.size() <= 1) return true;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r;
    for (std::size_t k = 0; k < pts[0].size(); ++k) r.emplace_back(pts[i][k] - pts[0][k]);
    rows.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < pts[0].size() && rank < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                           [&](const auto& r) { return r[c] != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<long>(rank), it);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank == rows.size();
}

std::vector<std::vector<int>> all_perms(std::vector<int> a) {
  std::vector<std::vector<int>> out;
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

/// Non-degenerate chains of (m, alpha) whose vertex set contains `face`.
int containing(const OrderedIdeal& I, const DecompositionRule& rule, std::size_t m,
               const std::vector<int>& alpha, const std::set<std::size_t>& face) {
  int count = 0;
  for (const auto& s : all_perms(alpha)) {
    auto c = ch_simplex(I, rule, m, alpha, s);
    if (c.degenerate) continue;
    std::set<std::size_t> v(c.vertices.begin(), c.vertices.end());
    if (std::includes(v.begin(), v.end(), face.begin(), face.end())) ++count;
  }
  return count;
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

/// Facet, lift and independence checks for every (m, alpha, sigma).
void check_simplices(const OrderedIdeal& I) {
  auto rule = canonical_rule(I);
  for (std::size_t m = 0; m < I.size(); ++m) {
    for (const auto& alpha : subsets(I.set_of(m))) {
      for (const auto& s : all_perms(alpha)) {
        auto c = ch_simplex(I, rule, m, alpha, s);
        if (c.degenerate) {
          auto lifted = ch_simplex(I, rule, m, alpha, nondegenerate_lift(I, rule, m, alpha, s));
          CHECK_FALSE(lifted.degenerate);
          std::set<std::size_t> a(c.vertices.begin(), c.vertices.end());
          std::set<std::size_t> b(lifted.vertices.begin(), lifted.vertices.end());
          CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
          continue;
        }
        std::vector<Monomial> pts;
        for (auto v : c.vertices) pts.push_back(I.gen(v));
        CHECK(independent_oracle(pts));
        CHECK(affinely_independent(pts));
        for (std::size_t drop = 0; drop <= alpha.size() && !alpha.empty(); ++drop) {
          std::set<std::size_t> face(c.vertices.begin(), c.vertices.end());
          face.erase(c.vertices[drop]);
          auto fc = classify_facet(I, rule, c, drop);
          int count = containing(I, rule, m, alpha, face);
          CHECK(count == (fc.interior ? 2 : 1));
          if (fc.interior) {
            auto partner = ch_simplex(I, rule, m, alpha, fc.partner);
            CHECK_FALSE(partner.degenerate);
            std::set<std::size_t> pv(partner.vertices.begin(), partner.vertices.end());
            CHECK(std::includes(pv.begin(), pv.end(), face.begin(), face.end()));
          }
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("chains of Example-1") {
  auto I = fixtures::example_one();
  auto deg = ch_simplex(I, 3, {1, 2}, {2, 1});
  CHECK(deg.degenerate);
  CHECK(deg.vertices == std::vector<std::size_t>{3, 0, 0});
  auto nd = ch_simplex(I, 3, {1, 2}, {1, 2});
  CHECK_FALSE(nd.degenerate);
  CHECK(nd.vertices == std::vector<std::size_t>{3, 2, 0});
  auto point = ch_simplex(I, 4, {}, {});
  CHECK_FALSE(point.degenerate);
  CHECK(point.vertices == std::vector<std::size_t>{4});

  try {
    ch_simplex(I, 3, {0}, {0});
    FAIL("expected AlphaNotInSet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::alpha_not_in_set);
  }
}

TEST_CASE("lifting a degenerate chain") {
  auto I = fixtures::example_one();
  auto rule = canonical_rule(I);
  CHECK(nondegenerate_lift(I, rule, 3, {1, 2}, {2, 1}) == std::vector<int>{1, 2});
  try {
    nondegenerate_lift(I, rule, 3, {1, 2}, {1, 2});
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("facet classification") {
  auto I = fixtures::example_one();
  auto rule = canonical_rule(I);
  auto tri = ch_simplex(I, rule, 3, {1, 2}, {1, 2});
  CHECK_FALSE(classify_facet(I, rule, tri, 1).interior);
  CHECK_FALSE(classify_facet(I, rule, tri, 0).interior);
  auto deg = ch_simplex(I, rule, 3, {1, 2}, {2, 1});
  CHECK_THROWS_AS(classify_facet(I, rule, deg, 1), Error);

  auto R = fixtures::running();
  auto rr = canonical_rule(R);
  int interior = 0;
  for (const auto& s : all_perms({0, 1, 2})) {
    auto c = ch_simplex(R, rr, 6, {0, 1, 2}, s);
    if (c.degenerate) continue;
    for (std::size_t drop = 0; drop <= 3; ++drop) {
      auto fc = classify_facet(R, rr, c, drop);
      std::set<std::size_t> face(c.vertices.begin(), c.vertices.end());
      face.erase(c.vertices[drop]);
      CHECK(containing(R, rr, 6, {0, 1, 2}, face) == (fc.interior ? 2 : 1));
      interior += fc.interior;
    }
  }
  CHECK(interior > 0);
}

TEST_CASE("orientation sign") {
  CHECK(orientation_sign({1, 2}) == -1);
  CHECK(orientation_sign({2, 1}) == 1);
  CHECK(orientation_sign({4, 3, 2, 1}) == 1);
  std::vector<int> s = {3, 1, 4, 2};
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    auto t = s;
    std::swap(t[i], t[i + 1]);
    CHECK(orientation_sign(t) == -orientation_sign(s));
  }
}

TEST_CASE("glued cells") {
  auto I = fixtures::example_one();
  auto tri = build_cell(I, 3, {1, 2});
  CHECK(tri.simplices.size() == 1);
  CHECK(tri.dim() == 2);
  auto vertex = build_cell(I, 2, {});
  CHECK(vertex.chain.size() == 1);

  auto R = fixtures::running();
  auto top = build_cell(R, 6, {0, 1, 2});
  int nondegenerate = 0;
  for (const auto& s : all_perms({0, 1, 2}))
    nondegenerate += !ch_simplex(R, 6, {0, 1, 2}, s).degenerate;
  CHECK(top.simplices.size() == static_cast<std::size_t>(nondegenerate));
  CHECK(top.simplices.size() >= 2);
  CHECK(is_ball(top) == std::optional<bool>(true));
}

TEST_CASE("cell boundaries") {
  auto I = fixtures::example_one();
  auto rule = canonical_rule(I);
  // A segment: vertex b(x_t m) minus vertex m.
  auto seg = build_cell(I, 1, {3});
  auto sb = cell_boundary(I, rule, seg);
  REQUIRE(sb.size() == 2);
  CHECK(sb[0] == std::make_pair(Symbol{1, {}}, -1L));
  CHECK(sb[1] == std::make_pair(Symbol{static_cast<int>(rule.apply(1, 3)), {}}, 1L));

  // The triangle's boundary is its three edges; the formula agrees once
  // the zero convention removes U(x1x3x4, {2}).
  auto tri = build_cell(I, 3, {1, 2});
  auto geometric = simplicial_boundary(tri.chain);
  CHECK(geometric.size() == 3);
  auto formula = cell_boundary(I, rule, tri);
  CHECK(formula.size() == 3);

  auto X = build_ek_cw(fixtures::running());
  auto top = *X.find(Symbol{6, {0, 1, 2}});
  std::map<std::size_t, long> dd;
  for (auto [f, c] : X.cells[top].boundary)
    for (auto [g, e] : X.cells[f].boundary) dd[g] += c * e;
  for (auto [g, v] : dd) CHECK(v == 0);
}

TEST_CASE("assembled complexes") {
  auto R = fixtures::running();
  auto X = build_ek_cw(R);
  CHECK(X.f_vector() == std::vector<std::size_t>{7, 11, 6, 1});
  auto C = cellular_chain_complex(X);
  CHECK(check_dd_zero(C));
  auto cmp = compare_complexes(C, ht_resolution(R), true);
  CHECK_MESSAGE(cmp.equal, cmp.mismatch);

  auto M = fixtures::maximal(4);
  auto XM = build_ek_cw(M);
  CHECK(XM.f_vector() == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(compare_complexes(cellular_chain_complex(XM), ht_resolution(M), true).equal);

  auto E = fixtures::example_one();
  auto XE = build_ek_cw(E);
  CHECK(XE.f_vector() == symbol_counts(E));
  CHECK(compare_complexes(cellular_chain_complex(XE), ht_resolution(E), true).equal);
}

TEST_CASE("labels and balls") {
  for (const auto& I : {fixtures::running(), fixtures::example_one(), fixtures::maximal(4)}) {
    auto X = build_ek_cw(I);
    for (std::size_t id = 1; id < X.cells.size(); ++id) {
      const auto& cell = X.cells[id];
      Monomial lcm_label(I.num_vars());
      for (const auto& [simplex, c] : cell.geometry.chain)
        for (auto v : simplex) lcm_label = lcm(lcm_label, I.gen(v));
      CHECK(lcm_label == cell.label);
      for (auto [f, c] : cell.boundary) CHECK(X.cells[f].label.divides(cell.label));
      CHECK(is_ball(cell.geometry) == std::optional<bool>(true));
      // interior facets cancel: what remains lies on faces of the cell
      std::size_t covered = 0;
      for (auto [f, c] : cell.boundary) covered += X.cells[f].geometry.chain.size();
      CHECK(simplicial_boundary(cell.geometry.chain).size() == covered);
    }
  }
}

TEST_CASE("affine independence") {
  auto I = fixtures::example_one();
  CHECK(affinely_independent({I.gen(3), I.gen(2), I.gen(0)}));
  CHECK_FALSE(affinely_independent({I.gen(3), I.gen(3)}));
  CHECK_FALSE(affinely_independent({Monomial({0, 0}), Monomial({1, 1}), Monomial({2, 2})}));
}

TEST_CASE("simplex properties on examples and random ideals") {
  check_simplices(fixtures::example_one());
  check_simplices(fixtures::running());
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    std::size_t n = 4 + trial % 2;
    auto gens = fixtures::random_gens(rng, n, 3 + trial % 5, 3);
    auto order = find_linear_quotient_order(n, gens);
    if (!order) continue;
    std::vector<Monomial> g;
    for (auto i : *order) g.push_back(gens[i]);
    OrderedIdeal I(n, g);
    if (!check_regularity(I).regular) continue;
    ++checked;
    check_simplices(I);
    auto X = build_ek_cw(I);
    CHECK(compare_complexes(cellular_chain_complex(X), ht_resolution(I), true).equal);
  }
  CHECK(checked > 20);
}
