#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "mcres/corpus.hpp"

using namespace mcres;

namespace {

std::vector<Monomial> all_monomials(std::size_t n, int max_deg) {
  std::vector<Monomial> out;
  std::vector<Monomial> layer = {Monomial(n)};
  for (int d = 1; d <= max_deg; ++d) {
    std::set<Monomial> next;
    for (const auto& m : layer)
      for (std::size_t v = 0; v < n; ++v) next.insert(m.times_variable(static_cast<int>(v)));
    layer.assign(next.begin(), next.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Brute force: subsets of low-degree monomials closed under multiplication
/// (within the degree bound) and under x_j -> x_i for i < j.
std::set<std::vector<Monomial>> brute_stable(std::size_t n, int max_deg) {
  auto mons = all_monomials(n, max_deg);
  std::set<std::vector<Monomial>> out;
  for (std::uint32_t mask = 1; mask < (1U << mons.size()); ++mask) {
    auto in = [&](const Monomial& m) {
      for (std::size_t i = 0; i < mons.size(); ++i)
        if (mons[i] == m) return (mask >> i) & 1U;
      return 1U;  // above the degree bound
    };
    bool closed = true;
    for (std::size_t i = 0; i < mons.size() && closed; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const auto& m = mons[i];
      for (std::size_t v = 0; v < n && closed; ++v) closed = in(m.times_variable(static_cast<int>(v)));
      for (std::size_t j = 0; j < n && closed; ++j) {
        if (m[j] == 0) continue;
        for (std::size_t a = 0; a < j && closed; ++a) {
          auto e = m.exponents();
          --e[j];
          ++e[a];
          closed = in(Monomial(e));
        }
      }
    }
    if (!closed) continue;
    std::vector<Monomial> members;
    for (std::size_t i = 0; i < mons.size(); ++i)
      if ((mask >> i) & 1U) members.push_back(mons[i]);
    auto g = minimalize(members);
    std::sort(g.begin(), g.end());
    out.insert(g);
  }
  return out;
}

std::set<std::vector<std::vector<int>>> brute_cointerval(int d, int n) {
  std::vector<std::vector<int>> all;
  std::vector<int> e;
  std::function<void(int)> rec = [&](int low) {
    if (static_cast<int>(e.size()) == d) {
      all.push_back(e);
      return;
    }
    for (int v = low; v <= n; ++v) {
      e.push_back(v);
      rec(v + 1);
      e.pop_back();
    }
  };
  rec(1);
  std::set<std::vector<std::vector<int>>> out;
  for (std::uint32_t mask = 1; mask < (1U << all.size()); ++mask) {
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(all[i]);
    if (is_cointerval(make_dgraph(d, n, edges))) out.insert(edges);
  }
  return out;
}

}  // namespace

TEST_CASE("Borel closure") {
  auto closure = borel_closure(3, {parse_ideal("x2*x3", 3).gen(0)});
  auto expect = parse_ideal("x1^2, x1*x2, x1*x3, x2^2, x2*x3").gens();
  std::sort(closure.begin(), closure.end());
  std::sort(expect.begin(), expect.end());
  CHECK(closure == expect);
  CHECK(is_strongly_stable(stable_order(3, closure)));
  CHECK_FALSE(is_strongly_stable(fixtures::example_one()));
  CHECK(is_strongly_stable(fixtures::maximal(4)));
}

TEST_CASE("stable ideals match brute force on small rings") {
  for (auto [n, deg] : {std::pair<std::size_t, int>{2, 3}, {3, 2}, {3, 3}}) {
    std::set<std::vector<Monomial>> got;
    for (const auto& I : all_stable_ideals(n, deg)) {
      auto g = I.gens();
      std::sort(g.begin(), g.end());
      got.insert(g);
    }
    CHECK(got == brute_stable(n, deg));
  }
}

TEST_CASE("stable corpus in four variables") {
  auto all = all_stable_ideals(4, 3);
  CHECK(all.size() == 350);
  std::set<std::vector<Monomial>> distinct;
  for (const auto& I : all) {
    distinct.insert(I.gens());
    CHECK(is_strongly_stable(I));
    for (const auto& g : I.gens()) CHECK(g.degree() <= 3);
    auto tags = tag_ideal(I);
    CHECK(tags.linear_quotients);
    CHECK(tags.regular);
  }
  CHECK(distinct.size() == all.size());
}

TEST_CASE("cointerval graphs match brute-force filtering") {
  for (auto [d, n] : {std::pair<int, int>{1, 4}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {4, 5}}) {
    std::set<std::vector<std::vector<int>>> got;
    for (const auto& h : all_cointerval_graphs(d, n)) got.insert(h.edges);
    CHECK(got == brute_cointerval(d, n));
  }
  CHECK(all_cointerval_graphs(1, 6).size() == 63);
  auto complete = make_dgraph(2, 3, {{1, 2}, {1, 3}, {2, 3}});
  bool found = false;
  for (const auto& h : all_cointerval_graphs(2, 3)) found = found || h.edges == complete.edges;
  CHECK(found);
}

TEST_CASE("cointerval corpus on six vertices") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& h : all_cointerval_graphs(d, 6)) {
      auto I = edge_ideal(h, 6);
      CHECK(is_linear_quotient_order(I).ok);
      CHECK(is_cointerval_ideal(I));
    }
}

TEST_CASE("regular reordering") {
  // Cointerval, but b is not regular in lex order.
  auto I = edge_ideal(make_dgraph(2, 4, {{1, 3}, {1, 4}, {2, 4}}), 4);
  CHECK(is_cointerval_ideal(I));
  CHECK_FALSE(check_regularity(I).regular);
  auto J = regular_form(I);
  REQUIRE(J);
  CHECK(is_linear_quotient_order(*J).ok);
  CHECK(check_regularity(*J).regular);

  auto run = fixtures::running();
  CHECK(regular_form(run)->gens() == run.gens());
  CHECK_FALSE(find_regular_order(4, parse_ideal("x1*x2, x3*x4").gens()));
}

TEST_CASE("random corpus") {
  auto a = random_lq_corpus(50, 11);
  auto b = random_lq_corpus(50, 11);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].gens() == b[i].gens());
    CHECK(a[i].size() <= 8);
    CHECK(a[i].num_vars() <= 6);
    CHECK(is_linear_quotient_order(a[i]).ok);
    CHECK(check_regularity(a[i]).regular);
  }
}

TEST_CASE("worked examples are tagged") {
  CorpusSpec spec;
  spec.stable_vars = 0;
  spec.graph_vars = 0;
  auto items = generate_corpus(spec);
  REQUIRE(items.size() == 2);
  CHECK(items[0].ideal.gens() == fixtures::example_one().gens());
  CHECK(items[0].tags.linear_quotients);
  CHECK(items[0].tags.regular);
  CHECK_FALSE(items[0].tags.cointerval);
  CHECK_FALSE(items[0].tags.stable);
  CHECK(items[1].ideal.gens() == fixtures::running().gens());
  CHECK(items[1].tags.cointerval);
  CHECK(items[1].graph);
}
