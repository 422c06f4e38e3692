#include "mcres/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace mcres {
namespace {

/// All monomials of degree 1..max_deg, by degree then lex-decreasing.
std::vector<Monomial> monomials_up_to(std::size_t n, int max_deg) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  for (int d = 1; d <= max_deg; ++d) rec(0, d);
  return out;
}

/// x_i m / x_j for all i < j with x_j | m.
std::vector<Monomial> borel_moves(const Monomial& m) {
  std::vector<Monomial> out;
  for (std::size_t j = 1; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    auto e = m.exponents();
    --e[j];
    for (std::size_t i = 0; i < j; ++i) {
      auto f = e;
      ++f[i];
      out.emplace_back(f);
    }
  }
  return out;
}

}  // namespace

std::vector<Monomial> borel_closure(std::size_t num_vars, const std::vector<Monomial>& seeds) {
  std::set<Monomial> seen;
  std::vector<Monomial> stack;
  for (const auto& s : seeds) {
    Monomial m(num_vars);
    m = m * s;
    if (seen.insert(m).second) stack.push_back(m);
  }
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    for (auto& next : borel_moves(m))
      if (seen.insert(next).second) stack.push_back(next);
  }
  return minimalize({seen.begin(), seen.end()});
}

OrderedIdeal stable_order(std::size_t num_vars, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  return OrderedIdeal(num_vars, std::move(gens));
}

bool is_strongly_stable(const OrderedIdeal& ideal) {
  for (const auto& g : ideal.gens())
    for (const auto& m : borel_moves(g))
      if (std::none_of(ideal.gens().begin(), ideal.gens().end(),
                       [&](const Monomial& h) { return h.divides(m); }))
        return false;
  return true;
}

bool is_squarefree_strongly_stable(const DGraph& h) {
  std::set<std::vector<int>> edges(h.edges.begin(), h.edges.end());
  for (const auto& e : h.edges)
    for (std::size_t p = 0; p < e.size(); ++p)
      for (int v : h.vertices) {
        if (v >= e[p] || std::binary_search(e.begin(), e.end(), v)) continue;
        auto f = e;
        f[p] = v;
        std::sort(f.begin(), f.end());
        if (!edges.count(f)) return false;
      }
  return true;
}

std::vector<OrderedIdeal> all_stable_ideals(std::size_t num_vars, int max_deg) {
  const auto mons = monomials_up_to(num_vars, max_deg);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  // Membership in a strongly stable ideal is closed upward under Borel
  // moves and multiplication; record both directions.
  std::vector<std::vector<std::size_t>> up(mons.size()), down(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    std::vector<Monomial> above = borel_moves(mons[i]);
    for (std::size_t v = 0; v < num_vars; ++v) above.push_back(mons[i].times_variable(static_cast<int>(v)));
    for (const auto& m : above) {
      auto it = index.find(m);
      if (it == index.end()) continue;
      up[i].push_back(it->second);
      down[it->second].push_back(i);
    }
  }

  std::vector<OrderedIdeal> out;
  std::vector<signed char> state(mons.size(), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    while (i < mons.size() && state[i] != -1) ++i;
    if (i == mons.size()) {
      std::vector<Monomial> members;
      for (std::size_t k = 0; k < mons.size(); ++k)
        if (state[k] == 1) members.push_back(mons[k]);
      if (!members.empty()) out.push_back(stable_order(num_vars, minimalize(members)));
      return;
    }
    for (signed char choice : {static_cast<signed char>(0), static_cast<signed char>(1)}) {
      std::vector<std::size_t> changed;
      std::vector<std::size_t> stack = {i};
      state[i] = choice;
      changed.push_back(i);
      while (!stack.empty()) {
        std::size_t k = stack.back();
        stack.pop_back();
        for (std::size_t next : (choice == 1 ? up[k] : down[k]))
          if (state[next] == -1) {
            state[next] = choice;
            changed.push_back(next);
            stack.push_back(next);
          }
      }
      rec(i + 1);
      for (std::size_t k : changed) state[k] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const OrderedIdeal& a, const OrderedIdeal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.gens() < b.gens();
  });
  return out;
}

std::vector<DGraph> all_cointerval_graphs(int d, int n) {
  // Edge sets of all cointerval e-graphs on {a..n}, the empty one included.
  // Layer v of such a graph is a cointerval (e-1)-graph on {v+1..n}.
  using EdgeSet = std::vector<std::vector<int>>;
  std::map<std::pair<int, int>, std::vector<EdgeSet>> memo;
  std::function<const std::vector<EdgeSet>&(int, int)> graphs = [&](int e, int a) -> const std::vector<EdgeSet>& {
    auto key = std::make_pair(e, a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<EdgeSet> out;
    const int span = std::max(0, n - a + 1);
    if (e == 1) {
      for (std::uint32_t mask = 0; mask < (1U << span); ++mask) {
        EdgeSet s;
        for (int i = 0; i < span; ++i)
          if (mask & (1U << i)) s.push_back({a + i});
        out.push_back(s);
      }
      return memo[key] = std::move(out);
    }
    std::vector<const EdgeSet*> chosen(static_cast<std::size_t>(span));
    std::function<void(int, const EdgeSet*)> rec = [&](int v, const EdgeSet* prev) {
      if (v > n) {
        EdgeSet edges;
        for (int u = a; u <= n; ++u)
          for (const auto& tail : *chosen[u - a]) {
            std::vector<int> edge = {u};
            edge.insert(edge.end(), tail.begin(), tail.end());
            edges.push_back(edge);
          }
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));
        return;
      }
      for (const auto& layer : graphs(e - 1, v + 1)) {
        if (prev && !std::includes(prev->begin(), prev->end(), layer.begin(), layer.end())) continue;
        chosen[v - a] = &layer;
        rec(v + 1, &layer);
      }
    };
    rec(a, nullptr);
    return memo[key] = std::move(out);
  };

  std::vector<DGraph> out;
  for (const auto& edges : graphs(d, 1))
    if (!edges.empty()) out.push_back(make_dgraph(d, n, edges));
  std::sort(out.begin(), out.end(), [](const DGraph& a, const DGraph& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

std::vector<OrderedIdeal> random_lq_corpus(std::size_t count, std::uint64_t seed, std::size_t max_gens,
                                           std::size_t max_vars) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> vars(2, std::max<std::size_t>(2, max_vars));
  std::uniform_int_distribution<std::size_t> gens(1, std::max<std::size_t>(1, max_gens));
  std::uniform_int_distribution<int> deg(1, 3);
  std::vector<OrderedIdeal> out;
  std::set<std::pair<std::size_t, std::vector<Monomial>>> seen;
  while (out.size() < count) {
    std::size_t n = vars(rng);
    std::size_t k = gens(rng);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::vector<Monomial> raw;
    for (std::size_t i = 0; i < k; ++i) {
      Monomial m(n);
      for (int e = deg(rng); e > 0; --e) m = m.times_variable(static_cast<int>(var(rng)));
      raw.push_back(m);
    }
    auto g = minimalize(raw);
    if (g.size() > max_gens || !seen.insert({n, g}).second) continue;
    auto order = find_linear_quotient_order(n, g);
    if (!order) continue;
    std::vector<Monomial> ordered;
    for (auto i : *order) ordered.push_back(g[i]);
    OrderedIdeal ideal(n, ordered);
    if (!check_regularity(ideal).regular) continue;
    out.push_back(std::move(ideal));
  }
  return out;
}

std::optional<OrderedIdeal> regular_form(const OrderedIdeal& ideal, std::size_t budget) {
  if (is_linear_quotient_order(ideal).ok && check_regularity(ideal).regular) return ideal;
  auto order = find_regular_order(ideal.num_vars(), ideal.gens(), budget);
  if (!order) return std::nullopt;
  return ideal.reordered(*order);
}

CorpusTags tag_ideal(const OrderedIdeal& ideal) {
  CorpusTags tags;
  tags.linear_quotients = is_linear_quotient_order(ideal).ok;
  tags.regular = tags.linear_quotients && check_regularity(ideal).regular;
  tags.cointerval = is_cointerval_ideal(ideal);
  tags.stable = is_strongly_stable(ideal);
  return tags;
}

OrderedIdeal example_linear_quotients() {
  return parse_ideal("x1*x3*x4, x1*x3*x5, x1*x2*x4, x1*x4*x5, x2*x3*x4, x2*x3*x5");
}

OrderedIdeal example_running() {
  return parse_ideal("x1*x2, x1*x3, x1*x5, x2*x3, x2*x5, x3*x5, x4*x5");
}

std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec) {
  std::vector<CorpusItem> out;
  if (spec.examples) {
    auto one = example_linear_quotients();
    out.push_back({"example-linear-quotients", "example", one, std::nullopt, tag_ideal(one)});
    auto run = example_running();
    out.push_back({"example-running", "example", run, dgraph_of(run), tag_ideal(run)});
  }
  if (spec.stable_vars > 0) {
    std::size_t i = 0;
    for (auto& ideal : all_stable_ideals(spec.stable_vars, spec.stable_degree)) {
      auto tags = tag_ideal(ideal);
      out.push_back({"stable-" + std::to_string(i++), "stable", std::move(ideal), std::nullopt, tags});
    }
  }
  for (int d = 1; d <= spec.graph_max_d && spec.graph_vars > 0; ++d) {
    std::size_t i = 0;
    for (auto& h : all_cointerval_graphs(d, spec.graph_vars)) {
      auto ideal = edge_ideal(h, static_cast<std::size_t>(spec.graph_vars));
      auto tags = tag_ideal(ideal);
      out.push_back({"cointerval-d" + std::to_string(d) + "-" + std::to_string(i++), "cointerval",
                     std::move(ideal), std::move(h), tags});
    }
  }
  std::size_t i = 0;
  for (auto& ideal : random_lq_corpus(spec.random_count, spec.seed)) {
    auto tags = tag_ideal(ideal);
    out.push_back({"random-" + std::to_string(i++), "random", std::move(ideal), std::nullopt, tags});
  }
  return out;
}

}  // namespace mcres
