#include "mcres/decomp_space.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "mcres/error.hpp"
#include "mcres/verification.hpp"

namespace mcres {

std::string to_string(RuleShape shape) {
  return shape == RuleShape::full ? "full" : "block_maxima";
}

bool blocks_cover_sets(const OrderedIdeal& ideal) {
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    std::vector<int> all;
    for (const auto& block : partition_A(ideal, j)) all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());
    if (all != ideal.set_of(j)) return false;
  }
  return true;
}

namespace {

bool passes(const OrderedIdeal& ideal, const LabeledChainComplex& res, const RankOptions& rank) {
  return check_dd_zero(res) && check_minimal(res) && check_cellular_resolution(res, ideal, rank).ok;
}

}  // namespace

std::vector<RegularRule> enumerate_regular_rules(const OrderedIdeal& ideal,
                                                 const EnumerationOptions& options) {
  auto lq = is_linear_quotient_order(ideal);
  if (!lq.ok)
    throw Error(ErrorKind::not_linear_quotients,
                "colon at generator " + std::to_string(lq.failing_index + 1) + " is not linear");

  // With the block shape available every divisor g < j is a candidate;
  // the containment set(m_g) inside set(m_j) is then demanded only of the
  // full shape, where the proofs rely on it.
  const bool blocks = blocks_cover_sets(ideal);
  struct Entry {
    std::size_t j;
    int t;
    std::vector<int> candidates;
    std::vector<char> contained;
  };
  std::vector<Entry> entries;
  std::size_t space = 1;
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    const auto& sj = ideal.set_of(j);
    for (int t : sj) {
      Entry e{j, t, {}, {}};
      Monomial m = ideal.gen(j).times_variable(t);
      for (std::size_t g = 0; g < j; ++g) {
        if (!ideal.gen(g).divides(m)) continue;
        const auto& sg = ideal.set_of(g);
        bool inside = std::includes(sj.begin(), sj.end(), sg.begin(), sg.end());
        if (!inside && !blocks) continue;
        e.candidates.push_back(static_cast<int>(g));
        e.contained.push_back(inside ? 1 : 0);
      }
      if (e.candidates.empty()) return {};
      if (space > options.cap / e.candidates.size())
        throw Error(ErrorKind::search_space_too_large,
                    "more than " + std::to_string(options.cap) + " candidate rule tables");
      space *= e.candidates.size();
      entries.push_back(std::move(e));
    }
  }

  const TermSelector block_select = blocks ? block_maxima_selector(ideal) : TermSelector{};
  std::vector<RegularRule> out;
  std::vector<std::size_t> pick(entries.size(), 0);
  while (true) {
    std::vector<std::vector<int>> table(ideal.size(), std::vector<int>(ideal.num_vars(), -1));
    bool contained = true;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      table[entries[e].j][static_cast<std::size_t>(entries[e].t)] = entries[e].candidates[pick[e]];
      contained = contained && entries[e].contained[pick[e]];
    }
    DecompositionRule rule(ideal, std::move(table));

    std::optional<LabeledChainComplex> full;
    if (contained && check_rule_regularity(ideal, rule).star_commutes) {
      auto res = rule_resolution(ideal, rule);
      if (passes(ideal, res, options.rank)) {
        full = res;
        out.push_back({rule, RuleShape::full, std::move(res)});
      }
    }
    if (blocks) {
      auto res = rule_resolution(ideal, rule, block_select);
      if ((!full || !compare_complexes(*full, res, false).equal) && passes(ideal, res, options.rank))
        out.push_back({rule, RuleShape::block_maxima, std::move(res)});
    }

    // Odometer over the candidate lists, last entry fastest.
    std::size_t e = entries.size();
    while (e > 0) {
      --e;
      if (++pick[e] < entries[e].candidates.size()) break;
      pick[e] = 0;
      if (e == 0) return out;
    }
    if (entries.empty()) return out;
  }
}

CWComplex complex_for_rule(const OrderedIdeal& ideal, const DecompositionRule& rule, RuleShape shape) {
  if (shape == RuleShape::full) return build_cw(ideal, rule);
  if (!blocks_cover_sets(ideal))
    throw Error(ErrorKind::precondition, "the blocks A_l do not cover set(m) for every generator");
  return build_cw(ideal, rule, CellOptions{block_maxima_selector(ideal), admissible_filter(ideal)});
}

FacePoset face_poset(const CWComplex& x) {
  FacePoset p;
  for (std::size_t c = 1; c < x.cells.size(); ++c) {
    p.dims.push_back(static_cast<int>(x.cells[c].dim()));
    std::vector<std::size_t> faces;
    for (const auto& [id, v] : x.cells[c].boundary)
      if (id != 0 && v != 0) faces.push_back(id - 1);
    std::sort(faces.begin(), faces.end());
    p.faces.push_back(std::move(faces));
  }
  return p;
}

FacePoset face_poset(const HomComplex& x) {
  FacePoset p;
  for (const auto& cell : x.cells) {
    p.dims.push_back(static_cast<int>(cell.dim));
    std::vector<std::size_t> faces;
    for (const auto& [face, v] : hom_boundary(cell.blocks))
      if (auto id = x.find(face)) faces.push_back(*id);
    std::sort(faces.begin(), faces.end());
    p.faces.push_back(std::move(faces));
  }
  return p;
}

FacePoset closure(const FacePoset& poset, std::size_t cell) {
  std::vector<char> keep(poset.dims.size(), 0);
  std::vector<std::size_t> stack = {cell};
  keep[cell] = 1;
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t f : poset.faces[c])
      if (!keep[f]) {
        keep[f] = 1;
        stack.push_back(f);
      }
  }
  std::vector<std::size_t> index(poset.dims.size(), 0);
  FacePoset out;
  for (std::size_t c = 0; c < poset.dims.size(); ++c)
    if (keep[c]) {
      index[c] = out.dims.size();
      out.dims.push_back(poset.dims[c]);
    }
  for (std::size_t c = 0; c < poset.dims.size(); ++c)
    if (keep[c]) {
      std::vector<std::size_t> faces;
      for (std::size_t f : poset.faces[c]) faces.push_back(index[f]);
      out.faces.push_back(std::move(faces));
    }
  return out;
}

namespace {

class Canonizer {
public:
  explicit Canonizer(const FacePoset& p) : p_(p), up_(p.dims.size()) {
    for (std::size_t c = 0; c < p.faces.size(); ++c)
      for (std::size_t f : p.faces[c]) up_[f].push_back(c);
  }

  std::string run() {
    std::vector<long> colors(p_.dims.begin(), p_.dims.end());
    search(colors);
    return best_ ? *best_ : std::string();
  }

private:
  // Splits colour classes by the multisets of face and coface colours until
  // stable. New colours are ranks of the signatures, so the result depends
  // only on isomorphism-invariant data.
  void refine(std::vector<long>& colors) const {
    const std::size_t n = colors.size();
    std::size_t classes = count(colors);
    while (true) {
      std::vector<std::vector<long>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        sig[v].push_back(colors[v]);
        std::vector<long> down, up;
        for (std::size_t f : p_.faces[v]) down.push_back(colors[f]);
        for (std::size_t u : up_[v]) up.push_back(colors[u]);
        std::sort(down.begin(), down.end());
        std::sort(up.begin(), up.end());
        sig[v].push_back(static_cast<long>(down.size()));
        sig[v].insert(sig[v].end(), down.begin(), down.end());
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), up.begin(), up.end());
      }
      std::vector<std::vector<long>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t v = 0; v < n; ++v)
        colors[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
      if (sorted.size() == classes) return;
      classes = sorted.size();
    }
  }

  static std::size_t count(const std::vector<long>& colors) {
    std::vector<long> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::string certificate(const std::vector<long>& colors) const {
    std::vector<std::size_t> order(colors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return colors[a] < colors[b]; });
    std::ostringstream out;
    for (std::size_t v : order) {
      std::vector<long> faces;
      for (std::size_t f : p_.faces[v]) faces.push_back(colors[f]);
      std::sort(faces.begin(), faces.end());
      out << p_.dims[v] << ':';
      for (long f : faces) out << f << ',';
      out << ';';
    }
    return out.str();
  }

  void search(std::vector<long> colors) {
    refine(colors);
    // The smallest colour class with more than one member.
    std::map<long, std::vector<std::size_t>> classes;
    for (std::size_t v = 0; v < colors.size(); ++v) classes[colors[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, members] : classes)
      if (members.size() > 1) {
        target = &members;
        break;
      }
    if (!target) {
      std::string cert = certificate(colors);
      if (!best_ || cert < *best_) best_ = std::move(cert);
      return;
    }
    for (std::size_t v : *target) {
      std::vector<long> next(colors.size());
      for (std::size_t u = 0; u < colors.size(); ++u) next[u] = 2 * colors[u] + 1;
      next[v] = 2 * colors[v];
      search(std::move(next));
    }
  }

  const FacePoset& p_;
  std::vector<std::vector<std::size_t>> up_;
  std::optional<std::string> best_;
};

}  // namespace

std::string combinatorial_type(const FacePoset& poset) {
  return Canonizer(poset).run();
}

Family rule_family(const OrderedIdeal& ideal, const EnumerationOptions& options) {
  Family family;
  std::map<std::string, std::size_t> seen;
  for (auto& r : enumerate_regular_rules(ideal, options)) {
    try {
      CWComplex x = complex_for_rule(ideal, r.rule, r.shape);
      FamilyMember member{r, x, combinatorial_type(x), x.f_vector()};
      if (seen.emplace(member.type, family.members.size()).second) family.distinct.push_back(family.members.size());
      family.members.push_back(std::move(member));
    } catch (const Error& e) {
      family.rejected.emplace_back(std::move(r), e.what());
    }
  }
  return family;
}

}  // namespace mcres
