#include "mcres/chain_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcres/error.hpp"

namespace mcres {

std::string to_string(const Symbol& s) {
  std::ostringstream out;
  out << '(';
  if (s.gen == kUnit) out << "unit";
  else out << 'g' << s.gen + 1;
  out << ";{";
  for (std::size_t i = 0; i < s.alpha.size(); ++i) out << (i ? "," : "") << s.alpha[i] + 1;
  out << "})";
  return out.str();
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseMatrix::add(std::size_t row, std::size_t col, long coeff, const Monomial& mono) {
  if (coeff == 0) return;
  auto& column = cols_.at(col);
  for (auto it = column.begin(); it != column.end(); ++it) {
    if (it->row == row && it->mono == mono) {
      it->coeff += coeff;
      if (it->coeff == 0) column.erase(it);
      return;
    }
  }
  column.push_back({row, coeff, mono});
}

void SparseMatrix::sort_columns() {
  for (auto& c : cols_)
    std::sort(c.begin(), c.end(), [](const Term& a, const Term& b) {
      return std::tie(a.row, a.mono) < std::tie(b.row, b.mono);
    });
}

PolyColumns multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::logic_error("matrix shapes do not compose");
  PolyColumns out(b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto& acc = out[c];
    for (const auto& tb : b.column(c)) {
      for (const auto& ta : a.column(tb.row)) {
        auto key = std::make_pair(ta.row, ta.mono * tb.mono);
        long& v = acc[key];
        v += ta.coeff * tb.coeff;
        if (v == 0) acc.erase(key);
      }
    }
  }
  return out;
}

std::size_t LabeledChainComplex::rank(std::size_t degree) const {
  return degree < basis.size() ? basis[degree].size() : 0;
}

std::vector<std::size_t> LabeledChainComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis) out.push_back(b.size());
  return out;
}

std::vector<std::size_t> LabeledChainComplex::betti_ranks() const {
  auto r = ranks();
  if (!r.empty()) r.erase(r.begin());
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::optional<std::size_t> LabeledChainComplex::index_of(std::size_t degree,
                                                         const Symbol& s) const {
  if (degree >= basis.size()) return std::nullopt;
  const auto& b = basis[degree];
  auto it = std::find(b.begin(), b.end(), s);
  if (it == b.end()) return std::nullopt;
  return static_cast<std::size_t>(it - b.begin());
}

void LabeledChainComplex::push_degree() {
  std::size_t rows = basis.empty() ? 0 : basis.back().size();
  basis.emplace_back();
  multidegree.emplace_back();
  diff.emplace_back(rows, 0);
}

void LabeledChainComplex::add_basis(std::size_t degree, Symbol s, Monomial mdeg) {
  basis.at(degree).push_back(std::move(s));
  multidegree.at(degree).push_back(std::move(mdeg));
  // Grow the outgoing and incoming matrices to the new rank.
  SparseMatrix& out = diff[degree];
  SparseMatrix grown(out.rows(), out.cols() + 1);
  for (std::size_t c = 0; c < out.cols(); ++c) grown.column(c) = out.column(c);
  out = std::move(grown);
  if (degree + 1 < diff.size()) {
    SparseMatrix& in = diff[degree + 1];
    SparseMatrix taller(in.rows() + 1, in.cols());
    for (std::size_t c = 0; c < in.cols(); ++c) taller.column(c) = in.column(c);
    in = std::move(taller);
  }
}

namespace {

/// Builds a complex from a fixed graded basis; entries are filled later.
LabeledChainComplex with_basis(std::size_t num_vars, BasisKind kind,
                               std::vector<std::vector<Symbol>> basis,
                               std::vector<std::vector<Monomial>> mdeg) {
  LabeledChainComplex c;
  c.num_vars = num_vars;
  c.kind = kind;
  c.basis = std::move(basis);
  c.multidegree = std::move(mdeg);
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    c.diff.emplace_back(i == 0 ? 0 : c.basis[i - 1].size(), c.basis[i].size());
  return c;
}

std::vector<int> without(const std::vector<int>& alpha, std::size_t pos) {
  std::vector<int> out = alpha;
  out.erase(out.begin() + static_cast<long>(pos));
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// All subsets of vars (sorted) of the given size, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& vars, std::size_t size) {
  std::vector<std::vector<int>> out;
  if (size > vars.size()) return out;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> s;
    for (std::size_t i : idx) s.push_back(vars[i]);
    out.push_back(std::move(s));
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == vars.size() - size + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

Monomial times_vars(Monomial m, const std::vector<int>& vars) {
  for (int v : vars) m = m.times_variable(v);
  return m;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_regular_lq(const OrderedIdeal& ideal) {
  auto report = check_regularity(ideal);
  if (!report.regular) {
    auto [j, t] = report.containment_witnesses.front();
    throw Error(ErrorKind::not_regular, "set(b(x" + std::to_string(t + 1) + "*m" +
                                            std::to_string(j + 1) + ")) is not inside set(m" +
                                            std::to_string(j + 1) + ")");
  }
}

/// The decomposition part of d(m_j; alpha), as (row symbol, coeff, mono).
struct RuleTerm {
  Symbol row;
  long coeff;
  Monomial mono;
};

std::vector<RuleTerm> rule_terms(const OrderedIdeal& ideal, const DecompositionRule& rule,
                                 const TermSelector& select, std::size_t j,
                                 const std::vector<int>& alpha) {
  std::vector<int> chosen = select ? select(j, alpha) : alpha;
  std::vector<RuleTerm> out;
  for (std::size_t p = 0; p < alpha.size(); ++p) {
    int t = alpha[p];
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) continue;
    std::size_t g = rule.apply(j, t);
    std::vector<int> beta = without(alpha, p);
    if (!subset_of(beta, ideal.set_of(g))) continue;
    // position p is 0-based, so (-1)^(p-1) for 1-based p is +1 at p == 0
    long sign = p % 2 == 0 ? 1 : -1;
    Monomial coeff = ideal.gen(j).times_variable(t).quotient(ideal.gen(g));
    out.push_back({Symbol{static_cast<int>(g), std::move(beta)}, sign, std::move(coeff)});
  }
  return out;
}

}  // namespace

LabeledChainComplex koszul_complex(std::size_t num_vars, const std::vector<int>& vars,
                                   const Monomial& shift, int tag) {
  std::vector<int> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 0 || static_cast<std::size_t>(v) >= num_vars)
      throw Error(ErrorKind::index_out_of_range, "Koszul variable out of range");
  std::vector<std::vector<Symbol>> basis;
  std::vector<std::vector<Monomial>> mdeg;
  for (std::size_t i = 0; i <= sorted.size(); ++i) {
    basis.emplace_back();
    mdeg.emplace_back();
    for (auto& s : subsets_of_size(sorted, i)) {
      mdeg.back().push_back(times_vars(shift, s));
      basis.back().push_back(Symbol{tag, std::move(s)});
    }
  }
  auto c = with_basis(num_vars, BasisKind::koszul, std::move(basis), std::move(mdeg));
  for (std::size_t i = 1; i < c.basis.size(); ++i) {
    for (std::size_t col = 0; col < c.basis[i].size(); ++col) {
      const auto& alpha = c.basis[i][col].alpha;
      for (std::size_t p = 0; p < alpha.size(); ++p) {
        std::size_t row = *c.index_of(i - 1, Symbol{tag, without(alpha, p)});
        c.diff[i].add(row, col, p % 2 == 0 ? 1 : -1, Monomial::variable(num_vars, alpha[p]));
      }
    }
  }
  return c;
}

std::optional<Witness> chain_map_defect(const ChainMap& psi) {
  const auto& src = psi.source;
  const auto& tgt = psi.target;
  if (psi.maps.size() < src.length())
    throw std::logic_error("chain map is missing components");
  for (std::size_t i = 1; i < src.length(); ++i) {
    // d_target[i] * psi[i] versus psi[i-1] * d_source[i]
    PolyColumns lhs;
    if (i < tgt.length()) lhs = multiply(tgt.diff[i], psi.maps[i]);
    else lhs.assign(src.rank(i), {});
    PolyColumns rhs = multiply(psi.maps[i - 1], src.diff[i]);
    for (std::size_t c = 0; c < lhs.size(); ++c) {
      if (lhs[c] == rhs[c]) continue;
      std::size_t row = 0;
      for (const auto& [key, v] : lhs[c]) {
        auto it = rhs[c].find(key);
        if (it == rhs[c].end() || it->second != v) { row = key.first; break; }
      }
      if (lhs[c].size() <= rhs[c].size())
        for (const auto& [key, v] : rhs[c])
          if (!lhs[c].count(key)) { row = key.first; break; }
      return Witness{i, row, c};
    }
  }
  return std::nullopt;
}

LabeledChainComplex mapping_cone(const ChainMap& psi) {
  if (auto w = chain_map_defect(psi))
    throw Error(ErrorKind::non_commuting_chain_map,
                "at degree " + std::to_string(w->degree) + ", column " +
                    std::to_string(w->col));
  const auto& src = psi.source;
  const auto& tgt = psi.target;
  std::size_t len = std::max(src.length() == 0 ? 0 : src.length() + 1, tgt.length());
  std::vector<std::vector<Symbol>> basis(len);
  std::vector<std::vector<Monomial>> mdeg(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (i >= 1 && i - 1 < src.length()) {
      basis[i] = src.basis[i - 1];
      mdeg[i] = src.multidegree[i - 1];
    }
    if (i < tgt.length()) {
      basis[i].insert(basis[i].end(), tgt.basis[i].begin(), tgt.basis[i].end());
      mdeg[i].insert(mdeg[i].end(), tgt.multidegree[i].begin(), tgt.multidegree[i].end());
    }
  }
  auto cone = with_basis(tgt.num_vars ? tgt.num_vars : src.num_vars, BasisKind::symbol,
                         std::move(basis), std::move(mdeg));
  if (src.length() == 0 && tgt.length() > 0) cone.kind = tgt.kind;
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t src_here = i - 1 < src.length() ? src.rank(i - 1) : 0;  // offset in degree i
    std::size_t src_below = i >= 2 && i - 2 < src.length() ? src.rank(i - 2) : 0;
    auto& d = cone.diff[i];
    if (i - 1 < src.length()) {
      for (std::size_t c = 0; c < src_here; ++c) {
        if (i >= 2)
          for (const auto& t : src.diff[i - 1].column(c)) d.add(t.row, c, -t.coeff, t.mono);
        for (const auto& t : psi.maps[i - 1].column(c))
          d.add(src_below + t.row, c, t.coeff, t.mono);
      }
    }
    if (i < tgt.length()) {
      for (std::size_t c = 0; c < tgt.rank(i); ++c)
        for (const auto& t : tgt.diff[i].column(c))
          d.add(src_below + t.row, src_here + c, t.coeff, t.mono);
    }
  }
  return cone;
}

LabeledChainComplex symbol_skeleton(const OrderedIdeal& ideal) {
  std::size_t top = 0;
  for (std::size_t j = 0; j < ideal.size(); ++j) top = std::max(top, ideal.set_of(j).size());
  std::vector<std::vector<Symbol>> basis(top + 2);
  std::vector<std::vector<Monomial>> mdeg(top + 2);
  basis[0].push_back(Symbol{kUnit, {}});
  mdeg[0].push_back(Monomial(ideal.num_vars()));
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    const auto& s = ideal.set_of(j);
    for (std::size_t i = 0; i <= s.size(); ++i) {
      for (auto& alpha : subsets_of_size(s, i)) {
        mdeg[i + 1].push_back(times_vars(ideal.gen(j), alpha));
        basis[i + 1].push_back(Symbol{static_cast<int>(j), std::move(alpha)});
      }
    }
  }
  auto c = with_basis(ideal.num_vars(), BasisKind::symbol, std::move(basis), std::move(mdeg));
  canonicalize(c);
  return c;
}

LabeledChainComplex rule_resolution(const OrderedIdeal& ideal, const DecompositionRule& rule,
                                    const TermSelector& select) {
  auto c = symbol_skeleton(ideal);
  std::vector<std::map<Symbol, std::size_t>> index(c.length());
  for (std::size_t i = 0; i < c.length(); ++i)
    for (std::size_t k = 0; k < c.basis[i].size(); ++k) index[i][c.basis[i][k]] = k;
  const std::size_t n = ideal.num_vars();
  for (std::size_t i = 1; i < c.length(); ++i) {
    for (std::size_t col = 0; col < c.basis[i].size(); ++col) {
      const Symbol& s = c.basis[i][col];
      const auto j = static_cast<std::size_t>(s.gen);
      if (s.alpha.empty()) {
        c.diff[i].add(0, col, 1, ideal.gen(j));
        continue;
      }
      for (std::size_t p = 0; p < s.alpha.size(); ++p) {
        std::size_t row = index[i - 1].at(Symbol{s.gen, without(s.alpha, p)});
        c.diff[i].add(row, col, p % 2 == 0 ? -1 : 1, Monomial::variable(n, s.alpha[p]));
      }
      for (const auto& rt : rule_terms(ideal, rule, select, j, s.alpha))
        c.diff[i].add(index[i - 1].at(rt.row), col, rt.coeff, rt.mono);
    }
  }
  for (auto& d : c.diff) d.sort_columns();
  return c;
}

LabeledChainComplex rule_resolution_by_cones(const OrderedIdeal& ideal,
                                             const DecompositionRule& rule,
                                             const TermSelector& select) {
  const std::size_t n = ideal.num_vars();
  // F^(0) = R
  LabeledChainComplex f;
  f.num_vars = n;
  f.push_degree();
  f.add_basis(0, Symbol{kUnit, {}}, Monomial(n));

  for (std::size_t j = 0; j < ideal.size(); ++j) {
    ChainMap psi;
    psi.source = koszul_complex(n, ideal.set_of(j), ideal.gen(j), static_cast<int>(j));
    psi.target = std::move(f);
    for (std::size_t i = 0; i < psi.source.length(); ++i) {
      SparseMatrix m(psi.target.rank(i), psi.source.rank(i));
      for (std::size_t col = 0; col < psi.source.rank(i); ++col) {
        const auto& alpha = psi.source.basis[i][col].alpha;
        if (i == 0) {
          m.add(0, col, 1, ideal.gen(j));
          continue;
        }
        for (const auto& rt : rule_terms(ideal, rule, select, j, alpha)) {
          auto row = psi.target.index_of(i, rt.row);
          if (!row) throw std::logic_error("decomposition term outside the previous resolution");
          m.add(*row, col, rt.coeff, rt.mono);
        }
      }
      psi.maps.push_back(std::move(m));
    }
    f = mapping_cone(psi);
  }
  f.kind = BasisKind::symbol;
  canonicalize(f);
  return f;
}

LabeledChainComplex ht_resolution(const OrderedIdeal& ideal) {
  require_regular_lq(ideal);
  return rule_resolution(ideal, canonical_rule(ideal));
}

LabeledChainComplex ht_resolution_by_cones(const OrderedIdeal& ideal) {
  require_regular_lq(ideal);
  return rule_resolution_by_cones(ideal, canonical_rule(ideal));
}

std::vector<std::size_t> symbol_counts(const OrderedIdeal& ideal) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    std::size_t s = ideal.set_of(j).size();
    if (out.size() < s + 1) out.resize(s + 1, 0);
    for (std::size_t i = 0; i <= s; ++i) out[i] += binomial(s, i);
  }
  return out;
}

std::optional<Witness> dd_zero_defect(const LabeledChainComplex& c) {
  for (std::size_t i = 2; i < c.length(); ++i) {
    auto prod = multiply(c.diff[i - 1], c.diff[i]);
    for (std::size_t col = 0; col < prod.size(); ++col)
      if (!prod[col].empty()) return Witness{i, prod[col].begin()->first.first, col};
  }
  return std::nullopt;
}

bool check_minimal(const LabeledChainComplex& c) {
  for (const auto& d : c.diff)
    for (std::size_t col = 0; col < d.cols(); ++col)
      for (const auto& t : d.column(col))
        if (t.mono.is_one()) return false;
  return true;
}

std::optional<Witness> homogeneity_defect(const LabeledChainComplex& c) {
  for (std::size_t i = 1; i < c.length(); ++i)
    for (std::size_t col = 0; col < c.diff[i].cols(); ++col)
      for (const auto& t : c.diff[i].column(col))
        if (c.multidegree[i][col] != t.mono * c.multidegree[i - 1][t.row])
          return Witness{i, t.row, col};
  return std::nullopt;
}

void canonicalize(LabeledChainComplex& c) {
  std::vector<std::vector<std::size_t>> new_pos(c.length());
  for (std::size_t i = 0; i < c.length(); ++i) {
    std::vector<std::size_t> order(c.basis[i].size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return c.basis[i][a] < c.basis[i][b];
    });
    new_pos[i].resize(order.size());
    std::vector<Symbol> basis;
    std::vector<Monomial> mdeg;
    for (std::size_t k = 0; k < order.size(); ++k) {
      new_pos[i][order[k]] = k;
      basis.push_back(std::move(c.basis[i][order[k]]));
      mdeg.push_back(std::move(c.multidegree[i][order[k]]));
    }
    c.basis[i] = std::move(basis);
    c.multidegree[i] = std::move(mdeg);
  }
  for (std::size_t i = 0; i < c.length(); ++i) {
    SparseMatrix d(c.diff[i].rows(), c.diff[i].cols());
    for (std::size_t col = 0; col < c.diff[i].cols(); ++col)
      for (const auto& t : c.diff[i].column(col))
        d.add(i == 0 ? t.row : new_pos[i - 1][t.row], new_pos[i][col], t.coeff, t.mono);
    d.sort_columns();
    c.diff[i] = std::move(d);
  }
}

ComparisonResult compare_complexes(const LabeledChainComplex& a, const LabeledChainComplex& b,
                                   bool allow_degree_sign) {
  ComparisonResult r;
  auto fail = [&](std::string msg) {
    r.equal = false;
    r.mismatch = std::move(msg);
    return r;
  };
  auto ra = a.ranks(), rb = b.ranks();
  while (!ra.empty() && ra.back() == 0) ra.pop_back();
  while (!rb.empty() && rb.back() == 0) rb.pop_back();
  if (ra != rb) return fail("ranks differ");
  r.degree_signs.assign(ra.size(), 1);
  using Key = std::tuple<Symbol, Symbol, Monomial>;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    std::map<Symbol, Monomial> ma, mb;
    for (std::size_t k = 0; k < a.basis[i].size(); ++k) ma.emplace(a.basis[i][k], a.multidegree[i][k]);
    for (std::size_t k = 0; k < b.basis[i].size(); ++k) mb.emplace(b.basis[i][k], b.multidegree[i][k]);
    if (ma != mb) return fail("bases or multidegrees differ in degree " + std::to_string(i));
    if (i == 0) continue;
    auto entries = [&](const LabeledChainComplex& c) {
      std::map<Key, long> out;
      for (std::size_t col = 0; col < c.diff[i].cols(); ++col)
        for (const auto& t : c.diff[i].column(col))
          out[{c.basis[i - 1][t.row], c.basis[i][col], t.mono}] += t.coeff;
      std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
      return out;
    };
    auto ea = entries(a), eb = entries(b);
    int sign = 1;
    if (allow_degree_sign && !ea.empty() && !eb.empty()) {
      auto it = eb.find(ea.begin()->first);
      if (it != eb.end() && it->second == -ea.begin()->second) sign = -1;
    }
    r.degree_signs[i] = sign;
    if (ea.size() != eb.size())
      return fail("differential in degree " + std::to_string(i) + " has a different support");
    for (const auto& [key, v] : ea) {
      auto it = eb.find(key);
      if (it == eb.end() || it->second * sign != v)
        return fail("entry (" + to_string(std::get<0>(key)) + ", " + to_string(std::get<1>(key)) +
                    ") differs in degree " + std::to_string(i));
    }
  }
  r.equal = true;
  return r;
}

}  // namespace mcres
