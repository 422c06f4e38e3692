#include "mcres/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <string>

#include "json.hpp"
#include "mcres/error.hpp"

namespace mcres {

namespace {

/// Quotients m_i / gcd(m_i, m) for the given earlier generators.
std::vector<Monomial> colon_quotients(const std::vector<Monomial>& earlier,
                                      const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(earlier.size());
  for (const auto& g : earlier) out.push_back(g.quotient(gcd(g, m)));
  return out;
}

int single_variable(const Monomial& m) {
  if (m.degree() != 1) return -1;
  return m.support().front();
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void malformed(const std::string& token, const std::string& why) {
  throw Error(ErrorKind::malformed_monomial, "'" + token + "': " + why);
}

std::size_t parse_count(const std::string& token, const std::string& digits) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    malformed(token, "expected digits");
  return std::stoul(digits);
}

/// Parsed monomial before n is known: sparse variable -> exponent.
struct RawMonomial {
  std::vector<std::pair<std::size_t, int>> factors;  // 1-based var index
  std::optional<std::vector<int>> tuple;
  std::string text;
};

RawMonomial parse_token(const std::string& token) {
  RawMonomial raw;
  raw.text = token;
  if (token.front() == '[' || token.front() == '(') {
    const char close = token.front() == '[' ? ']' : ')';
    if (token.back() != close) malformed(token, "unbalanced bracket");
    std::string body = token.substr(1, token.size() - 2);
    std::vector<int> exps;
    std::string cur;
    auto flush = [&] {
      std::string t = trim(cur);
      cur.clear();
      if (t.empty()) malformed(token, "empty exponent");
      exps.push_back(static_cast<int>(parse_count(token, t)));
    };
    for (char c : body) {
      if (c == ',') flush();
      else cur += c;
    }
    flush();
    raw.tuple = std::move(exps);
    return raw;
  }
  std::size_t start = 0;
  while (start <= token.size()) {
    std::size_t star = token.find('*', start);
    if (star == std::string::npos) star = token.size();
    std::string factor = trim(std::string_view(token).substr(start, star - start));
    if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'X'))
      malformed(token, "expected a factor of the form x<i>");
    std::size_t caret = factor.find('^');
    std::size_t var = parse_count(token, factor.substr(1, caret == std::string::npos
                                                              ? std::string::npos
                                                              : caret - 1));
    int power = 1;
    if (caret != std::string::npos)
      power = static_cast<int>(parse_count(token, factor.substr(caret + 1)));
    if (var == 0) malformed(token, "variables are numbered from 1");
    if (power == 0) malformed(token, "zero exponent");
    raw.factors.emplace_back(var, power);
    start = star + 1;
  }
  return raw;
}

std::vector<std::string> split_generators(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  bool comment = false;
  for (char c : text) {
    if (comment) {
      if (c == '\n') comment = false;
      else continue;
    }
    if (c == '#') {
      comment = true;
      continue;
    }
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth == 0 && (c == ',' || c == '\n' || c == ';')) {
      tokens.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  tokens.push_back(trim(cur));
  std::erase_if(tokens, [](const std::string& t) { return t.empty(); });
  return tokens;
}

OrderedIdeal parse_json_ideal(std::string_view text, std::size_t num_vars) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::malformed_monomial, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("gens") || !doc["gens"].is_array())
    throw Error(ErrorKind::malformed_monomial, "JSON ideal needs a \"gens\" array");
  std::size_t n = num_vars;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned())
      throw Error(ErrorKind::malformed_monomial, "\"n\" must be a non-negative integer");
    n = doc["n"].get<std::size_t>();
  }
  std::vector<Monomial> gens;
  for (const auto& g : doc["gens"]) {
    if (!g.is_array()) throw Error(ErrorKind::malformed_monomial, "generator is not an array");
    std::vector<int> exps;
    for (const auto& e : g) {
      if (!e.is_number_unsigned())
        throw Error(ErrorKind::malformed_monomial, "exponent must be a non-negative integer");
      exps.push_back(e.get<int>());
    }
    if (n == 0) n = exps.size();
    if (exps.size() != n)
      throw Error(ErrorKind::malformed_monomial, "exponent vector length differs from n");
    gens.emplace_back(std::move(exps));
  }
  return OrderedIdeal(n, std::move(gens));
}

}  // namespace

OrderedIdeal::OrderedIdeal(std::size_t num_vars, std::vector<Monomial> gens)
    : num_vars_(num_vars), gens_(std::move(gens)) {
  if (gens_.empty()) throw Error(ErrorKind::invalid_input, "ideal has no generators");
  for (const auto& g : gens_) {
    if (g.size() != num_vars_)
      throw Error(ErrorKind::malformed_monomial,
                  "generator " + g.to_string() + " has the wrong number of variables");
    if (g.is_one())
      throw Error(ErrorKind::malformed_monomial, "the unit monomial is not a valid generator");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (i == j) continue;
      if (gens_[i] == gens_[j])
        throw Error(ErrorKind::duplicate_generator, gens_[i].to_string());
      if (gens_[i].divides(gens_[j]))
        throw Error(ErrorKind::non_minimal_generators,
                    gens_[i].to_string() + " divides " + gens_[j].to_string());
    }
  }
  sets_.resize(gens_.size());
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    std::vector<Monomial> earlier(gens_.begin(), gens_.begin() + static_cast<long>(j));
    std::set<int> vars;
    for (const auto& q : colon_quotients(earlier, gens_[j])) {
      int v = single_variable(q);
      if (v >= 0) vars.insert(v);
    }
    sets_[j].assign(vars.begin(), vars.end());
  }
}

bool OrderedIdeal::in_set(std::size_t j, int var) const {
  const auto& s = sets_.at(j);
  return std::binary_search(s.begin(), s.end(), var);
}

std::optional<std::size_t> OrderedIdeal::index_of(const Monomial& m) const {
  for (std::size_t j = 0; j < gens_.size(); ++j)
    if (gens_[j] == m) return j;
  return std::nullopt;
}

OrderedIdeal OrderedIdeal::reordered(const std::vector<std::size_t>& order) const {
  std::vector<Monomial> gens;
  for (std::size_t i : order) gens.push_back(gens_.at(i));
  return OrderedIdeal(num_vars_, std::move(gens));
}

OrderedIdeal parse_ideal(std::string_view text, std::size_t num_vars) {
  std::string trimmed = trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') return parse_json_ideal(trimmed, num_vars);

  std::vector<RawMonomial> raws;
  for (const auto& token : split_generators(text)) raws.push_back(parse_token(token));
  if (raws.empty()) throw Error(ErrorKind::malformed_monomial, "no generators");

  std::size_t n = num_vars;
  if (n == 0) {
    for (const auto& r : raws) {
      if (r.tuple) n = std::max(n, r.tuple->size());
      for (const auto& [v, p] : r.factors) n = std::max(n, v);
    }
  }
  std::vector<Monomial> gens;
  for (const auto& r : raws) {
    if (r.tuple) {
      if (r.tuple->size() != n) malformed(r.text, "tuple length differs from n");
      gens.emplace_back(*r.tuple);
      continue;
    }
    std::vector<int> exps(n, 0);
    for (const auto& [v, p] : r.factors) {
      if (v > n) malformed(r.text, "variable index exceeds n");
      exps[v - 1] += p;
    }
    gens.emplace_back(std::move(exps));
  }
  return OrderedIdeal(n, std::move(gens));
}

std::vector<Monomial> colon_by_generator(const OrderedIdeal& ideal, std::size_t j) {
  if (j >= ideal.size())
    throw Error(ErrorKind::index_out_of_range,
                "generator index " + std::to_string(j) + " out of range");
  std::vector<Monomial> earlier(ideal.gens().begin(),
                                ideal.gens().begin() + static_cast<long>(j));
  return minimalize(colon_quotients(earlier, ideal.gen(j)));
}

LinearQuotientResult is_linear_quotient_order(const OrderedIdeal& ideal) {
  LinearQuotientResult result;
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    for (const auto& g : colon_by_generator(ideal, j)) {
      if (g.degree() != 1) {
        result.failing_index = j;
        result.witness = g;
        return result;
      }
    }
  }
  result.ok = true;
  for (std::size_t j = 0; j < ideal.size(); ++j) result.sets.push_back(ideal.set_of(j));
  return result;
}

std::optional<std::vector<std::size_t>> find_linear_quotient_order(
    std::size_t num_vars, const std::vector<Monomial>& gens) {
  // Validates minimality and variable count.
  OrderedIdeal check(num_vars, gens);
  const std::size_t k = gens.size();

  // The colon <prefix> : m depends only on the set of earlier generators, so
  // dead prefix sets can be memoized; the DFS visits candidates in index
  // order, which makes the first success the lexicographically smallest.
  auto linear_after = [&](const std::vector<bool>& used, std::size_t g) {
    std::vector<Monomial> quotients;
    for (std::size_t i = 0; i < k; ++i)
      if (used[i]) quotients.push_back(gens[i].quotient(gcd(gens[i], gens[g])));
    std::vector<bool> is_var(num_vars, false);
    for (const auto& q : quotients) {
      int v = single_variable(q);
      if (v >= 0) is_var[static_cast<std::size_t>(v)] = true;
    }
    for (const auto& q : quotients) {
      bool covered = false;
      for (int v : q.support()) covered = covered || is_var[static_cast<std::size_t>(v)];
      if (!covered) return false;
    }
    return true;
  };

  std::set<std::vector<bool>> dead;
  std::vector<bool> used(k, false);
  std::vector<std::size_t> order;
  std::function<bool()> dfs = [&]() -> bool {
    if (order.size() == k) return true;
    if (dead.count(used)) return false;
    for (std::size_t g = 0; g < k; ++g) {
      if (used[g] || !linear_after(used, g)) continue;
      used[g] = true;
      order.push_back(g);
      if (dfs()) return true;
      order.pop_back();
      used[g] = false;
    }
    dead.insert(used);
    return false;
  };
  if (dfs()) return order;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_regular_order(std::size_t num_vars,
                                                           const std::vector<Monomial>& gens,
                                                           std::size_t budget) {
  OrderedIdeal check(num_vars, gens);
  const std::size_t k = gens.size();
  std::vector<std::size_t> order;
  std::vector<std::vector<int>> sets;  // set of each placed generator, by position
  std::vector<bool> used(k, false);
  std::size_t visited = 0;

  // set(g) after the current prefix, or nullopt when the colon is not linear.
  auto colon_set = [&](std::size_t g) -> std::optional<std::vector<int>> {
    std::vector<bool> is_var(num_vars, false);
    std::vector<Monomial> quotients;
    for (std::size_t i : order) {
      quotients.push_back(gens[i].quotient(gcd(gens[i], gens[g])));
      int v = single_variable(quotients.back());
      if (v >= 0) is_var[static_cast<std::size_t>(v)] = true;
    }
    for (const auto& q : quotients) {
      bool covered = false;
      for (int v : q.support()) covered = covered || is_var[static_cast<std::size_t>(v)];
      if (!covered) return std::nullopt;
    }
    std::vector<int> out;
    for (std::size_t v = 0; v < num_vars; ++v)
      if (is_var[v]) out.push_back(static_cast<int>(v));
    return out;
  };
  auto regular_at = [&](std::size_t g, const std::vector<int>& set) {
    for (int t : set) {
      Monomial m = gens[g].times_variable(t);
      for (std::size_t p = 0; p < order.size(); ++p) {
        if (!gens[order[p]].divides(m)) continue;
        if (!std::includes(set.begin(), set.end(), sets[p].begin(), sets[p].end())) return false;
        break;
      }
    }
    return true;
  };

  std::function<bool()> dfs = [&]() -> bool {
    if (order.size() == k) return true;
    if (++visited > budget) return false;
    for (std::size_t g = 0; g < k; ++g) {
      if (used[g]) continue;
      auto set = colon_set(g);
      if (!set || !regular_at(g, *set)) continue;
      used[g] = true;
      order.push_back(g);
      sets.push_back(*set);
      if (dfs()) return true;
      sets.pop_back();
      order.pop_back();
      used[g] = false;
    }
    return false;
  };
  if (dfs()) return order;
  return std::nullopt;
}

std::size_t decomp_b(const OrderedIdeal& ideal, const Monomial& m) {
  for (std::size_t j = 0; j < ideal.size(); ++j)
    if (ideal.gen(j).divides(m)) return j;
  throw Error(ErrorKind::not_in_ideal, m.to_string());
}

DecompositionRule::DecompositionRule(const OrderedIdeal& ideal,
                                     std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
  if (table_.size() != ideal.size())
    throw Error(ErrorKind::invalid_input, "rule table has the wrong number of rows");
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    if (table_[j].size() != ideal.num_vars())
      throw Error(ErrorKind::invalid_input, "rule table row has the wrong length");
    for (int t = 0; t < static_cast<int>(ideal.num_vars()); ++t) {
      int g = table_[j][static_cast<std::size_t>(t)];
      if ((g >= 0) != ideal.in_set(j, t))
        throw Error(ErrorKind::invalid_input, "rule table must be defined exactly on set(m_j)");
      if (g < 0) continue;
      if (g >= static_cast<int>(j))
        throw Error(ErrorKind::invalid_input, "rule target must precede the generator");
      if (!ideal.gen(static_cast<std::size_t>(g)).divides(ideal.gen(j).times_variable(t)))
        throw Error(ErrorKind::invalid_input, "rule target does not divide x_t m_j");
    }
  }
}

std::size_t DecompositionRule::apply(std::size_t j, int var) const {
  int g = table_.at(j).at(static_cast<std::size_t>(var));
  return g < 0 ? j : static_cast<std::size_t>(g);
}

DecompositionRule canonical_rule(const OrderedIdeal& ideal) {
  std::vector<std::vector<int>> table(ideal.size(), std::vector<int>(ideal.num_vars(), -1));
  for (std::size_t j = 0; j < ideal.size(); ++j)
    for (int t : ideal.set_of(j))
      table[j][static_cast<std::size_t>(t)] =
          static_cast<int>(decomp_b(ideal, ideal.gen(j).times_variable(t)));
  return DecompositionRule(ideal, std::move(table));
}

RegularityReport check_rule_regularity(const OrderedIdeal& ideal,
                                       const DecompositionRule& rule) {
  RegularityReport report;
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    const auto& sj = ideal.set_of(j);
    for (int t : sj) {
      const auto& sg = ideal.set_of(rule.apply(j, t));
      if (!std::includes(sj.begin(), sj.end(), sg.begin(), sg.end()))
        report.containment_witnesses.push_back({static_cast<int>(j), t});
    }
    for (std::size_t a = 0; a < sj.size(); ++a) {
      for (std::size_t b = a + 1; b < sj.size(); ++b) {
        int s = sj[a], t = sj[b];
        if (rule.apply(rule.apply(j, t), s) != rule.apply(rule.apply(j, s), t))
          report.star_witnesses.push_back({static_cast<int>(j), s, t});
      }
    }
  }
  report.regular = report.containment_witnesses.empty();
  report.star_commutes = report.star_witnesses.empty();
  return report;
}

RegularityReport check_regularity(const OrderedIdeal& ideal) {
  auto lq = is_linear_quotient_order(ideal);
  if (!lq.ok)
    throw Error(ErrorKind::not_linear_quotients,
                "colon at generator " + std::to_string(lq.failing_index + 1) +
                    " has generator " + lq.witness.to_string());
  return check_rule_regularity(ideal, canonical_rule(ideal));
}

}  // namespace mcres
