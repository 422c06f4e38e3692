#include "mcres/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcres/error.hpp"

namespace mcres {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0)
      throw Error(ErrorKind::malformed_monomial, "negative exponent");
  }
}

Monomial Monomial::variable(std::size_t num_vars, int var) {
  Monomial m(num_vars);
  m.exps_.at(static_cast<std::size_t>(var)) = 1;
  return m;
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(static_cast<int>(i));
  return out;
}

Monomial Monomial::times_variable(int var) const {
  Monomial m = *this;
  ++m.exps_.at(static_cast<std::size_t>(var));
  return m;
}

Monomial Monomial::quotient(const Monomial& other) const {
  if (!other.divides(*this))
    throw std::logic_error("monomial quotient without divisibility: " +
                           to_string() + " / " + other.to_string());
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= other.exps_[i];
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i)
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i)
    m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Monomial squarefree_monomial(std::size_t num_vars, const std::vector<int>& vars) {
  Monomial m(num_vars);
  for (int v : vars) m = m.times_variable(v);
  return m;
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::vector<Monomial> out;
  for (const auto& m : monomials) {
    bool dominated = false;
    for (const auto& o : monomials) {
      if (!(o == m) && o.divides(m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(m);
  }
  return out;
}

}  // namespace mcres
