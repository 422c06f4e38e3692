#ifndef MCRES_MONOMIAL_HPP
#define MCRES_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mcres {

/// A monomial x_1^{a_1} ... x_n^{a_n} stored as its exponent vector.
/// Variables are indexed 0..n-1 internally; to_string() prints them 1-based.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t num_vars, int var);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  std::vector<int> support() const;

  Monomial times_variable(int var) const;
  /// this / other; throws if other does not divide this.
  Monomial quotient(const Monomial& other) const;

  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

private:
  std::vector<int> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Product of the variables indexed by vars (each with exponent one).
Monomial squarefree_monomial(std::size_t num_vars, const std::vector<int>& vars);

/// Keeps the divisibility-minimal elements, sorted and deduplicated.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

}  // namespace mcres

#endif
