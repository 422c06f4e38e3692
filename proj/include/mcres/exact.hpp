#ifndef MCRES_EXACT_HPP
#define MCRES_EXACT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcres {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static ExactMatrix identity(std::size_t n);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct RankOptions {
  bool prefilter = true;
  std::uint64_t prime = 2147483647ULL;
};

/// Raises InvalidInput unless p is a prime with 2^20 < p < 2^32.
void check_prefilter_prime(std::uint64_t p);

/// Prime taken from RESOLVE_PRIME when set, otherwise the default.
RankOptions default_rank_options();

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const ExactMatrix& m);

/// Rank over GF(p); p must be an odd prime below 2^32.
std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p);

/// Rank over Q, using GF(p) as a pre-filter: a full modular rank is already
/// the rational rank; anything else is recomputed over Q. Rank over GF(p)
/// can only drop, so a difference is reported in the counter below but
/// the rational value is always returned.
std::size_t rank(const ExactMatrix& m, const RankOptions& options);

/// Number of times the modular rank disagreed with the rational one.
std::size_t prefilter_disagreements();

}  // namespace mcres

#endif
