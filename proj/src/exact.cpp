#include "mcres/exact.hpp"

#include <atomic>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "mcres/error.hpp"

namespace mcres {

namespace {
std::atomic<std::size_t> g_disagreements{0};
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void check_prefilter_prime(std::uint64_t p) {
  std::mt19937_64 rng(p);
  if (p <= (1ULL << 20) || p >= (1ULL << 32) ||
      !boost::multiprecision::miller_rabin_test(BigInt(p), 25, rng))
    throw Error(ErrorKind::invalid_input,
                "pre-filter modulus must be a prime between 2^20 and 2^32, got " + std::to_string(p));
}

RankOptions default_rank_options() {
  RankOptions o;
  if (const char* env = std::getenv("RESOLVE_PRIME")) {
    try {
      o.prime = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_input, std::string("RESOLVE_PRIME is not an integer: ") + env);
    }
    check_prefilter_prime(o.prime);
  }
  return o;
}

std::size_t exact_rank(const ExactMatrix& input) {
  ExactMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(r, k));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m(i, k) = (m(r, c) * m(i, k) - m(i, c) * m(r, k)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const ExactMatrix& input, std::uint64_t p) {
  if (p < 3 || p >= (1ULL << 32)) throw std::invalid_argument("prime out of range");
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<std::uint64_t> m(rows * cols);
  const BigInt bp = p;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      BigInt v = input(i, k) % bp;
      if (v < 0) v += bp;
      m[i * cols + k] = static_cast<std::uint64_t>(v);
    }
  auto at = [&](std::size_t i, std::size_t k) -> std::uint64_t& { return m[i * cols + k]; };
  auto inverse = [&](std::uint64_t a) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pivot, k), at(r, k));
    std::uint64_t inv = inverse(at(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      std::uint64_t f = at(i, c) * inv % p;
      for (std::size_t k = c; k < cols; ++k)
        at(i, k) = (at(i, k) + (p - f) * at(r, k)) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank(const ExactMatrix& m, const RankOptions& options) {
  if (!options.prefilter) return exact_rank(m);
  std::size_t modular = rank_mod_p(m, options.prime);
  if (modular == std::min(m.rows(), m.cols())) return modular;
  std::size_t rational = exact_rank(m);
  if (rational != modular) {
    ++g_disagreements;
    std::clog << "rank over GF(" << options.prime << ") is " << modular
              << ", over Q it is " << rational << '\n';
  }
  return rational;
}

std::size_t prefilter_disagreements() { return g_disagreements.load(); }

}  // namespace mcres
