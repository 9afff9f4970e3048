#pragma once

// Reference computations for the tests. Everything here uses plain 64-bit
// arithmetic and none of the library's code paths.

#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Frac = std::pair<std::uint64_t, std::uint64_t>;

inline Frac reduce(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  return {a / g, b / g};
}

/// Row n of the (u,v) tree rooted at a/b by recursive doubling of the
/// previous row, from the generation rule w -> (w/(uw+1), w+v) on reals
/// written over a common denominator.
inline std::vector<Frac> tree_row(std::uint64_t u, std::uint64_t v, Frac root, unsigned n) {
  std::vector<Frac> level{root};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Frac> next;
    for (auto [a, b] : level) {
      next.push_back(reduce(a, u * a + b));
      next.push_back(reduce(a + v * b, b));
    }
    level = next;
  }
  return level;
}

/// Number of reduced a/b with 1 <= a, b <= h, via a phi sieve:
/// 2 * sum_{k <= h} phi(k) - 1.
inline std::uint64_t reduced_count_phi(std::uint64_t h) {
  std::vector<std::uint64_t> phi(h + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::uint64_t p = 2; p <= h; ++p) {
    if (phi[p] == p) {
      for (std::uint64_t k = p; k <= h; k += p) {
        phi[k] -= phi[k] / p;
      }
    }
  }
  std::uint64_t sum = 0;
  for (std::uint64_t k = 1; k <= h; ++k) {
    sum += phi[k];
  }
  return 2 * sum - 1;
}

/// Same count by a direct gcd double loop.
inline std::uint64_t reduced_count_gcd(std::uint64_t h) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= h; ++a) {
    for (std::uint64_t b = 1; b <= h; ++b) {
      count += std::gcd(a, b) == 1;
    }
  }
  return count;
}

/// Euclid on 64-bit integers.
inline std::vector<std::uint64_t> continued_fraction(std::uint64_t a, std::uint64_t b) {
  std::vector<std::uint64_t> out;
  while (b != 0) {
    out.push_back(a / b);
    std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return out;
}

using M2 = std::array<std::uint64_t, 4>;

inline M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

/// Number of distinct matrices among all words of length 0..max_len over
/// {[[1,0],[u,1]], [[1,v],[0,1]]}, each word multiplied out from scratch.
inline std::pair<std::size_t, std::size_t> distinct_word_matrices(std::uint64_t u, std::uint64_t v,
                                                                  unsigned max_len) {
  const M2 l{1, 0, u, 1};
  const M2 r{1, v, 0, 1};
  std::set<M2> seen;
  std::size_t words = 0;
  for (unsigned len = 0; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      M2 m{1, 0, 0, 1};
      for (unsigned k = 0; k < len; ++k) {
        m = mul(m, ((bits >> (len - 1 - k)) & 1u) ? r : l);
      }
      seen.insert(m);
      ++words;
    }
  }
  return {words, seen.size()};
}

}  // namespace oracle
