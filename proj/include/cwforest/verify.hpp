#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cwforest/forest.hpp"
#include "cwforest/rational.hpp"

namespace cwforest {

enum class Claim { symmetry, partition, freeness, range };

std::string_view to_string(Claim claim);

/// Outcome of one exhaustive check. A failed report carries the first
/// witness in the checked order; a passed report never does.
struct VerificationReport {
  Claim claim = Claim::symmetry;
  BigInt u;
  BigInt v;
  std::optional<Rational> root;
  /// Depth, height or word length, depending on the claim.
  std::uint64_t bound = 0;
  bool passed = true;
  std::uint64_t checked_count = 0;
  std::optional<std::string> first_failure;

  /// {claim, u, v, root?, bound, passed, checked_count, first_failure?}
  nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kDefaultMaxHeight = 100000;

/// For every n <= max_row and 1 <= i <= 2^n checks that the i-th vertex of
/// row n in the (u,v) tree rooted at z times the mirror vertex of row n in
/// the (v,u) tree rooted at 1/z is exactly 1. z need not be an orphan.
VerificationReport verify_symmetry(const BigInt& u, const BigInt& v, const Rational& z, std::size_t max_row,
                                   std::size_t row_cap = kDefaultMaxRow);

/// Mirror symmetry of the single (u,u) tree rooted at 1.
VerificationReport verify_self_symmetry(const BigInt& u, std::size_t max_row, std::size_t row_cap = kDefaultMaxRow);

/// For every reduced q with height <= height_bound: decompose reaches an
/// orphan, replaying the address from that root gives q back, and no two
/// q share a (root, word) pair.
VerificationReport verify_partition(const BigInt& u, const BigInt& v, std::uint64_t height_bound,
                                    std::uint64_t height_cap = kDefaultMaxHeight);

/// For every reduced w with height <= height_bound:
/// 0 < L_u(w) < 1/u <= 1 <= v < R_v(w).
VerificationReport verify_range(const BigInt& u, const BigInt& v, std::uint64_t height_bound,
                                std::uint64_t height_cap = kDefaultMaxHeight);

/// freeness_probe rendered as a report; checked_count is the number of
/// non-empty words.
VerificationReport verify_freeness(const BigInt& u, const BigInt& v, std::size_t max_length,
                                   std::size_t length_cap = kDefaultMaxWordLength);

}  // namespace cwforest
