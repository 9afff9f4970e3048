#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cwforest {

using BigInt = boost::multiprecision::cpp_int;

/// A positive rational number a/b stored in lowest terms.
///
/// Zero and negative values are not representable; every constructor
/// rejects them. Values are immutable.
class Rational {
 public:
  /// Reduces n/d. Throws DomainError unless n >= 1 and d >= 1.
  static Rational make(const BigInt& n, const BigInt& d);
  static Rational make(std::int64_t n, std::int64_t d = 1) {
    return make(BigInt(n), BigInt(d));
  }

  /// Parses "a/b" or "a". Signs, whitespace, zero numerators and zero
  /// denominators are rejected.
  static Rational parse(std::string_view text);

  /// Wraps a pair already known to be coprime and positive. Checked only in
  /// debug builds.
  static Rational from_reduced(BigInt n, BigInt d);

  const BigInt& numer() const noexcept { return numer_; }
  const BigInt& denom() const noexcept { return denom_; }

  bool is_integer() const noexcept { return denom_ == 1; }
  BigInt floor() const { return numer_ / denom_; }
  Rational reciprocal() const { return Rational(denom_, numer_); }
  Rational plus(const BigInt& k) const;

  /// "a/b", or "a" when the denominator is 1.
  std::string to_string() const;
  /// Always "a/b".
  std::string to_fraction_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  Rational(BigInt n, BigInt d) : numer_(std::move(n)), denom_(std::move(d)) {}

  BigInt numer_;
  BigInt denom_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational operator*(const Rational& x, const Rational& y);

/// max(numerator, denominator); strictly increases along every tree edge.
BigInt height(const Rational& q);

/// Euclidean expansion [a0; a1, ..., ak] with a0 = floor(q) and the last
/// coefficient >= 2 whenever k >= 1.
std::vector<BigInt> continued_fraction(const Rational& q);

/// Inverse of continued_fraction. Throws DomainError on an empty list or a
/// list whose value is not a positive rational.
Rational from_continued_fraction(const std::vector<BigInt>& terms);

struct RationalHash {
  std::size_t operator()(const Rational& q) const noexcept;
};

/// Calls fn(q) for every reduced positive q with height(q) <= bound, ordered
/// lexicographically by (numerator, denominator).
template <typename Fn>
void for_each_reduced_up_to_height(std::uint64_t bound, Fn&& fn) {
  for (std::uint64_t a = 1; a <= bound; ++a) {
    for (std::uint64_t b = 1; b <= bound; ++b) {
      if (std::gcd(a, b) != 1) {
        continue;
      }
      fn(Rational::from_reduced(BigInt(a), BigInt(b)));
    }
  }
}

}  // namespace cwforest
