#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwforest/rational.hpp"

namespace cwforest {

/// A 2x2 matrix with nonnegative integer entries and nonzero determinant,
/// acting on Q+ as the linear fractional transformation
/// w -> (a11 w + a12) / (a21 w + a22).
class Mat2 {
 public:
  /// Throws DomainError on a negative entry or a zero determinant.
  Mat2(BigInt a11, BigInt a12, BigInt a21, BigInt a22);

  static Mat2 identity() { return Mat2(1, 0, 0, 1); }

  const BigInt& a11() const noexcept { return a11_; }
  const BigInt& a12() const noexcept { return a12_; }
  const BigInt& a21() const noexcept { return a21_; }
  const BigInt& a22() const noexcept { return a22_; }

  BigInt det() const { return a11_ * a22_ - a12_ * a21_; }

  /// "[[a11,a12],[a21,a22]]"
  std::string to_string() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);

 private:
  BigInt a11_, a12_, a21_, a22_;
};

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const noexcept;
};

/// [[1,0],[u,1]], acting as w -> w/(uw + 1). Throws DomainError if u < 1.
Mat2 mat_L(const BigInt& u);
/// [[1,v],[0,1]], acting as w -> w + v. Throws DomainError if v < 1.
Mat2 mat_R(const BigInt& v);

/// Image of w under the transformation of m, reduced.
Rational apply(const Mat2& m, const Rational& w);

/// Sufficient conditions for {a, b} to freely generate their monoid with
/// 0 < a(w) < 1 < b(w) on Q+: a11 <= a21, a12 <= a22, b11 >= b21 and
/// b12 >= b22.
bool satisfies_freeness_hypotheses(const Mat2& a, const Mat2& b);

enum class Letter : unsigned char { L, R };

/// A finite word over {L, R}, read root to leaf.
class PathWord {
 public:
  PathWord() = default;
  explicit PathWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts any string over 'L' and 'R', including the empty string.
  static PathWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(Letter x) { letters_.push_back(x); }
  PathWord concat(const PathWord& tail) const;

  std::string to_string() const;

  friend bool operator==(const PathWord&, const PathWord&) = default;
  friend auto operator<=>(const PathWord&, const PathWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Product of the generators spelled by word, arranged so that
/// apply(word_to_matrix(w), root) is the vertex reached from root by
/// following w: the first letter acts first, so it is the rightmost factor.
/// Hence word_to_matrix(w1 w2) = word_to_matrix(w2) * word_to_matrix(w1).
/// The empty word gives the identity.
Mat2 word_to_matrix(const PathWord& word, const Mat2& left, const Mat2& right);
Mat2 word_to_matrix(const PathWord& word, const BigInt& u, const BigInt& v);

struct FreenessReport {
  std::size_t max_length = 0;
  bool distinct = true;
  /// Number of non-empty words checked; the identity is checked as well but
  /// not counted.
  std::size_t word_count = 0;
  std::optional<std::pair<PathWord, PathWord>> collision;
};

inline constexpr std::size_t kDefaultMaxWordLength = 20;

/// Enumerates every word of length <= max_length over {L_u, R_v} and reports
/// whether their matrices are pairwise distinct. This is a bounded
/// certificate, not a proof. Throws LimitError if max_length > limit.
FreenessReport freeness_probe(const Mat2& left, const Mat2& right, std::size_t max_length,
                              std::size_t limit = kDefaultMaxWordLength);
FreenessReport freeness_probe(const BigInt& u, const BigInt& v, std::size_t max_length,
                              std::size_t limit = kDefaultMaxWordLength);

}  // namespace cwforest
