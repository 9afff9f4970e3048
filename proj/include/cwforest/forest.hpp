#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "cwforest/matrix.hpp"
#include "cwforest/rational.hpp"

namespace cwforest {

/// The generator pair (L_u, R_v) selecting one forest of Q+.
class ForestConfig {
 public:
  /// Throws DomainError unless u >= 1 and v >= 1.
  ForestConfig(BigInt u, BigInt v);

  const BigInt& u() const noexcept { return u_; }
  const BigInt& v() const noexcept { return v_; }

  /// The configuration with the roles of u and v exchanged.
  ForestConfig swapped() const { return ForestConfig(v_, u_); }

  Mat2 left() const { return mat_L(u_); }
  Mat2 right() const { return mat_R(v_); }

  friend bool operator==(const ForestConfig&, const ForestConfig&) = default;

 private:
  BigInt u_;
  BigInt v_;
};

/// Position i (1-based) of row n of a tree; 1 <= i <= 2^n.
class TreeAddress {
 public:
  /// Throws DomainError when index is outside [1, 2^row].
  TreeAddress(std::size_t row, BigInt index);

  /// Address reached from the root by following word. Bit k of index - 1
  /// (most significant first) is 0 for L and 1 for R.
  static TreeAddress from_word(const PathWord& word);

  std::size_t row() const noexcept { return row_; }
  const BigInt& index() const noexcept { return index_; }

  PathWord to_word() const;

  /// Address of the mirror vertex, index 2^row + 1 - i.
  TreeAddress mirrored() const;

  friend bool operator==(const TreeAddress&, const TreeAddress&) = default;

 private:
  std::size_t row_;
  BigInt index_;
};

inline constexpr std::size_t kDefaultMaxRow = 24;

struct Children {
  Rational left;
  Rational right;
};

/// a/b -> (a/(ua + b), (a + vb)/b). No reduction step is needed since both
/// generators have determinant 1.
Children children(const ForestConfig& cfg, const Rational& w);

/// Vertex at addr in the tree rooted at root. root need not be an orphan.
Rational vertex_at(const ForestConfig& cfg, const Rational& root, const TreeAddress& addr);

/// Vertex reached from root by following word.
Rational descend(const ForestConfig& cfg, const Rational& root, const PathWord& word);

/// All 2^n vertices of row n, left to right, built level by level.
/// Throws LimitError if n > max_row.
std::vector<Rational> row(const ForestConfig& cfg, const Rational& root, std::size_t n,
                          std::size_t max_row = kDefaultMaxRow);

/// True iff 1/u <= q <= v, i.e. q is the root of its tree.
bool is_orphan(const ForestConfig& cfg, const Rational& q);

struct ParentStep {
  Rational parent;
  Letter side;
};

/// The unique parent of q, or nullopt when q is an orphan.
std::optional<ParentStep> parent(const ForestConfig& cfg, const Rational& q);

struct Location {
  Rational root;
  PathWord word;
  TreeAddress address;
};

/// Walks parent links up to the orphan root. Total on Q+: height strictly
/// drops at each step, so the path is never longer than height(q). Throws
/// LimitError if more than max_steps parent steps are needed.
Location decompose(const ForestConfig& cfg, const Rational& q,
                   std::size_t max_steps = std::numeric_limits<std::size_t>::max());

}  // namespace cwforest
