#include "cwforest/forest.hpp"

#include <algorithm>
#include <cassert>

#include "cwforest/error.hpp"

namespace cwforest {

ForestConfig::ForestConfig(BigInt u, BigInt v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_ < 1 || v_ < 1) {
    throw DomainError("forest parameters must satisfy u >= 1 and v >= 1, got (" + u_.str() + "," +
                      v_.str() + ")");
  }
}

TreeAddress::TreeAddress(std::size_t row, BigInt index) : row_(row), index_(std::move(index)) {
  if (index_ < 1 || index_ > (BigInt(1) << row_)) {
    throw DomainError("index " + index_.str() + " is outside row " + std::to_string(row_) +
                      " (valid range 1..2^" + std::to_string(row_) + ")");
  }
}

TreeAddress TreeAddress::from_word(const PathWord& word) {
  BigInt bits = 0;
  for (Letter x : word.letters()) {
    bits <<= 1;
    if (x == Letter::R) {
      bits |= 1;
    }
  }
  return TreeAddress(word.size(), bits + 1);
}

PathWord TreeAddress::to_word() const {
  BigInt bits = index_ - 1;
  std::vector<Letter> letters(row_);
  for (std::size_t k = 0; k < row_; ++k) {
    letters[row_ - 1 - k] = boost::multiprecision::bit_test(bits, static_cast<unsigned>(k)) ? Letter::R : Letter::L;
  }
  return PathWord(std::move(letters));
}

TreeAddress TreeAddress::mirrored() const { return TreeAddress(row_, (BigInt(1) << row_) + 1 - index_); }

Children children(const ForestConfig& cfg, const Rational& w) {
  const BigInt& a = w.numer();
  const BigInt& b = w.denom();
  return {Rational::from_reduced(a, cfg.u() * a + b), Rational::from_reduced(a + cfg.v() * b, b)};
}

Rational descend(const ForestConfig& cfg, const Rational& root, const PathWord& word) {
  Rational w = root;
  for (Letter x : word.letters()) {
    Children c = children(cfg, w);
    w = x == Letter::L ? std::move(c.left) : std::move(c.right);
  }
  return w;
}

Rational vertex_at(const ForestConfig& cfg, const Rational& root, const TreeAddress& addr) {
  return descend(cfg, root, addr.to_word());
}

std::vector<Rational> row(const ForestConfig& cfg, const Rational& root, std::size_t n,
                          std::size_t max_row) {
  if (n > max_row) {
    throw LimitError("row " + std::to_string(n) + " exceeds the depth cap of " + std::to_string(max_row));
  }
  std::vector<Rational> level{root};
  for (std::size_t depth = 0; depth < n; ++depth) {
    std::vector<Rational> next;
    next.reserve(level.size() * 2);
    for (const Rational& w : level) {
      Children c = children(cfg, w);
      next.push_back(std::move(c.left));
      next.push_back(std::move(c.right));
    }
    level = std::move(next);
  }
  return level;
}

bool is_orphan(const ForestConfig& cfg, const Rational& q) {
  // 1/u <= a/b <= v  <=>  b <= ua  and  a <= vb
  return q.denom() <= cfg.u() * q.numer() && q.numer() <= cfg.v() * q.denom();
}

std::optional<ParentStep> parent(const ForestConfig& cfg, const Rational& q) {
  const BigInt& a = q.numer();
  const BigInt& b = q.denom();
  const bool above = a > cfg.v() * b;
  const bool below = b > cfg.u() * a;
  assert(!(above && below));
  if (above) {
    return ParentStep{Rational::from_reduced(a - cfg.v() * b, b), Letter::R};
  }
  if (below) {
    return ParentStep{Rational::from_reduced(a, b - cfg.u() * a), Letter::L};
  }
  return std::nullopt;
}

Location decompose(const ForestConfig& cfg, const Rational& q, std::size_t max_steps) {
  std::vector<Letter> reversed;
  Rational w = q;
  while (auto step = parent(cfg, w)) {
    if (reversed.size() == max_steps) {
      throw LimitError(q.to_string() + " lies deeper than " + std::to_string(max_steps) + " rows below its root");
    }
    reversed.push_back(step->side);
    w = std::move(step->parent);
  }
  std::reverse(reversed.begin(), reversed.end());
  PathWord word(std::move(reversed));
  TreeAddress addr = TreeAddress::from_word(word);
  return {std::move(w), std::move(word), std::move(addr)};
}

}  // namespace cwforest
