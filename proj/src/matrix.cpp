#include "cwforest/matrix.hpp"

#include <functional>
#include <unordered_map>

#include "cwforest/error.hpp"

namespace cwforest {

namespace {

// Word of length `length` whose letters are the bits of `index`, most
// significant first, 0 = L.
PathWord word_from_bits(std::size_t length, std::size_t index) {
  std::vector<Letter> letters(length);
  for (std::size_t k = 0; k < length; ++k) {
    letters[length - 1 - k] = ((index >> k) & 1u) ? Letter::R : Letter::L;
  }
  return PathWord(std::move(letters));
}

}  // namespace

Mat2::Mat2(BigInt a11, BigInt a12, BigInt a21, BigInt a22)
    : a11_(std::move(a11)), a12_(std::move(a12)), a21_(std::move(a21)), a22_(std::move(a22)) {
  if (a11_ < 0 || a12_ < 0 || a21_ < 0 || a22_ < 0) {
    throw DomainError("matrix entries must be nonnegative: " + to_string());
  }
  if (det() == 0) {
    throw DomainError("matrix is singular: " + to_string());
  }
}

std::string Mat2::to_string() const {
  return "[[" + a11_.str() + "," + a12_.str() + "],[" + a21_.str() + "," + a22_.str() + "]]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(x.a11_ * y.a11_ + x.a12_ * y.a21_, x.a11_ * y.a12_ + x.a12_ * y.a22_,
              x.a21_ * y.a11_ + x.a22_ * y.a21_, x.a21_ * y.a12_ + x.a22_ * y.a22_);
}

std::size_t Mat2Hash::operator()(const Mat2& m) const noexcept {
  std::hash<BigInt> h;
  std::size_t seed = h(m.a11());
  for (const BigInt* e : {&m.a12(), &m.a21(), &m.a22()}) {
    seed ^= h(*e) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

Mat2 mat_L(const BigInt& u) {
  if (u < 1) {
    throw DomainError("L_u requires u >= 1, got " + u.str());
  }
  return Mat2(1, 0, u, 1);
}

Mat2 mat_R(const BigInt& v) {
  if (v < 1) {
    throw DomainError("R_v requires v >= 1, got " + v.str());
  }
  return Mat2(1, v, 0, 1);
}

Rational apply(const Mat2& m, const Rational& w) {
  const BigInt& a = w.numer();
  const BigInt& b = w.denom();
  BigInt num = m.a11() * a + m.a12() * b;
  BigInt den = m.a21() * a + m.a22() * b;
  if (den == 0 || num == 0) {
    throw DomainError("transformation " + m.to_string() + " leaves Q+ at " + w.to_string());
  }
  return Rational::make(num, den);
}

bool satisfies_freeness_hypotheses(const Mat2& a, const Mat2& b) {
  return a.a11() <= a.a21() && a.a12() <= a.a22() && b.a11() >= b.a21() && b.a12() >= b.a22();
}

PathWord PathWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == 'L') {
      letters.push_back(Letter::L);
    } else if (c == 'R') {
      letters.push_back(Letter::R);
    } else {
      throw DomainError("path word may contain only 'L' and 'R', got '" + std::string(text) + "'");
    }
  }
  return PathWord(std::move(letters));
}

PathWord PathWord::concat(const PathWord& tail) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return PathWord(std::move(out));
}

std::string PathWord::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) {
    s.push_back(x == Letter::L ? 'L' : 'R');
  }
  return s;
}

Mat2 word_to_matrix(const PathWord& word, const Mat2& left, const Mat2& right) {
  Mat2 m = Mat2::identity();
  for (Letter x : word.letters()) {
    m = (x == Letter::L ? left : right) * m;
  }
  return m;
}

Mat2 word_to_matrix(const PathWord& word, const BigInt& u, const BigInt& v) {
  return word_to_matrix(word, mat_L(u), mat_R(v));
}

FreenessReport freeness_probe(const Mat2& left, const Mat2& right, std::size_t max_length,
                              std::size_t limit) {
  if (max_length > limit) {
    throw LimitError("word length " + std::to_string(max_length) + " exceeds the cap of " +
                     std::to_string(limit));
  }
  if (max_length == 0) {
    throw DomainError("word length bound must be at least 1");
  }
  if (max_length >= 8 * sizeof(std::size_t) - 1) {
    throw LimitError("word length " + std::to_string(max_length) + " is not addressable");
  }

  FreenessReport report;
  report.max_length = max_length;

  // Each matrix remembers the (length, index) of the first word that produced it.
  std::unordered_map<Mat2, std::pair<std::size_t, std::size_t>, Mat2Hash> seen;
  seen.emplace(Mat2::identity(), std::pair<std::size_t, std::size_t>{0, 0});

  std::vector<Mat2> level{Mat2::identity()};
  for (std::size_t length = 1; length <= max_length; ++length) {
    std::vector<Mat2> next;
    next.reserve(level.size() * 2);
    for (const Mat2& m : level) {
      next.push_back(left * m);
      next.push_back(right * m);
    }
    for (std::size_t index = 0; index < next.size(); ++index) {
      ++report.word_count;
      auto [it, inserted] = seen.emplace(next[index], std::pair{length, index});
      if (!inserted && report.distinct) {
        report.distinct = false;
        report.collision.emplace(word_from_bits(it->second.first, it->second.second),
                                 word_from_bits(length, index));
      }
    }
    level = std::move(next);
  }
  return report;
}

FreenessReport freeness_probe(const BigInt& u, const BigInt& v, std::size_t max_length,
                              std::size_t limit) {
  return freeness_probe(mat_L(u), mat_R(v), max_length, limit);
}

}  // namespace cwforest
