#include "cwforest/classical.hpp"

#include "cwforest/error.hpp"

namespace cwforest::classical {

ForestConfig calkin_wilf() { return ForestConfig(1, 1); }

Rational cw_vertex(const TreeAddress& addr) { return vertex_at(calkin_wilf(), Rational::make(1), addr); }

Rational newman_successor(const Rational& q) {
  // 2 floor(q) + 1 - q = ((2 floor(q) + 1) b - a) / b, positive since q - floor(q) < 1.
  const BigInt& a = q.numer();
  const BigInt& b = q.denom();
  BigInt num = (2 * q.floor() + 1) * b - a;
  return Rational::make(b, num);
}

BigInt cw_row_of(const Rational& q) {
  BigInt sum = 0;
  for (const BigInt& t : continued_fraction(q)) {
    sum += t;
  }
  return sum - 1;
}

std::vector<Rational> newman_row(std::size_t n, std::size_t max_row) {
  if (n > max_row) {
    throw LimitError("row " + std::to_string(n) + " exceeds the depth cap of " + std::to_string(max_row));
  }
  const std::size_t width = std::size_t{1} << n;
  std::vector<Rational> out;
  out.reserve(width);
  out.push_back(Rational::make(1, static_cast<std::int64_t>(n) + 1));
  while (out.size() < width) {
    out.push_back(newman_successor(out.back()));
  }
  return out;
}

bool check_denominator_chain(std::size_t n, std::size_t max_row) {
  std::vector<Rational> r = row(calkin_wilf(), Rational::make(1), n, max_row);
  const auto np1 = static_cast<std::int64_t>(n) + 1;
  if (r.front() != Rational::make(1, np1) || r.back() != Rational::make(np1)) {
    return false;
  }
  for (std::size_t j = 0; j + 1 < r.size(); ++j) {
    if (r[j].denom() != r[j + 1].numer()) {
      return false;
    }
  }
  return true;
}

}  // namespace cwforest::classical
