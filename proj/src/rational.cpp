#include "cwforest/rational.hpp"

#include <cassert>
#include <functional>

#include "cwforest/error.hpp"

namespace cwforest {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational Rational::make(const BigInt& n, const BigInt& d) {
  if (n <= 0 || d <= 0) {
    throw DomainError("only positive rationals are representable, got " + n.str() + "/" + d.str());
  }
  BigInt g = boost::multiprecision::gcd(n, d);
  return Rational(n / g, d / g);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("malformed rational '" + std::string(text) + "', expected a/b with a, b >= 1");
  }
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (n == 0 || d == 0) {
    throw DomainError("rational '" + std::string(text) + "' has a zero numerator or denominator");
  }
  return make(n, d);
}

Rational Rational::from_reduced(BigInt n, BigInt d) {
  assert(n >= 1 && d >= 1 && boost::multiprecision::gcd(n, d) == 1);
  return Rational(std::move(n), std::move(d));
}

Rational Rational::plus(const BigInt& k) const {
  // gcd(a + kb, b) = gcd(a, b) = 1
  return Rational(numer_ + k * denom_, denom_);
}

std::string Rational::to_string() const {
  return is_integer() ? numer_.str() : to_fraction_string();
}

std::string Rational::to_fraction_string() const { return numer_.str() + "/" + denom_.str(); }

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  BigInt lhs = x.numer_ * y.denom_;
  BigInt rhs = y.numer_ * x.denom_;
  if (lhs < rhs) {
    return std::strong_ordering::less;
  }
  if (lhs > rhs) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational operator*(const Rational& x, const Rational& y) {
  return Rational::make(x.numer() * y.numer(), x.denom() * y.denom());
}

BigInt height(const Rational& q) { return q.numer() > q.denom() ? q.numer() : q.denom(); }

std::vector<BigInt> continued_fraction(const Rational& q) {
  std::vector<BigInt> terms;
  BigInt a = q.numer();
  BigInt b = q.denom();
  while (b != 0) {
    BigInt quot;
    BigInt rem;
    boost::multiprecision::divide_qr(a, b, quot, rem);
    terms.push_back(std::move(quot));
    a = std::move(b);
    b = std::move(rem);
  }
  return terms;
}

Rational from_continued_fraction(const std::vector<BigInt>& terms) {
  if (terms.empty()) {
    throw DomainError("empty continued fraction");
  }
  // Fold from the tail: p/q <- a + 1/(p/q) = (a*p + q)/p.
  BigInt p = terms.back();
  BigInt r = 1;
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (p == 0) {
      throw DomainError("continued fraction has a zero partial quotient after the first");
    }
    BigInt next = *it * p + r;
    r = std::move(p);
    p = std::move(next);
  }
  return Rational::make(p, r);
}

std::size_t RationalHash::operator()(const Rational& q) const noexcept {
  std::hash<BigInt> h;
  return h(q.numer()) * 1000003u ^ h(q.denom());
}

}  // namespace cwforest
