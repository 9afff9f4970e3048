#include "cwforest/verify.hpp"

#include <limits>
#include <sstream>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cwforest/error.hpp"
#include "cwforest/matrix.hpp"

namespace cwforest {

namespace {

nlohmann::json integer_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
    return x.convert_to<std::uint64_t>();
  }
  return x.str();
}

VerificationReport start(Claim claim, const BigInt& u, const BigInt& v, std::uint64_t bound) {
  VerificationReport r;
  r.claim = claim;
  r.u = u;
  r.v = v;
  r.bound = bound;
  return r;
}

void fail(VerificationReport& r, std::string witness) {
  if (r.passed) {
    r.passed = false;
    r.first_failure = std::move(witness);
  }
}

void check_height_bound(std::uint64_t bound, std::uint64_t cap) {
  if (bound == 0) {
    throw DomainError("height bound must be at least 1");
  }
  if (bound > cap) {
    throw LimitError("height bound " + std::to_string(bound) + " exceeds the cap of " + std::to_string(cap));
  }
}

}  // namespace

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::symmetry:
      return "symmetry";
    case Claim::partition:
      return "partition";
    case Claim::freeness:
      return "freeness";
    case Claim::range:
      return "range";
  }
  return "unknown";
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["claim"] = std::string(cwforest::to_string(claim));
  j["u"] = integer_json(u);
  j["v"] = integer_json(v);
  if (root) {
    j["root"] = root->to_string();
  }
  j["bound"] = bound;
  j["passed"] = passed;
  j["checked_count"] = checked_count;
  if (first_failure) {
    j["first_failure"] = *first_failure;
  }
  return j;
}

VerificationReport verify_symmetry(const BigInt& u, const BigInt& v, const Rational& z, std::size_t max_row,
                                   std::size_t row_cap) {
  if (max_row > row_cap) {
    throw LimitError("depth " + std::to_string(max_row) + " exceeds the cap of " + std::to_string(row_cap));
  }
  const ForestConfig cfg(u, v);
  const ForestConfig mirror = cfg.swapped();
  VerificationReport report = start(Claim::symmetry, u, v, max_row);
  report.root = z;

  std::vector<Rational> lhs{z};
  std::vector<Rational> rhs{z.reciprocal()};
  for (std::size_t n = 0;; ++n) {
    const std::size_t width = lhs.size();
    for (std::size_t i = 0; i < width && report.passed; ++i) {
      const Rational& x = lhs[i];
      const Rational& y = rhs[width - 1 - i];
      ++report.checked_count;
      Rational product = x * y;
      if (product != Rational::make(1)) {
        std::ostringstream os;
        os << "row " << n << " index " << i + 1 << ": " << x << " * " << y << " = " << product;
        fail(report, os.str());
      }
    }
    if (n == max_row || !report.passed) {
      break;
    }
    lhs = row(cfg, z, n + 1, row_cap);
    rhs = row(mirror, z.reciprocal(), n + 1, row_cap);
  }
  return report;
}

VerificationReport verify_self_symmetry(const BigInt& u, std::size_t max_row, std::size_t row_cap) {
  return verify_symmetry(u, u, Rational::make(1), max_row, row_cap);
}

VerificationReport verify_partition(const BigInt& u, const BigInt& v, std::uint64_t height_bound,
                                    std::uint64_t height_cap) {
  check_height_bound(height_bound, height_cap);
  const ForestConfig cfg(u, v);
  VerificationReport report = start(Claim::partition, u, v, height_bound);

  std::unordered_set<std::string> placements;
  for_each_reduced_up_to_height(height_bound, [&](const Rational& q) {
    ++report.checked_count;
    if (!report.passed) {
      return;
    }
    Location loc = decompose(cfg, q);
    if (!is_orphan(cfg, loc.root)) {
      fail(report, q.to_string() + " decomposes to non-orphan root " + loc.root.to_string());
      return;
    }
    Rational replay = vertex_at(cfg, loc.root, loc.address);
    if (replay != q) {
      fail(report, q.to_string() + " replays to " + replay.to_string());
      return;
    }
    std::string key = loc.root.to_fraction_string() + ":" + loc.word.to_string();
    if (!placements.insert(std::move(key)).second) {
      fail(report, q.to_string() + " shares root " + loc.root.to_string() + " and path '" + loc.word.to_string() +
                       "' with another rational");
    }
  });
  return report;
}

VerificationReport verify_range(const BigInt& u, const BigInt& v, std::uint64_t height_bound,
                                std::uint64_t height_cap) {
  check_height_bound(height_bound, height_cap);
  const Mat2 left = mat_L(u);
  const Mat2 right = mat_R(v);
  const Rational one = Rational::make(1);
  const Rational inv_u = Rational::make(1, u);
  const Rational v_q = Rational::make(v, 1);
  VerificationReport report = start(Claim::range, u, v, height_bound);

  if (!(inv_u <= one && one <= v_q)) {
    fail(report, "1/u <= 1 <= v fails for (" + u.str() + "," + v.str() + ")");
  }
  for_each_reduced_up_to_height(height_bound, [&](const Rational& w) {
    ++report.checked_count;
    if (!report.passed) {
      return;
    }
    // Positivity of both images is enforced by Rational itself.
    Rational lw = apply(left, w);
    Rational rw = apply(right, w);
    if (!(lw < inv_u && lw < one)) {
      fail(report, "L_u(" + w.to_string() + ") = " + lw.to_string() + " is not below 1/u");
    } else if (!(v_q < rw && one < rw)) {
      fail(report, "R_v(" + w.to_string() + ") = " + rw.to_string() + " is not above v");
    }
  });
  return report;
}

VerificationReport verify_freeness(const BigInt& u, const BigInt& v, std::size_t max_length,
                                   std::size_t length_cap) {
  FreenessReport probe = freeness_probe(u, v, max_length, length_cap);
  VerificationReport report = start(Claim::freeness, u, v, max_length);
  report.checked_count = probe.word_count;
  if (!probe.distinct) {
    const auto& [first, second] = *probe.collision;
    fail(report, "words '" + first.to_string() + "' and '" + second.to_string() + "' give the same matrix " +
                     word_to_matrix(second, u, v).to_string());
  }
  return report;
}

}  // namespace cwforest
