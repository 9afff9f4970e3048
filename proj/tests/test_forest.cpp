#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "cwforest/error.hpp"
#include "cwforest/forest.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cwforest;
using testing::Q;
using testing::QS;

namespace {

const ForestConfig kCW(1, 1);
const ForestConfig k22(2, 2);
const ForestConfig k54(5, 4);
const ForestConfig k45(4, 5);

}  // namespace

TEST_CASE("ForestConfig and TreeAddress validate their fields") {
  CHECK_THROWS_AS(ForestConfig(0, 1), DomainError);
  CHECK_THROWS_AS(ForestConfig(1, 0), DomainError);
  CHECK(ForestConfig(5, 4).swapped() == ForestConfig(4, 5));
  CHECK_THROWS_AS(TreeAddress(0, 2), DomainError);
  CHECK_THROWS_AS(TreeAddress(3, 0), DomainError);
  CHECK_THROWS_AS(TreeAddress(3, 9), DomainError);
  CHECK_NOTHROW(TreeAddress(3, 8));
  CHECK_NOTHROW(TreeAddress(200, BigInt(1) << 200));
}

TEST_CASE("address and path word are the n-bit expansion of i - 1") {
  CHECK(TreeAddress(3, 6).to_word().to_string() == "RLR");
  CHECK(TreeAddress(0, 1).to_word().empty());
  CHECK(TreeAddress::from_word(PathWord::parse("LR")) == TreeAddress(2, 2));
  CHECK(TreeAddress::from_word(PathWord::parse("LLLL")) == TreeAddress(4, 1));
  CHECK(TreeAddress::from_word(PathWord::parse("RRRR")) == TreeAddress(4, 16));
  CHECK(TreeAddress(3, 6).mirrored() == TreeAddress(3, 3));
  for (std::size_t n = 0; n <= 6; ++n) {
    for (int i = 1; i <= (1 << n); ++i) {
      TreeAddress addr(n, i);
      REQUIRE(TreeAddress::from_word(addr.to_word()) == addr);
    }
  }
}

TEST_CASE("children") {
  Children c = children(kCW, Q("1"));
  CHECK(c.left == Q("1/2"));
  CHECK(c.right == Q("2"));
  c = children(k22, Q("1/3"));
  CHECK(c.left == Q("1/5"));
  CHECK(c.right == Q("7/3"));
  c = children(k54, Q("3/2"));
  CHECK(c.left == Q("3/17"));
  CHECK(c.right == Q("11/2"));
}

TEST_CASE("vertex_at") {
  CHECK(vertex_at(k22, Q("1"), TreeAddress(2, 2)) == Q("7/3"));
  CHECK(vertex_at(k45, Q("2/3"), TreeAddress(1, 2)) == Q("17/3"));
  CHECK(vertex_at(k54, Q("7/9"), TreeAddress(0, 1)) == Q("7/9"));
  // Non-orphan roots are allowed.
  CHECK(vertex_at(k22, Q("7/3"), TreeAddress(1, 1)) == Q("7/17"));
}

TEST_CASE("row") {
  CHECK(row(k22, Q("2/3"), 2) == QS({"2/11", "16/7", "8/19", "14/3"}));
  CHECK(row(k54, Q("3/2"), 2) == QS({"3/32", "71/17", "11/57", "19/2"}));
  CHECK(row(kCW, Q("1"), 1) == QS({"1/2", "2"}));
  CHECK(row(kCW, Q("1"), 0) == QS({"1"}));
  CHECK_THROWS_AS(row(kCW, Q("1"), 25), LimitError);
  CHECK_THROWS_AS(row(kCW, Q("1"), 5, 4), LimitError);
}

TEST_CASE("row agrees with the 64-bit oracle and with vertex_at") {
  for (auto [u, v] : {std::pair{1, 1}, {2, 2}, {5, 4}, {4, 5}, {3, 1}, {1, 7}}) {
    const ForestConfig cfg(u, v);
    for (const char* root : {"1", "3/2", "2/3", "5/7"}) {
      Rational z = Q(root);
      for (unsigned n = 0; n <= 8; ++n) {
        std::vector<Rational> got = row(cfg, z, n);
        auto want = oracle::tree_row(u, v, {z.numer().convert_to<std::uint64_t>(), z.denom().convert_to<std::uint64_t>()}, n);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          REQUIRE(got[i] == Rational::make(BigInt(want[i].first), BigInt(want[i].second)));
          if (n <= 5) {
            REQUIRE(vertex_at(cfg, z, TreeAddress(n, i + 1)) == got[i]);
          }
        }
      }
    }
  }
}

TEST_CASE("descending a word agrees with applying its matrix") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const ForestConfig cfg(1 + rng() % 5, 1 + rng() % 5);
    PathWord w = testing::random_word(rng, 12);
    Rational root = testing::random_rational(rng, 50);
    REQUIRE(apply(word_to_matrix(w, cfg.u(), cfg.v()), root) == descend(cfg, root, w));
  }
}

TEST_CASE("golden rows") {
  std::ifstream in(CWFOREST_TEST_DATA_DIR "/golden_rows.txt");
  REQUIRE(in.good());
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream head(line.substr(0, line.find('|')));
    int u = 0, v = 0;
    std::string root;
    std::size_t n = 0;
    head >> u >> v >> root >> n;
    std::istringstream body(line.substr(line.find('|') + 1));
    std::vector<Rational> want;
    for (std::string tok; body >> tok;) {
      want.push_back(Q(tok));
    }
    CAPTURE(line);
    CHECK(row(ForestConfig(u, v), Q(root), n) == want);
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("is_orphan") {
  CHECK(is_orphan(kCW, Q("1")));
  CHECK_FALSE(is_orphan(kCW, Q("2")));
  CHECK_FALSE(is_orphan(kCW, Q("1/2")));
  CHECK(is_orphan(k22, Q("3/2")));
  CHECK(is_orphan(k22, Q("1/2")));
  CHECK(is_orphan(k22, Q("2")));
  CHECK_FALSE(is_orphan(k22, Q("7/3")));
  CHECK_FALSE(is_orphan(k22, Q("1/3")));
  // The unique (1,1) orphan.
  for_each_reduced_up_to_height(50, [](const Rational& q) { REQUIRE(is_orphan(kCW, q) == (q == Q("1"))); });
}

TEST_CASE("parent") {
  auto p = parent(k22, Q("7/3"));
  REQUIRE(p.has_value());
  CHECK(p->parent == Q("1/3"));
  CHECK(p->side == Letter::R);
  p = parent(k22, Q("1/3"));
  REQUIRE(p.has_value());
  CHECK(p->parent == Q("1"));
  CHECK(p->side == Letter::L);
  CHECK_FALSE(parent(k22, Q("1")).has_value());
  // Interval endpoints are orphans.
  CHECK_FALSE(parent(k54, Q("1/5")).has_value());
  CHECK_FALSE(parent(k54, Q("4")).has_value());
}

TEST_CASE("decompose") {
  Location loc = decompose(kCW, Q("5/3"));
  CHECK(loc.root == Q("1"));
  CHECK(loc.word.to_string() == "RLR");
  CHECK(loc.address == TreeAddress(3, 6));

  loc = decompose(k22, Q("7/3"));
  CHECK(loc.root == Q("1"));
  CHECK(loc.word.to_string() == "LR");
  CHECK(loc.address == TreeAddress(2, 2));

  loc = decompose(k22, Q("3/2"));
  CHECK(loc.root == Q("3/2"));
  CHECK(loc.word.empty());
  CHECK(loc.address == TreeAddress(0, 1));

  CHECK_THROWS_AS(decompose(kCW, Q("1/50"), 10), LimitError);
  CHECK(decompose(kCW, Q("1/50"), 49).address.row() == 49);
}

TEST_CASE("separation, height growth and reducedness of children") {
  for (const ForestConfig& cfg : {kCW, k22, k54, k45}) {
    const Rational inv_u = Rational::make(1, cfg.u());
    const Rational v_q = Rational::make(cfg.v(), 1);
    for_each_reduced_up_to_height(120, [&](const Rational& w) {
      Children c = children(cfg, w);
      REQUIRE(c.left < inv_u);
      REQUIRE(c.right > v_q);
      REQUIRE_FALSE(is_orphan(cfg, c.left));
      REQUIRE_FALSE(is_orphan(cfg, c.right));
      REQUIRE(height(c.left) > height(w));
      REQUIRE(height(c.right) > height(w));
      REQUIRE(boost::multiprecision::gcd(c.left.numer(), c.left.denom()) == 1);
      REQUIRE(boost::multiprecision::gcd(c.right.numer(), c.right.denom()) == 1);
    });
  }
}

TEST_CASE("parent inverts children up to height 300") {
  for (const ForestConfig& cfg : {kCW, k22, k54, k45}) {
    for_each_reduced_up_to_height(300, [&](const Rational& q) {
      auto p = parent(cfg, q);
      REQUIRE(p.has_value() != is_orphan(cfg, q));
      if (p) {
        Children c = children(cfg, p->parent);
        REQUIRE((p->side == Letter::L ? c.left : c.right) == q);
        REQUIRE(height(p->parent) < height(q));
      }
    });
  }
}

TEST_CASE("decompose replays and places rationals injectively") {
  for (const ForestConfig& cfg : {kCW, k22, k54, k45}) {
    std::unordered_set<std::string> placements;
    for_each_reduced_up_to_height(150, [&](const Rational& q) {
      Location loc = decompose(cfg, q);
      REQUIRE(is_orphan(cfg, loc.root));
      REQUIRE(vertex_at(cfg, loc.root, loc.address) == q);
      REQUIRE(descend(cfg, loc.root, loc.word) == q);
      REQUIRE(loc.word.size() < height(q));
      REQUIRE(placements.insert(loc.root.to_fraction_string() + ":" + loc.word.to_string()).second);
    });
  }
}

TEST_CASE("rows 0..12 of one tree are pairwise distinct") {
  for (const ForestConfig& cfg : {kCW, k22, k54}) {
    std::unordered_set<Rational, RationalHash> seen;
    std::size_t total = 0;
    for (std::size_t n = 0; n <= 12; ++n) {
      for (Rational& q : row(cfg, Q("3/2"), n)) {
        seen.insert(std::move(q));
        ++total;
      }
    }
    CHECK(total == (std::size_t{1} << 13) - 1);
    CHECK(seen.size() == total);
  }
}
