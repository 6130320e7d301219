#include <doctest.h>

#include <random>

#include "chaoscalc/natset.hpp"

using namespace chaoscalc;
using natset::Int;
using natset::SetExpr;

namespace {

// Brute-force oracle: counts by scanning member() one index at a time.
Int brute_count(const SetExpr& a, Int n) {
  Int c = 0;
  for (Int k = 1; k <= n; ++k)
    if (a.member(k)) ++c;
  return c;
}

natset::SetExprPtr geom_blocks() {
  return natset::parse_set_spec("blocks:pos=geom(1,2):len=linear");
}

// Random expression over the grammar, depth-limited.
natset::SetExprPtr random_expr(std::mt19937_64& rng, int depth) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int choice = depth <= 0 ? pick(0, 2) : pick(0, 5);
  switch (choice) {
    case 0: {
      std::vector<Int> elems;
      int n = pick(1, 12);
      for (int i = 0; i < n; ++i) elems.push_back(Int(pick(1, 500)));
      return SetExpr::finite(elems);
    }
    case 1: {
      Int m = pick(2, 12);
      std::vector<Int> residues;
      for (Int r = 0; r < m; ++r)
        if (pick(0, 1)) residues.push_back(r);
      return SetExpr::periodic(m, residues);
    }
    case 2: {
      natset::BlockRule rule;
      if (pick(0, 1)) {
        rule.pos = natset::BlockRule::Pos::Geometric;
        rule.scale = pick(1, 3);
        rule.param = pick(2, 4);
        if (pick(0, 1)) {
          rule.len = natset::BlockRule::Len::Linear;
        } else {
          rule.len = natset::BlockRule::Len::Constant;
          // keep L below the first inter-block gap c*r*(r-1)
          rule.len_const = pick(1, int(rule.scale * rule.param * (rule.param - 1)));
        }
      } else {
        rule.pos = natset::BlockRule::Pos::Polynomial;
        rule.scale = pick(2, 6);
        rule.param = pick(2, 3);
        rule.len = natset::BlockRule::Len::Constant;
        rule.len_const = pick(1, 2);
      }
      return SetExpr::blocks(rule);
    }
    case 3:
      return SetExpr::set_union(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 4:
      return SetExpr::set_intersection(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default:
      return SetExpr::complement(random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("membership across the expression kinds") {
  auto evens = SetExpr::periodic(2, {0});
  CHECK(evens->member(4));
  CHECK_FALSE(SetExpr::complement(evens)->member(4));
  // block [8,10] for k=3 under a_k = 2^k, len_k = k
  auto blocks = geom_blocks();
  CHECK(blocks->member(9));
  // oracle: enumerate blocks below 2^4 by hand: {2}, {4,5}, {8,9,10}
  for (Int k : {2, 4, 5, 8, 9, 10}) CHECK(blocks->member(k));
  for (Int k : {1, 3, 6, 7, 11, 12, 15}) CHECK_FALSE(blocks->member(k));
}

TEST_CASE("count_prefix closed forms match the brute-force oracle") {
  auto evens = SetExpr::periodic(2, {0});
  CHECK(evens->count_prefix(10) == 5);
  CHECK(SetExpr::finite({3, 7, 100})->count_prefix(10) == 2);
  CHECK(geom_blocks()->count_prefix(10) == 6);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto expr = random_expr(rng, 2);
    Int n = std::uniform_int_distribution<Int>(1, 400)(rng);
    CHECK(expr->count_prefix(n) == brute_count(*expr, n));
  }
}

TEST_CASE("count_window identities") {
  auto evens = SetExpr::periodic(2, {0});
  CHECK(evens->count_window(1, 4) == 2);  // {2..5} contains 2, 4
  CHECK(geom_blocks()->count_window(7, 3) == 3);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto expr = random_expr(rng, 2);
    Int n = std::uniform_int_distribution<Int>(0, 100)(rng);
    Int s = std::uniform_int_distribution<Int>(1, 50)(rng);
    Int t = std::uniform_int_distribution<Int>(1, 50)(rng);
    // unit window = membership
    CHECK(expr->count_window(n, 1) == (expr->member(n + 1) ? 1 : 0));
    // additivity over adjacent windows
    CHECK(expr->count_window(n, s + t) == expr->count_window(n, s) + expr->count_window(n + s, t));
  }
}

TEST_CASE("member agrees with prefix-count differences") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto expr = random_expr(rng, 2);
    for (Int k = 1; k <= 60; ++k)
      CHECK((expr->member(k) ? 1 : 0) == expr->count_prefix(k) - expr->count_prefix(k - 1));
  }
}

TEST_CASE("complement partition is exact") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    auto expr = random_expr(rng, 2);
    auto compl_expr = SetExpr::complement(expr);
    for (Int n : {1, 17, 256, 999})
      CHECK(expr->count_prefix(n) + compl_expr->count_prefix(n) == n);
  }
}

TEST_CASE("periodic prefix counts are exactly q*|R| at multiples of m") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Int m = std::uniform_int_distribution<Int>(1, 30)(rng);
    std::vector<Int> residues;
    for (Int r = 0; r < m; ++r)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) residues.push_back(r);
    auto expr = SetExpr::periodic(m, residues);
    for (Int q : {1, 3, 11})
      CHECK(expr->count_prefix(q * m) == q * Int(residues.size()));
  }
}

TEST_CASE("difference_set") {
  CHECK(natset::difference_set(*SetExpr::periodic(3, {1}), 10) == std::vector<Int>{3, 3, 3});
  CHECK(natset::difference_set(*SetExpr::finite({2, 5}), 10) == std::vector<Int>{3});
  // {2,4,5,8,9,10,16,...}: gaps 2,1,3,1,1,6,...
  auto gaps = natset::difference_set(*geom_blocks(), 16);
  REQUIRE(gaps.size() >= 6);
  CHECK(gaps[0] == 2);
  CHECK(gaps[1] == 1);
  CHECK(gaps[2] == 3);
  CHECK(gaps[3] == 1);
  CHECK(gaps[4] == 1);
  CHECK(gaps[5] == 6);
}

TEST_CASE("syndeticity by gap stability") {
  auto evens = SetExpr::periodic(2, {0});
  auto rep = natset::is_syndetic(*evens, 10000);
  CHECK(rep.syndetic);
  CHECK(rep.stats.max_gap == 2);

  CHECK_FALSE(natset::is_syndetic(*geom_blocks(), 10000).syndetic);

  std::vector<Int> first_hundred;
  for (Int k = 1; k <= 100; ++k) first_hundred.push_back(k);
  CHECK_FALSE(natset::is_syndetic(*SetExpr::finite(first_hundred), 10000).syndetic);

  // fewer than 2 elements: unbounded-gap flag
  auto singleton = natset::is_syndetic(*SetExpr::finite({5}), 100);
  CHECK_FALSE(singleton.syndetic);
  CHECK_FALSE(singleton.stats.max_gap.has_value());
}

TEST_CASE("set-spec grammar round trip") {
  for (const char* spec :
       {"finite:{3,7,100}", "periodic:6:{0,3}", "blocks:pos=geom(1,2):len=linear",
        "blocks:pos=poly(1,2):len=const(3)", "blocks:pos=geom(2,3):len=superexp",
        "union(periodic:2:{0},finite:{1})", "inter(periodic:2:{0},compl(finite:{2,4}))"}) {
    auto expr = natset::parse_set_spec(spec);
    CHECK(natset::to_spec_string(*expr) == spec);
  }
  CHECK_THROWS_AS(natset::parse_set_spec("bad:::"), natset::ParseError);
  CHECK_THROWS_AS(natset::parse_set_spec("periodic:0:{0}"), std::exception);
  CHECK_THROWS_AS(natset::parse_set_spec(""), natset::ParseError);
  // overlapping block family is rejected
  CHECK_THROWS(natset::parse_set_spec("blocks:pos=poly(1,1):len=linear"));
}

TEST_CASE("superexp block lengths") {
  // a_k = 2*4^k, len_k = k*2^k: [8,9], [32,39], [128,151], ...
  auto s = natset::parse_set_spec("blocks:pos=geom(2,4):len=superexp");
  CHECK(s->member(8));
  CHECK(s->member(9));
  CHECK_FALSE(s->member(10));
  CHECK(s->member(32));
  CHECK(s->member(39));
  CHECK_FALSE(s->member(40));
  CHECK(s->count_prefix(39) == 2 + 8);
  CHECK(s->count_prefix(151) == 2 + 8 + 24);
  CHECK(s->count_prefix(500) == brute_count(*s, 500));
}

TEST_CASE("bitmap agrees with member") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    auto expr = random_expr(rng, 2);
    auto bm = expr->bitmap(300);
    for (Int k = 1; k <= 300; ++k) CHECK(bool(bm[std::size_t(k)]) == expr->member(k));
  }
}
