#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "cgmult/weights.hpp"

using namespace cgm;

namespace {
Weight W(std::vector<int> twice, int n) {
  std::vector<HalfInt> e;
  for (int t : twice) e.emplace_back(t);
  return Weight(std::move(e), GroupSpec(n));
}
}  // namespace

TEST_CASE("halfint arithmetic and round trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> U(-50, 50);
  for (int i = 0; i < 500; ++i) {
    HalfInt a(U(rng)), b(U(rng));
    CHECK((a + b) - b == a);
    CHECK(HalfInt::parse(a.str()) == a);
  }
  CHECK(HalfInt::parse("3").twice() == 6);
  CHECK(HalfInt::parse("-3/2").twice() == -3);
  CHECK(HalfInt(3).square() == Rational(9, 4));
  CHECK(HalfInt(4).square() == Rational(4));
  CHECK_THROWS(HalfInt::parse("4/2"));
  CHECK_THROWS(HalfInt::parse(""));
}

TEST_CASE("rational exactness") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-20).str() == "-20");
  CHECK(Rational::parse("-5/3") == Rational(5, -3));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("dominance chains") {
  CHECK(is_dominant(W({6, 4, 2}, 7)));        // SO(7) (3,2,1)
  CHECK(is_dominant(W({4, 2, -2}, 6)));       // SO(6) (2,1,-1)
  CHECK_FALSE(is_dominant(W({2, 4, 0}, 7)));  // 1 < 2 breaks the chain
  CHECK(is_strongly_dominant(W({4, 2}, 5)));
  CHECK_FALSE(is_strongly_dominant(W({4, 4}, 5)));
  CHECK(is_strongly_dominant(W({6, -4}, 4)));  // 3 > |-2|
  // SO(2): empty strict chain, everything is strongly dominant
  CHECK(is_strongly_dominant(W({-3}, 2)));
  CHECK(is_strongly_dominant(W({0}, 2)));
  CHECK_THROWS(Weight({HalfInt(2)}, GroupSpec(5)));     // length mismatch
  CHECK_THROWS(Weight({HalfInt(2), HalfInt(1)}, GroupSpec(5)));  // mixed classes
}

TEST_CASE("strongly dominant implies dominant") {
  for (int n : {2, 3, 4, 5, 6, 7}) {
    for (SpinClass cls : {SpinClass::Integer, SpinClass::Half}) {
      for (const auto& w : enumerate_weights(GroupSpec(n), HalfInt(7), cls)) {
        CHECK(is_dominant(w));
        if (is_strongly_dominant(w)) CHECK(is_dominant(w));
      }
    }
  }
}

TEST_CASE("enumerate_weights matches spec examples") {
  auto so3 = enumerate_weights(GroupSpec(3), HalfInt(2), SpinClass::Integer);
  REQUIRE(so3.size() == 2);
  CHECK(so3[0].str() == "0");
  CHECK(so3[1].str() == "1");

  auto so4 = enumerate_weights(GroupSpec(4), HalfInt(2), SpinClass::Integer);
  REQUIRE(so4.size() == 4);
  CHECK(so4[0].str() == "0,0");
  CHECK(so4[1].str() == "1,-1");
  CHECK(so4[2].str() == "1,0");
  CHECK(so4[3].str() == "1,1");

  auto so5h = enumerate_weights(GroupSpec(5), HalfInt(3), SpinClass::Half);
  REQUIRE(so5h.size() == 3);
  CHECK(so5h[0].str() == "1/2,1/2");
  CHECK(so5h[1].str() == "3/2,1/2");
  CHECK(so5h[2].str() == "3/2,3/2");
}

// independent filter over the full grid: no dominant weight in range missing
TEST_CASE("enumerate_weights complete against grid filter") {
  for (int n : {3, 4, 5, 6}) {
    GroupSpec g(n);
    const int d = g.rank();
    HalfInt max(4);  // entries up to 2
    for (SpinClass cls : {SpinClass::Integer, SpinClass::Half}) {
      auto got = enumerate_weights(g, max, cls);
      // brute grid
      std::vector<std::vector<HalfInt>> grid;
      std::vector<HalfInt> cur(d);
      std::function<void(int)> rec = [&](int i) {
        if (i == d) { grid.push_back(cur); return; }
        for (int t = -4; t <= 4; ++t) {
          bool half = (t % 2 != 0);
          if ((cls == SpinClass::Half) != half) continue;
          cur[i] = HalfInt(t);
          rec(i + 1);
        }
      };
      rec(0);
      size_t count = 0;
      for (auto& e : grid) {
        bool neg_ok = true;
        for (int i = 0; i + 1 < d; ++i)
          if (e[i] < HalfInt(0)) neg_ok = false;
        if (!g.even() && d > 0 && e[d - 1] < HalfInt(0)) neg_ok = false;
        if (!neg_ok) continue;
        Weight w(e, g);
        if (!is_dominant(w)) continue;
        ++count;
        CHECK(std::find(got.begin(), got.end(), w) != got.end());
      }
      CHECK(count == got.size());
    }
  }
}

TEST_CASE("weight parse/print round trip") {
  auto w = Weight::parse("7/2,3/2,-1/2", GroupSpec(7));
  CHECK(w.str() == "7/2,3/2,-1/2");
  CHECK(Weight::parse(w.str(), GroupSpec(7)) == w);
  auto v = Weight::parse("3,2,-1", GroupSpec(6));
  CHECK(v.str() == "3,2,-1");
  CHECK_THROWS(Weight::parse("3,2,1/2", GroupSpec(7)));  // mixed spin classes
}
