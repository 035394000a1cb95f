#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nqf/roots.hpp"

#include <set>

using namespace nqf;

TEST_CASE("A2 root data") {
  RootSystem rs('A', 2);
  REQUIRE(rs.posCount() == 3);
  CHECK(rs.root(0).simple == std::vector<int>{1, 0});
  CHECK(rs.root(1).simple == std::vector<int>{0, 1});
  CHECK(rs.root(2).simple == std::vector<int>{1, 1});
  CHECK(rs.weylOrder() == 6);
  CHECK(rs.lengthHistogram() == std::vector<int>{1, 2, 2, 1});
  // every root has l(s_a) = 2 ht(a^vee) - 1
  CHECK(rs.quantumRoots() == std::vector<int>{0, 1, 2});
  CHECK(rs.root(2).reflLength == 3);
  CHECK(rs.root(2).corootSimple == std::vector<int>{1, 1});
}

TEST_CASE("A2 reflections and reduced words") {
  RootSystem rs('A', 2);
  int sign = 0;
  // s_{a1}(a2) = a1+a2
  CHECK(rs.reflectRoot(0, 1, sign) == 2);
  CHECK(sign == 1);
  // s_{a1}(a1) = -a1
  CHECK(rs.reflectRoot(0, 0, sign) == 0);
  CHECK(sign == -1);
  // s_{a1+a2}(a1) = -a2
  CHECK(rs.reflectRoot(2, 0, sign) == 1);
  CHECK(sign == -1);

  int w0 = rs.longest();
  CHECK(rs.length(w0) == 3);
  CHECK(rs.reducedWord(w0) == std::vector<int>{0, 1, 0});
  auto words = rs.allReducedWords(w0);
  CHECK(words == std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}});
  CHECK(rs.inverse(w0) == w0);
}

TEST_CASE("B2 root data") {
  RootSystem rs('B', 2);
  REQUIRE(rs.posCount() == 4);
  // order: e1-e2, e2, e1, e1+e2
  CHECK(rs.rootName(0) == "e1-e2");
  CHECK(rs.rootName(1) == "e2");
  CHECK(rs.rootName(2) == "e1");
  CHECK(rs.rootName(3) == "e1+e2");
  CHECK(rs.root(0).isLong);
  CHECK(!rs.root(1).isLong);
  CHECK(!rs.root(2).isLong);
  CHECK(rs.root(3).isLong);
  CHECK(rs.weylOrder() == 8);
  CHECK(rs.lengthHistogram() == std::vector<int>{1, 2, 2, 2, 1});
  // e1 is excluded: l(s_{e1}) = 3 but ht(e1^vee) = 3
  CHECK(rs.quantumRoots() == std::vector<int>{0, 1, 3});
  CHECK(rs.root(2).corootSimple == std::vector<int>{2, 1});
  CHECK(rs.root(2).reflLength == 3);
  CHECK(rs.root(3).corootSimple == std::vector<int>{1, 1});
  CHECK(rs.root(3).reflLength == 3);
}

TEST_CASE("A3 and B3 counts") {
  RootSystem a3('A', 3);
  CHECK(a3.posCount() == 6);
  CHECK(a3.weylOrder() == 24);
  CHECK(a3.lengthHistogram() == std::vector<int>{1, 3, 5, 6, 5, 3, 1});
  CHECK(a3.quantumRoots().size() == 6);

  RootSystem b3('B', 3);
  CHECK(b3.posCount() == 9);
  CHECK(b3.weylOrder() == 48);
  // e1 and e2 fail the length condition
  auto qv = b3.quantumRoots();
  std::set<int> q(qv.begin(), qv.end());
  CHECK(q.size() == 7);
  for (int r = 0; r < 9; ++r) {
    bool shortNotLast = (b3.rootName(r) == "e1" || b3.rootName(r) == "e2");
    CHECK(q.count(r) == (shortNotLast ? 0u : 1u));
  }

  RootSystem c3('C', 3);
  CHECK(c3.posCount() == 9);
  CHECK(c3.weylOrder() == 48);
  RootSystem d3('D', 3);
  CHECK(d3.posCount() == 6);
  CHECK(d3.weylOrder() == 24);
}

TEST_CASE("group structure is consistent") {
  RootSystem rs('B', 2);
  for (int w = 0; w < rs.weylOrder(); ++w) {
    CHECK(rs.mul(w, rs.inverse(w)) == rs.identity());
    auto word = rs.reducedWord(w);
    CHECK(static_cast<int>(word.size()) == rs.length(w));
    int acc = rs.identity();
    for (int i : word) acc = rs.mulSimpleRight(acc, i);
    CHECK(acc == w);
  }
  // reflection indexing round-trips
  for (int r = 0; r < rs.posCount(); ++r) {
    int t = rs.reflectionOf(r);
    CHECK(rs.mul(t, t) == rs.identity());
    CHECK(rs.length(t) == rs.root(r).reflLength);
  }
}

TEST_CASE("reduced words of a reflection have a fixed long/short multiset") {
  for (char ty : {'B', 'C'}) {
    for (int rank : {2, 3}) {
      RootSystem rs(ty, rank);
      for (int r = 0; r < rs.posCount(); ++r) {
        auto words = rs.allReducedWords(rs.reflectionOf(r));
        REQUIRE(!words.empty());
        int longs0 = -1;
        for (const auto& word : words) {
          int longs = 0;
          for (int i : word)
            if (rs.root(i).isLong) ++longs;
          if (longs0 < 0) longs0 = longs;
          CHECK(longs == longs0);
        }
      }
    }
  }
}

TEST_CASE("fundamental weights and ambient action") {
  for (char ty : {'A', 'B', 'C'}) {
    RootSystem rs(ty, ty == 'A' ? 2 : 3);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(rs.corootPairing(rs.fundamentalWeight(i), j) == (i == j ? 1 : 0));
  }
  RootSystem a2('A', 2);
  // omega reps are orthogonal to e1+e2+e3
  for (int i = 0; i < 2; ++i) {
    Rat s(0);
    for (const Rat& c : a2.fundamentalWeight(i)) s += c;
    CHECK(s == 0);
  }
  // s_{a1} swaps the first two ambient coordinates
  Vec x = {Rat(5), Rat(7), Rat(11)};
  Vec y = a2.reflect(0, x);
  CHECK(y == Vec{Rat(7), Rat(5), Rat(11)});
  // w0 action via reduced word
  Vec z = a2.act(a2.longest(), x);
  CHECK(z == Vec{Rat(11), Rat(7), Rat(5)});
}

TEST_CASE("form is Weyl invariant") {
  RootSystem rs('B', 3);
  Vec x = {Rat(1), Rat(2), Rat(3)};
  Vec y = {Rat(-1), Rat(5), Rat(2)};
  Rat f = rs.form(x, y);
  for (int w = 0; w < rs.weylOrder(); w += 7) {
    CHECK(rs.form(rs.act(w, x), rs.act(w, y)) == f);
  }
}

TEST_CASE("bad configurations are rejected") {
  CHECK_THROWS_AS(RootSystem('E', 6), EngineError);
  CHECK_THROWS_AS(RootSystem('A', 5), EngineError);
  CHECK_THROWS_AS(RootSystem('B', 1), EngineError);
  CHECK_THROWS_AS(RootSystem('D', 2), EngineError);
  CHECK_THROWS_AS(RootSystem('B', 4, 4, 100), EngineError);  // |W|=384 over bound
}
