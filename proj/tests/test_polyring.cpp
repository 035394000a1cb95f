#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nqf/polyring.hpp"

using namespace nqf;

namespace {

int elemByWord(const RootSystem& rs, const std::vector<int>& word) {
  for (int w = 0; w < rs.weylOrder(); ++w)
    if (rs.reducedWord(w) == word) return w;
  throw EngineError("no element with that reduced word");
}

CPoly randomPoly(const PolyOps& ops, Coords c, int maxDeg, std::mt19937& rng) {
  int n = ops.vars(c);
  std::uniform_int_distribution<int> expDist(0, maxDeg);
  std::uniform_int_distribution<int> coefDist(-3, 3);
  CPoly f = ops.zero(c);
  for (int t = 0; t < 5; ++t) {
    std::vector<int> e(n, 0);
    int budget = expDist(rng);
    for (int i = 0; i < n && budget > 0; ++i) {
      std::uniform_int_distribution<int> d(0, budget);
      e[i] = d(rng);
      budget -= e[i];
    }
    int co = coefDist(rng);
    if (co == 0) co = 1;
    CPoly m = ops.constant(c, Rat(co));
    m.terms.clear();
    m.terms[e] = RingElem(Rat(co));
    f += m;
  }
  return f;
}

GradedElem gradedDbar(const NicholsAlgebra& alg, int c, const GradedElem& x) {
  GradedElem out;
  for (const auto& [d, e] : x) {
    if (d == 0) continue;
    Elem t = alg.dbar(c, e);
    t.prune();
    if (!t.isZero()) out.emplace(d - 1, t);
  }
  return out;
}

GradedElem gradedScale(GradedElem x, const Rat& c) {
  for (auto it = x.begin(); it != x.end();) {
    it->second *= c;
    it->second.prune();
    it = it->second.isZero() ? x.erase(it) : std::next(it);
  }
  return x;
}

}  // namespace

TEST_CASE("polynomial arithmetic and display") {
  RootSystem rs('A', 2);
  PolyOps ops(rs);
  CPoly x1 = ops.variable(Coords::Ambient, 0);
  CPoly x2 = ops.variable(Coords::Ambient, 1);
  CHECK(((x1 + x2) * (x1 - x2)).str() == "x1^2-x2^2");
  CHECK(ops.zero(Coords::Ambient).str() == "0");
  CHECK(ops.constant(Coords::Weight, Rat(-3, 2)).str() == "-3/2");
  CHECK(ops.variable(Coords::Weight, 0).str() == "w1");
  CPoly p = x1 * x1 * x2;
  CHECK(p.str() == "x1^2*x2");
  CHECK(p.degree() == 3);
  int d = 0;
  CHECK(p.isHomogeneous(&d));
  CHECK(d == 3);
  CHECK_THROWS_AS(x1 + ops.variable(Coords::Weight, 0), InvariantViolation);
}

TEST_CASE("Weyl action on polynomials") {
  RootSystem rs('A', 2);
  PolyOps ops(rs);
  int s1 = rs.simpleRefl(0);

  CPoly x1 = ops.variable(Coords::Ambient, 0);
  CHECK(ops.wAct(s1, x1) == ops.variable(Coords::Ambient, 1));
  CHECK(ops.wAct(s1, ops.constant(Coords::Ambient, Rat(1))) ==
        ops.constant(Coords::Ambient, Rat(1)));

  // s_a(w_a) = w_a - a
  CPoly w1 = ops.variable(Coords::Weight, 0);
  CHECK(ops.wAct(s1, w1) == w1 - ops.rootForm(Coords::Weight, 0));
  CHECK(ops.wAct(s1, w1).str() == "-w1+w2");

  for (char t : {'A', 'B'}) {
    RootSystem r2(t, 2);
    PolyOps o2(r2);
    std::mt19937 rng(7);
    for (Coords c : {Coords::Ambient, Coords::Weight}) {
      CPoly f = randomPoly(o2, c, 3, rng);
      for (int u = 0; u < r2.weylOrder(); ++u)
        for (int v = 0; v < r2.weylOrder(); ++v)
          CHECK(o2.wAct(u, o2.wAct(v, f)) == o2.wAct(r2.mul(u, v), f));
    }
  }
}

TEST_CASE("Demazure operators") {
  RootSystem rs('A', 2);
  PolyOps ops(rs);
  CPoly w1 = ops.variable(Coords::Weight, 0);
  CPoly w2 = ops.variable(Coords::Weight, 1);
  CHECK(ops.demazure(0, w1) == ops.constant(Coords::Weight, Rat(1)));
  CHECK(ops.demazure(0, w2).isZero());

  CPoly x1 = ops.variable(Coords::Ambient, 0);
  CPoly x2 = ops.variable(Coords::Ambient, 1);
  CHECK(ops.demazure(0, x1 * x2).isZero());
  CHECK(ops.demazure(0, x1 * x1 * x2) == x1 * x2);

  // reflection form on the highest root
  int theta = rs.posCount() - 1;
  CHECK(ops.demazure(theta, ops.rootForm(Coords::Weight, theta)) ==
        ops.constant(Coords::Weight, Rat(2)));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    CPoly f = randomPoly(ops, Coords::Ambient, 3, rng);
    for (int a = 0; a < 2; ++a) CHECK(ops.demazure(a, ops.demazure(a, f)).isZero());
    CHECK(ops.demazureWord({0, 1, 0}, f) == ops.demazureWord({1, 0, 1}, f));
  }

  RootSystem b2('B', 2);
  PolyOps ob(b2);
  std::mt19937 rng2(13);
  for (int trial = 0; trial < 20; ++trial) {
    CPoly f = randomPoly(ob, Coords::Weight, 4, rng2);
    CHECK(ob.demazureWord({0, 1, 0, 1}, f) == ob.demazureWord({1, 0, 1, 0}, f));
  }
}

TEST_CASE("BGG classes") {
  RootSystem rs('A', 2);
  PolyOps ops(rs);
  int e = rs.identity(), w0 = rs.longest();

  CHECK(ops.bggClass(e, Coords::Weight) == ops.constant(Coords::Weight, Rat(1)));
  CHECK(ops.bggClass(w0, Coords::Weight) == ops.bggTop(Coords::Weight));
  CHECK(ops.demazureW(w0, ops.bggTop(Coords::Weight)) ==
        ops.constant(Coords::Weight, Rat(1)));

  CPoly six = ops.bggTop(Coords::Weight);
  six *= Rat(6);
  CHECK(six.str() == "-2*w1^3+3*w1^2*w2+3*w1*w2^2-2*w2^3");

  // ambient and weight computations agree through restriction
  for (int w = 0; w < rs.weylOrder(); ++w)
    CHECK(ops.restrictToWeights(ops.bggClass(w, Coords::Ambient)) ==
          ops.bggClass(w, Coords::Weight));

  // per length, the classes are linearly independent
  for (char t : {'A', 'B'}) {
    RootSystem r2(t, 2);
    PolyOps o2(r2);
    auto hist = r2.lengthHistogram();
    for (int len = 0; len < static_cast<int>(hist.size()); ++len) {
      std::vector<CPoly> classes;
      for (int w = 0; w < r2.weylOrder(); ++w)
        if (static_cast<int>(r2.reducedWord(w).size()) == len)
          classes.push_back(o2.bggClass(w, Coords::Weight));
      std::map<std::vector<int>, int> cols;
      for (const auto& f : classes) {
        int d = 0;
        CHECK(f.isHomogeneous(&d));
        CHECK(d == len);
        for (const auto& [ex, co] : f.terms)
          cols.emplace(ex, static_cast<int>(cols.size()));
      }
      QMat m(static_cast<int>(classes.size()), static_cast<int>(cols.size()));
      for (size_t i = 0; i < classes.size(); ++i)
        for (const auto& [ex, co] : classes[i].terms)
          m.at(static_cast<int>(i), cols.at(ex)) = co.constantPart();
      CHECK(qmatRank(m) == static_cast<int>(classes.size()));
      CHECK(static_cast<int>(classes.size()) == hist[len]);
    }
  }
}

TEST_CASE("Schubert table for the rank 2 symmetric group") {
  RootSystem rs('A', 2);
  PolyOps ops(rs);
  auto schub = [&](const std::vector<int>& word) {
    return ops.schubertA(elemByWord(rs, word)).str();
  };
  CHECK(schub({}) == "1");
  CHECK(schub({0}) == "x1");
  CHECK(schub({1}) == "x1+x2");
  CHECK(schub({0, 1}) == "x1*x2");
  CHECK(schub({1, 0}) == "x1^2");
  CHECK(schub({0, 1, 0}) == "x1^2*x2");

  RootSystem b2('B', 2);
  PolyOps ob(b2);
  CHECK_THROWS_AS(ob.schubertA(0), EngineError);
}

TEST_CASE("restriction to weight coordinates") {
  RootSystem rs('A', 2);
  PolyOps ops(rs);
  CPoly x1 = ops.variable(Coords::Ambient, 0);
  CPoly x2 = ops.variable(Coords::Ambient, 1);
  CPoly x3 = ops.variable(Coords::Ambient, 2);
  CHECK(ops.restrictToWeights(x1).str() == "w1");
  CHECK(ops.restrictToWeights(x2).str() == "-w1+w2");
  CHECK(ops.restrictToWeights(x1 + x2 + x3).isZero());
}

TEST_CASE("mu on linear forms and invariants") {
  RootSystem rs('A', 2);
  NicholsAlgebra alg(rs);
  alg.build();
  PolyOps ops(rs);

  CPoly w1 = ops.variable(Coords::Weight, 0);
  Elem img = ops.muLinear(alg, w1);
  Elem want = alg.letterElem(0);
  want += alg.letterElem(2);
  CHECK(img == want);

  GradedElem one = ops.mu(alg, ops.constant(Coords::Weight, Rat(1)));
  CHECK(one.size() == 1);
  CHECK(one.at(0) == alg.vacuum());

  // elementary symmetric polynomials die
  CPoly x1 = ops.variable(Coords::Ambient, 0);
  CPoly x2 = ops.variable(Coords::Ambient, 1);
  CPoly x3 = ops.variable(Coords::Ambient, 2);
  CPoly e2 = x1 * x2 + x1 * x3 + x2 * x3;
  CPoly e3 = x1 * x2 * x3;
  CHECK(ops.mu(alg, ops.restrictToWeights(e2)).empty());
  CHECK(ops.mu(alg, ops.restrictToWeights(e3)).empty());

  // the image of mu is commutative
  CPoly w2 = ops.variable(Coords::Weight, 1);
  Elem a = ops.muLinear(alg, w1), b = ops.muLinear(alg, w2);
  CHECK(alg.mul(a, b) == alg.mul(b, a));
}

TEST_CASE("derivations intertwine mu with Demazure operators") {
  struct Inst {
    char type;
    int rank;
    CoeffConfig cfg;
  };
  std::vector<Inst> insts = {{'A', 2, {}}, {'B', 2, {Rat(2), Rat(3)}}};
  for (const auto& inst : insts) {
    RootSystem rs(inst.type, inst.rank);
    NicholsAlgebra alg(rs);
    alg.build();
    PolyOps ops(rs);
    std::mt19937 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
      CPoly f = randomPoly(ops, Coords::Weight, 4, rng);
      GradedElem mf = ops.mu(alg, f, inst.cfg);
      for (int a = 0; a < rs.rank(); ++a) {
        GradedElem lhs = gradedDbar(alg, a, mf);
        GradedElem rhs = gradedScale(ops.mu(alg, ops.demazure(a, f), inst.cfg),
                                     inst.cfg.at(rs, a));
        CHECK(lhs == rhs);
      }
    }
  }
}
