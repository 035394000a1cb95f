#include "nqf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nqf/linalg.hpp"
#include "nqf/words.hpp"

namespace nqf {

namespace {

std::string jstr(const std::string& s) {
  std::ostringstream os;
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
  return os.str();
}

std::string jints(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// 1-based reduced word of w, for payloads and table keys
std::vector<int> wordKey(const RootSystem& rs, int w) {
  auto rw = rs.reducedWord(w);
  for (int& a : rw) ++a;
  return rw;
}

struct Outcome {
  std::string status = "pass";
  std::string note, seed, counterexample;
};

Outcome failure(const std::string& payload) {
  Outcome o;
  o.status = "fail";
  o.counterexample = payload;
  return o;
}

int boundedCap(const NicholsAlgebra& alg, int cap) { return std::min(cap, alg.topDegree()); }

bool opZero(const NicholsAlgebra& alg, const GradedOp& op) {
  return op.isZeroUpTo(boundedCap(alg, op.srcCap));
}

bool opsAgree(const NicholsAlgebra& alg, const GradedOp& a, const GradedOp& b) {
  return opEqualUpTo(a, b, boundedCap(alg, opJointCap(a, b)));
}

bool elemEq(const Elem& a, const Elem& b) {
  std::set<int> keys;
  for (const auto& [cls, v] : a.coords) keys.insert(cls);
  for (const auto& [cls, v] : b.coords) keys.insert(cls);
  for (int cls : keys) {
    auto ia = a.coords.find(cls);
    auto ib = b.coords.find(cls);
    size_t n = std::max(ia == a.coords.end() ? 0 : ia->second.size(),
                        ib == b.coords.end() ? 0 : ib->second.size());
    for (size_t i = 0; i < n; ++i) {
      Rat xa = ia != a.coords.end() && i < ia->second.size() ? ia->second[i] : Rat(0);
      Rat xb = ib != b.coords.end() && i < ib->second.size() ? ib->second[i] : Rat(0);
      if (xa != xb) return false;
    }
  }
  return true;
}

Elem elemScaled(Elem e, const Rat& c) {
  for (auto& [cls, v] : e.coords)
    for (auto& x : v) x *= c;
  return e;
}

uint64_t rnd(std::mt19937_64& g, uint64_t n) { return g() % n; }

CPoly randomWeightPoly(std::mt19937_64& g, const PolyOps& po, int maxDeg) {
  int n = po.vars(Coords::Weight);
  CPoly f = po.zero(Coords::Weight);
  int terms = 3 + static_cast<int>(rnd(g, 3));
  for (int t = 0; t < terms; ++t) {
    int d = static_cast<int>(rnd(g, static_cast<uint64_t>(maxDeg) + 1));
    std::vector<int> e(n, 0);
    for (int k = 0; k < d; ++k) ++e[rnd(g, n)];
    long c = static_cast<long>(rnd(g, 7)) - 3;
    if (c == 0) c = 1;
    CPoly mono = po.constant(Coords::Weight, Rat(c));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) mono = mono * po.variable(Coords::Weight, i);
    f += mono;
  }
  return f;
}

// ---- checks ----

Outcome checkHilbert(Engine& eng) {
  const auto& alg = eng.algebra();
  const auto& rs = eng.rootSystem();
  auto dims = alg.hilbert();
  int top = alg.topDegree();
  if (dims.empty() || dims[0] != 1)
    return failure("{\"degree\":0,\"algebra\":" + std::to_string(dims.empty() ? -1 : dims[0]) +
                   ",\"expected\":1}");
  if (top >= 1 && dims[1] != rs.posCount())
    return failure("{\"degree\":1,\"algebra\":" + std::to_string(dims[1]) +
                   ",\"expected\":" + std::to_string(rs.posCount()) + "}");
  if (alg.complete()) {
    for (int k = 0; k <= top; ++k)
      if (dims[k] != dims[top - k])
        return failure("{\"symmetry\":" + std::to_string(k) + ",\"low\":" + std::to_string(dims[k]) +
                       ",\"high\":" + std::to_string(dims[top - k]) + "}");
  }
  Outcome o;
  WordOps wo(rs);
  long nwords = 1;
  for (int k = 0; k <= top; ++k) {
    if (k > 0) nwords *= rs.posCount();
    if (nwords > 200) {
      o.note = "word oracle through degree " + std::to_string(k - 1);
      break;
    }
    auto words = wo.allWords(k);
    int n = static_cast<int>(words.size());
    QMat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = wo.pair(words[i], words[j]);
    int rank = qmatRank(g);
    if (rank != dims[k])
      return failure("{\"degree\":" + std::to_string(k) + ",\"algebra\":" + std::to_string(dims[k]) +
                     ",\"oracle\":" + std::to_string(rank) + "}");
  }
  return o;
}

Outcome checkDbar(Engine& eng) {
  const auto& alg = eng.algebra();
  const auto& rs = eng.rootSystem();
  auto& qo = eng.ops();
  int N = rs.posCount();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int u = rs.reflectionOf(a), v = rs.reflectionOf(b);
      GradedOp comp = opCompose(qo.dbarReflOp(a), qo.dbarReflOp(b));
      int uv = rs.mul(u, v);
      if (rs.length(uv) == rs.length(u) + rs.length(v)) {
        if (!opsAgree(alg, comp, qo.dbarWordOp(uv)))
          return failure("{\"rule\":\"compose\",\"pair\":[" + std::to_string(a) + "," +
                         std::to_string(b) + "]}");
      } else if (!opZero(alg, comp)) {
        return failure("{\"rule\":\"vanish\",\"pair\":[" + std::to_string(a) + "," +
                       std::to_string(b) + "]}");
      }
    }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int sgn = 1;
      int b2 = rs.reflectRoot(a, b, sgn);
      GradedOp diff = opCompose(qo.dbarReflOp(a), qo.lmulOp(b));
      diff += opCompose(qo.lmulOp(b2), qo.dbarReflOp(a)).scaled(RingElem(Rat(-sgn)));
      int w = rs.mul(rs.reflectionOf(a), rs.reflectionOf(b));
      if (rs.length(w) == rs.length(rs.reflectionOf(a)) - 1) {
        if (!opsAgree(alg, diff, qo.dbarWordOp(w)))
          return failure("{\"rule\":\"twist\",\"pair\":[" + std::to_string(a) + "," +
                         std::to_string(b) + "]}");
      } else if (!opZero(alg, diff)) {
        return failure("{\"rule\":\"twist-vanish\",\"pair\":[" + std::to_string(a) + "," +
                       std::to_string(b) + "]}");
      }
    }
  return {};
}

Outcome checkLemma2(Engine& eng) {
  const auto& alg = eng.algebra();
  const auto& rs = eng.rootSystem();
  auto& qo = eng.ops();
  const PolyOps& po = qo.polyOps();
  const CoeffConfig& cc = qo.coeffs();
  Outcome o;
  o.seed = std::to_string(eng.config().seed);
  int maxDeg = std::min(4, alg.topDegree());
  if (maxDeg < 4) o.note = "sample degree <= " + std::to_string(maxDeg);
  std::mt19937_64 g(eng.config().seed);
  for (int s = 0; s < 100; ++s) {
    CPoly f = randomWeightPoly(g, po, maxDeg);
    GradedElem gf = po.mu(alg, f, cc);
    for (int a = 0; a < rs.rank(); ++a) {
      GradedElem gd = po.mu(alg, po.demazure(a, f), cc);
      int degf = f.degree();
      for (int d = 1; d <= degf; ++d) {
        auto fi = gf.find(d);
        Elem lhs = alg.dbar(a, fi == gf.end() ? alg.zeroElem(d) : fi->second);
        auto di = gd.find(d - 1);
        Elem rhs = di == gd.end() ? alg.zeroElem(d - 1)
                                  : elemScaled(di->second, cc.at(rs, a));
        if (!elemEq(lhs, rhs)) {
          Outcome bad = failure("{\"sample\":" + std::to_string(s) + ",\"alpha\":" +
                                std::to_string(a) + ",\"f\":" + jstr(f.str()) + "}");
          bad.seed = o.seed;
          return bad;
        }
      }
    }
  }
  return o;
}

Outcome checkProp1(Engine& eng) {
  const auto& alg = eng.algebra();
  auto& qo = eng.ops();
  int n = eng.rootSystem().rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GradedOp ab = opCompose(qo.eta(i), qo.eta(j));
      GradedOp ba = opCompose(qo.eta(j), qo.eta(i));
      if (!opsAgree(alg, ab, ba))
        return failure("{\"pair\":[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]}");
    }
  return {};
}

Outcome checkProp1Sets(Engine& eng) {
  auto d = eng.ops().prop1Sets();
  if (d.Aprime.size() != d.Bprime.size())
    return failure("{\"condition\":\"sizes\",\"subtracting\":" + std::to_string(d.Aprime.size()) +
                   ",\"adding\":" + std::to_string(d.Bprime.size()) + "}");
  if (!d.bijective) {
    for (size_t i = 0; i < d.match.size(); ++i)
      if (d.match[i] < 0)
        return failure("{\"condition\":\"bijection\",\"pair\":[" + std::to_string(d.Aprime[i].first) +
                       "," + std::to_string(d.Aprime[i].second) + "]}");
    return failure("{\"condition\":\"bijection\"}");
  }
  if (!d.symmetricOk) return failure("{\"condition\":\"symmetry\"}");
  return {};
}

Outcome checkProp2(Engine& eng) {
  const auto& alg = eng.algebra();
  const auto& cfg = eng.config();
  auto& qo = eng.ops();
  const PolyOps& po = qo.polyOps();
  if (cfg.rank >= 3 && cfg.type != 'A') {
    Outcome o;
    o.status = "skipped";
    o.note = "kernel search runs at rank <= 2 outside type A";
    return o;
  }
  auto degs = qo.fundamentalDegrees();
  if (!alg.complete() && degs.back() > alg.topDegree()) {
    Outcome o;
    o.status = "skipped";
    o.note = "fundamental degrees exceed the truncation";
    return o;
  }
  auto invs = qo.quantumInvariants();
  for (const auto& inv : invs) {
    if (inv.quantum.classicalLimit() != inv.classical)
      return failure("{\"degree\":" + std::to_string(inv.degree) +
                     ",\"which\":\"classical-limit\",\"polynomial\":" + jstr(inv.quantum.str()) + "}");
    GradedOp op = qo.muTildePoly(inv.quantum);
    if (!opZero(alg, op))
      return failure("{\"degree\":" + std::to_string(inv.degree) +
                     ",\"which\":\"annihilation\",\"polynomial\":" + jstr(inv.quantum.str()) + "}");
  }
  if (cfg.type == 'A') {
    auto gks = qo.gkPolynomials();
    for (size_t k = 0; k < gks.size(); ++k) {
      CPoly restr = po.restrictToWeights(gks[k]);
      if (restr.classicalLimit() != invs[k].classical)
        return failure("{\"degree\":" + std::to_string(invs[k].degree) +
                       ",\"which\":\"determinant-limit\",\"polynomial\":" + jstr(restr.str()) + "}");
      if (cfg.rank <= 2) {
        if (restr != invs[k].quantum)
          return failure("{\"degree\":" + std::to_string(invs[k].degree) +
                         ",\"which\":\"determinant-exact\",\"searched\":" +
                         jstr(invs[k].quantum.str()) + ",\"determinant\":" + jstr(restr.str()) + "}");
      } else {
        QVec v = qo.muTildeVac(restr);
        qvecPrune(v);
        if (!v.empty())
          return failure("{\"degree\":" + std::to_string(invs[k].degree) +
                         ",\"which\":\"determinant-kernel\",\"polynomial\":" + jstr(restr.str()) + "}");
      }
    }
  }
  return {};
}

Outcome checkProp3(Engine& eng) {
  const auto& alg = eng.algebra();
  const auto& rs = eng.rootSystem();
  auto& qo = eng.ops();
  const CoeffConfig& cc = qo.coeffs();
  for (int r = 0; r < rs.posCount(); ++r) {
    const GradedOp& g = qo.quantizeRoot(r);
    GradedOp sq = opCompose(g, g);
    if (r < rs.rank()) {
      RingElem expect = qo.corootQ(r) * RingElem(cc.at(rs, r) * qo.dFactor(r));
      if (!opsAgree(alg, sq, qo.identityOp(expect)))
        return failure("{\"root\":" + std::to_string(r) + ",\"which\":\"square\"}");
    } else if (!opZero(alg, sq)) {
      return failure("{\"root\":" + std::to_string(r) + ",\"which\":\"vanish\"}");
    }
  }
  return {};
}

Outcome checkCorollary(Engine& eng) {
  const auto& alg = eng.algebra();
  const auto& rs = eng.rootSystem();
  const auto& cfg = eng.config();
  auto& qo = eng.ops();
  const PolyOps& po = qo.polyOps();
  const CoeffConfig& cc = qo.coeffs();
  if (cfg.rank >= 3 && cfg.type != 'A') {
    Outcome o;
    o.status = "skipped";
    o.note = "class table runs at rank <= 2 outside type A";
    return o;
  }
  std::vector<int> ws(rs.weylOrder());
  for (size_t i = 0; i < ws.size(); ++i) ws[i] = static_cast<int>(i);
  std::sort(ws.begin(), ws.end(), [&](int a, int b) {
    return std::make_pair(rs.length(a), a) < std::make_pair(rs.length(b), b);
  });
  Outcome o;
  bool partial = false;
  for (int w : ws) {
    if (rs.length(w) > alg.topDegree()) {
      partial = true;
      continue;
    }
    CPoly f = cfg.type == 'A' ? po.restrictToWeights(po.schubertA(w)) : po.bggClass(w, Coords::Weight);
    CPoly fq = qo.quantizePoly(f);
    QVec lhs = qo.muTildeVac(fq);
    QVec rhs = qvecFromGraded(po.mu(alg, f, cc));
    qvecPrune(lhs);
    qvecPrune(rhs);
    if (lhs != rhs)
      return failure("{\"w\":" + jints(wordKey(rs, w)) + ",\"class\":" + jstr(f.str()) +
                     ",\"quantized\":" + jstr(fq.str()) + "}");
  }
  if (partial) o.note = "elements of length <= " + std::to_string(alg.topDegree()) + " only";
  return o;
}

Outcome checkTheorem1(Engine& eng) {
  const auto& alg = eng.algebra();
  const auto& rs = eng.rootSystem();
  const auto& cfg = eng.config();
  if (cfg.rank >= 3 && cfg.type != 'A') {
    Outcome o;
    o.status = "skipped";
    o.note = "rank filtration runs at rank <= 2 outside type A";
    return o;
  }
  int lw0 = rs.length(rs.longest());
  if (lw0 > alg.topDegree()) {
    Outcome o;
    o.status = "skipped";
    o.note = "longest element exceeds the truncation";
    return o;
  }
  auto ranks = eng.ops().gradedRanks(lw0);
  auto hist = rs.lengthHistogram();
  if (ranks != hist)
    return failure("{\"ranks\":" + jints(ranks) + ",\"histogram\":" + jints(hist) + "}");
  return {};
}

// generator handle for the type-B presentation, sign folded in
struct BnGen {
  int root;
  int sign;
};

class BnTable {
 public:
  BnTable(const RootSystem& rs, QuantumOps& qo) : rs_(&rs), qo_(&qo) {
    for (int r = 0; r < rs.posCount(); ++r) byVec_[rs.root(r).vec] = r;
  }

  // eps_i - eps_j, 1-based; [j,i] carries the sign of -[i,j]
  BnGen minus(int i, int j) const {
    int a = std::min(i, j), b = std::max(i, j);
    Vec v(rs_->ambientDim(), Rat(0));
    v[a - 1] = 1;
    v[b - 1] = -1;
    return {byVec_.at(v), i < j ? 1 : -1};
  }

  BnGen plus(int i, int j) const {
    int a = std::min(i, j), b = std::max(i, j);
    Vec v(rs_->ambientDim(), Rat(0));
    v[a - 1] = 1;
    v[b - 1] = 1;
    return {byVec_.at(v), 1};
  }

  BnGen single(int i) const {
    Vec v(rs_->ambientDim(), Rat(0));
    v[i - 1] = 1;
    return {byVec_.at(v), 1};
  }

  GradedOp product(const std::vector<BnGen>& gs) const {
    GradedOp acc = qo_->quantizeRoot(gs.back().root);
    int sgn = gs.back().sign;
    for (int k = static_cast<int>(gs.size()) - 2; k >= 0; --k) {
      acc = opCompose(qo_->quantizeRoot(gs[k].root), acc);
      sgn *= gs[k].sign;
    }
    return sgn == 1 ? acc : acc.scaled(RingElem(Rat(sgn)));
  }

 private:
  const RootSystem* rs_;
  QuantumOps* qo_;
  std::map<Vec, int> byVec_;
};

Outcome checkBnRelations(Engine& eng) {
  const auto& alg = eng.algebra();
  const auto& rs = eng.rootSystem();
  auto& qo = eng.ops();
  int n = rs.rank();
  BnTable tb(rs, qo);

  // the coroot monomials must display through the epsilon map exactly
  std::vector<std::vector<int>> colToEps(n);
  for (int i = 0; i < n; ++i)
    for (const Rat& x : rs.root(i).coroot)
      colToEps[i].push_back(static_cast<int>(numerator(x)));
  for (int r : rs.quantumRoots()) {
    const Vec& v = rs.root(r).vec;
    std::vector<int> pos, neg;
    for (int j = 0; j < rs.ambientDim(); ++j) {
      if (v[j] == 1) pos.push_back(j + 1);
      if (v[j] == -1) neg.push_back(j + 1);
    }
    std::string expect;
    if (pos.size() == 1 && neg.size() == 1)
      expect = "q" + std::to_string(pos[0]) + "*q" + std::to_string(neg[0]) + "^-1";
    else if (pos.size() == 2)
      expect = "q" + std::to_string(pos[0]) + "*q" + std::to_string(pos[1]);
    else
      expect = "q" + std::to_string(pos[0]) + "^2";
    std::string got = qo.corootQ(r).strMapped(colToEps);
    if (got != expect)
      return failure("{\"which\":\"display\",\"root\":" + std::to_string(r) + ",\"got\":" +
                     jstr(got) + ",\"expected\":" + jstr(expect) + "}");
  }

  auto zero = [&](const GradedOp& op) { return opZero(alg, op); };
  auto fails = [&](const std::string& rel, std::initializer_list<int> idx) {
    std::vector<int> v(idx);
    return failure("{\"relation\":" + jstr(rel) + ",\"indices\":" + jints(v) + "}");
  };

  // squares
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      GradedOp sq = tb.product({tb.minus(i, j), tb.minus(i, j)});
      if (j == i + 1) {
        RingElem q = qo.corootQ(tb.minus(i, j).root);
        if (!opsAgree(alg, sq, qo.identityOp(q))) return fails("square-adjacent", {i, j});
      } else if (!zero(sq)) {
        return fails("square-distant", {i, j});
      }
      if (!zero(tb.product({tb.plus(i, j), tb.plus(i, j)}))) return fails("square-bar", {i, j});
    }
  for (int i = 1; i <= n; ++i) {
    GradedOp sq = tb.product({tb.single(i), tb.single(i)});
    if (i == n) {
      RingElem q = qo.corootQ(tb.single(n).root);
      if (!opsAgree(alg, sq, qo.identityOp(q))) return fails("square-last", {i});
    } else if (!zero(sq)) {
      return fails("square-short", {i});
    }
  }

  auto commutes = [&](const BnGen& x, const BnGen& y) {
    GradedOp d = tb.product({x, y});
    GradedOp e = tb.product({y, x});
    d += e.scaled(RingElem(Rat(-1)));
    return zero(d);
  };

  // disjoint supports
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == i || k == j || l == i || l == j) continue;
          if (!commutes(tb.minus(i, j), tb.minus(k, l))) return fails("disjoint", {i, j, k, l});
          if (!commutes(tb.minus(i, j), tb.plus(k, l))) return fails("disjoint-bar", {i, j, k, l});
          if (!commutes(tb.plus(i, j), tb.plus(k, l))) return fails("disjoint-bars", {i, j, k, l});
        }

  // commuting families
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!commutes(tb.single(i), tb.single(j))) return fails("singles", {i, j});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!commutes(tb.minus(i, j), tb.plus(i, j))) return fails("pair-bar", {i, j});
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        if (!commutes(tb.minus(i, j), tb.single(k))) return fails("pair-single", {i, j, k});
        if (!commutes(tb.plus(i, j), tb.single(k))) return fails("bar-single", {i, j, k});
      }
    }

  // three-index cycles
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || i == k || j == k) continue;
        GradedOp s = tb.product({tb.minus(i, j), tb.minus(j, k)});
        s += tb.product({tb.minus(j, k), tb.minus(k, i)});
        s += tb.product({tb.minus(k, i), tb.minus(i, j)});
        if (!zero(s)) return fails("cycle", {i, j, k});
        GradedOp t = tb.product({tb.plus(i, k), tb.minus(i, j)});
        t += tb.product({tb.minus(j, i), tb.plus(j, k)});
        t += tb.product({tb.plus(k, j), tb.plus(i, k)});
        if (!zero(t)) return fails("cycle-bar", {i, j, k});
      }

  // mixed four-term sums
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      GradedOp s = tb.product({tb.minus(i, j), tb.single(i)});
      s += tb.product({tb.single(j), tb.minus(j, i)});
      s += tb.product({tb.single(i), tb.plus(i, j)});
      s += tb.product({tb.plus(i, j), tb.single(j)});
      if (!zero(s)) return fails("mixed", {i, j});
    }

  // quartic sums
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      GradedOp s = tb.product({tb.minus(i, j), tb.single(i), tb.plus(i, j), tb.single(i)});
      s += tb.product({tb.plus(i, j), tb.single(i), tb.minus(i, j), tb.single(i)});
      s += tb.product({tb.single(i), tb.minus(i, j), tb.single(i), tb.plus(i, j)});
      s += tb.product({tb.single(i), tb.plus(i, j), tb.single(i), tb.minus(i, j)});
      if (!zero(s)) return fails("quartic", {i, j});
    }

  return {};
}

using CheckFn = Outcome (*)(Engine&);

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r = {
      {"bn-relations", checkBnRelations},
      {"corollary", checkCorollary},
      {"dbar", checkDbar},
      {"hilbert", checkHilbert},
      {"lemma2", checkLemma2},
      {"prop1", checkProp1},
      {"prop1-sets", checkProp1Sets},
      {"prop2", checkProp2},
      {"prop3", checkProp3},
      {"theorem1", checkTheorem1},
  };
  return r;
}

}  // namespace

std::string EngineConfig::instance() const { return std::string(1, type) + std::to_string(rank); }

std::vector<std::string> suiteChecks(char type) {
  std::vector<std::string> v = {"corollary", "dbar",  "hilbert", "lemma2",  "prop1",
                                "prop1-sets", "prop2", "prop3",   "theorem1"};
  if (type == 'B') v.insert(v.begin(), "bn-relations");
  return v;
}

Engine::Engine(const EngineConfig& cfg)
    : cfg_(cfg),
      rs_(cfg.type, cfg.rank),
      alg_(rs_, [&] {
        NicholsAlgebra::Options o;
        o.maxDegree = cfg.maxDegree;
        return o;
      }()),
      qo_(alg_, CoeffConfig{cfg.cLong, cfg.cShort}) {
  bool loaded = false;
  const std::string path = cachePath();
  if (!path.empty()) {
    try {
      loaded = alg_.loadCacheFile(path);
    } catch (const std::exception& e) {
      std::cerr << "nqf: warning: cache " << path << " is unreadable (" << e.what()
                << "); rebuilding\n";
      cacheRebuilt_ = true;
    }
  }
  const int before = alg_.topDegree();
  alg_.build();
  if (!path.empty() && (!loaded || alg_.topDegree() != before)) {
    std::filesystem::create_directories(cfg_.cacheDir);
    alg_.saveCache(path);
  }
}

std::string Engine::cachePath() const {
  if (cfg_.cacheDir.empty()) return "";
  return cfg_.cacheDir + "/" + cfg_.instance() + ".cache.json";
}

std::vector<CheckReport> runSuite(Engine& eng, const std::vector<std::string>& checks) {
  std::vector<std::string> names = checks;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  for (const auto& name : names) {
    if (!registry().count(name)) throw EngineError("unknown check: " + name);
    if (name == "bn-relations" && eng.config().type != 'B')
      throw EngineError("check bn-relations requires type B");
  }
  std::vector<CheckReport> out;
  for (const auto& name : names) {
    CheckReport r;
    r.check = name;
    r.instance = eng.config().instance();
    r.truncation = eng.algebra().topDegree();
    r.complete = eng.algebra().complete();
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = registry().at(name)(eng);
    } catch (const std::exception& e) {
      o = failure("{\"error\":" + jstr(e.what()) + "}");
    }
    auto t1 = std::chrono::steady_clock::now();
    r.status = o.status;
    r.note = o.note;
    r.seed = o.seed;
    r.counterexample = o.counterexample;
    r.wallMs = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> runSuite(const EngineConfig& cfg, const std::vector<std::string>& checks) {
  Engine eng(cfg);
  return runSuite(eng, checks);
}

bool anyFailed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == "fail") return true;
  return false;
}

std::string renderReport(const CheckReport& r, const std::string& format, bool timings) {
  std::ostringstream os;
  if (format == "text") {
    os << "check=" << r.check << " instance=" << r.instance << " truncation=" << r.truncation
       << " complete=" << (r.complete ? "yes" : "no") << " status=" << r.status;
    if (!r.seed.empty()) os << " seed=" << r.seed;
    if (!r.note.empty()) os << " note=" << jstr(r.note);
    if (!r.counterexample.empty()) os << " counterexample=" << r.counterexample;
    if (timings) os << " wall_ms=" << r.wallMs;
    return os.str();
  }
  os << "{\"check\":" << jstr(r.check) << ",\"instance\":" << jstr(r.instance)
     << ",\"truncation\":" << r.truncation << ",\"complete\":" << (r.complete ? "true" : "false")
     << ",\"status\":" << jstr(r.status);
  if (!r.seed.empty()) os << ",\"seed\":" << r.seed;
  if (!r.note.empty()) os << ",\"note\":" << jstr(r.note);
  if (!r.counterexample.empty()) os << ",\"counterexample\":" << r.counterexample;
  if (timings) os << ",\"wall_ms\":" << r.wallMs;
  os << "}";
  return os.str();
}

namespace {

std::string tableHeaderJson(const Engine& eng, const std::string& what) {
  std::ostringstream os;
  os << "{\"table\":" << jstr(what) << ",\"instance\":" << jstr(eng.config().instance())
     << ",\"truncation\":" << eng.algebra().topDegree()
     << ",\"complete\":" << (eng.algebra().complete() ? "true" : "false");
  return os.str();
}

std::string dumpHilbert(Engine& eng, const std::string& format) {
  auto dims = eng.algebra().hilbert();
  long total = 0;
  for (int d : dims) total += d;
  if (format == "text") {
    std::ostringstream os;
    os << "hilbert " << eng.config().instance() << (eng.algebra().complete() ? " (complete)" : " (truncated)")
       << "\n";
    for (size_t k = 0; k < dims.size(); ++k) os << "deg " << k << ": " << dims[k] << "\n";
    os << "total: " << total << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << tableHeaderJson(eng, "hilbert") << ",\"dims\":" << jints(dims) << ",\"total\":" << total
     << "}\n";
  return os.str();
}

std::string dumpBasis(Engine& eng, const std::string& format) {
  const auto& alg = eng.algebra();
  std::ostringstream os;
  if (format == "text") {
    os << "basis " << eng.config().instance() << "\n";
    for (int d = 0; d <= alg.topDegree(); ++d) {
      os << "deg " << d << ":";
      for (int cls : alg.classesAt(d))
        for (const auto& w : alg.basisWords(d, cls)) os << " " << wordStr(w);
      os << "\n";
    }
    return os.str();
  }
  os << tableHeaderJson(eng, "basis") << ",\"levels\":[";
  for (int d = 0; d <= alg.topDegree(); ++d) {
    os << (d ? "," : "") << "{\"degree\":" << d << ",\"classes\":[";
    bool firstCls = true;
    for (int cls : alg.classesAt(d)) {
      os << (firstCls ? "" : ",") << "{\"cls\":" << cls << ",\"words\":[";
      firstCls = false;
      const auto& ws = alg.basisWords(d, cls);
      for (size_t i = 0; i < ws.size(); ++i) os << (i ? "," : "") << jstr(wordStr(ws[i]));
      os << "]}";
    }
    os << "]}";
  }
  os << "]}\n";
  return os.str();
}

std::string dumpSchubert(Engine& eng, const std::vector<int>& word, const std::string& format) {
  const auto& rs = eng.rootSystem();
  auto& qo = eng.ops();
  const PolyOps& po = qo.polyOps();
  std::vector<int> ws;
  if (word.empty()) {
    ws.resize(rs.weylOrder());
    for (size_t i = 0; i < ws.size(); ++i) ws[i] = static_cast<int>(i);
    std::sort(ws.begin(), ws.end(), [&](int a, int b) {
      return std::make_pair(rs.length(a), a) < std::make_pair(rs.length(b), b);
    });
  } else {
    int w = rs.identity();
    for (int a : word) {
      if (a < 0 || a >= rs.rank()) throw EngineError("word letter out of range");
      w = rs.mulSimpleRight(w, a);
    }
    ws.push_back(w);
  }
  std::ostringstream os;
  if (format == "text")
    os << "schubert " << eng.config().instance() << "\n";
  else
    os << tableHeaderJson(eng, "schubert") << ",\"rows\":[";
  bool first = true;
  for (int w : ws) {
    CPoly f = eng.config().type == 'A' ? po.restrictToWeights(po.schubertA(w))
                                       : po.bggClass(w, Coords::Weight);
    CPoly fq = qo.quantizePoly(f);
    auto key = wordKey(rs, w);
    if (format == "text") {
      os << "w=[";
      for (size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
      os << "] len=" << rs.length(w) << " class=" << f.str() << " quantized=" << fq.str() << "\n";
    } else {
      os << (first ? "" : ",") << "{\"word\":" << jints(key) << ",\"length\":" << rs.length(w)
         << ",\"classical\":" << jstr(f.str()) << ",\"quantized\":" << jstr(fq.str()) << "}";
    }
    first = false;
  }
  if (format != "text") os << "]}\n";
  return os.str();
}

std::string dumpInvariants(Engine& eng, const std::string& format) {
  auto& qo = eng.ops();
  if (!eng.algebra().complete() && qo.fundamentalDegrees().back() > eng.algebra().topDegree())
    throw EngineError("invariants need the algebra built through the top fundamental degree");
  auto invs = qo.quantumInvariants();
  std::ostringstream os;
  if (format == "text") {
    os << "invariants " << eng.config().instance() << "\n";
    for (const auto& inv : invs)
      os << "deg " << inv.degree << ": classical=" << inv.classical.str()
         << " quantum=" << inv.quantum.str() << "\n";
    return os.str();
  }
  os << tableHeaderJson(eng, "invariants") << ",\"rows\":[";
  for (size_t i = 0; i < invs.size(); ++i)
    os << (i ? "," : "") << "{\"degree\":" << invs[i].degree << ",\"classical\":"
       << jstr(invs[i].classical.str()) << ",\"quantum\":" << jstr(invs[i].quantum.str()) << "}";
  os << "]}\n";
  return os.str();
}

}  // namespace

std::string dumpTable(Engine& eng, const std::string& what, const std::vector<int>& word,
                      const std::string& format) {
  if (what == "hilbert") return dumpHilbert(eng, format);
  if (what == "basis") return dumpBasis(eng, format);
  if (what == "schubert") return dumpSchubert(eng, word, format);
  if (what == "invariants") return dumpInvariants(eng, format);
  throw EngineError("unknown table: " + what);
}

}  // namespace nqf
