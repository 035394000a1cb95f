#include "nqf/nichols.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nqf {

using ordered_json = nlohmann::ordered_json;

bool Elem::isZero() const {
  for (const auto& [cls, v] : coords)
    for (const Rat& c : v)
      if (c != 0) return false;
  return true;
}

Elem& Elem::operator+=(const Elem& o) {
  if (degree != o.degree) throw InvariantViolation("degree mismatch in element sum");
  for (const auto& [cls, v] : o.coords) {
    auto& mine = coords[cls];
    if (mine.empty()) mine.assign(v.size(), Rat(0));
    if (mine.size() != v.size()) throw InvariantViolation("block size mismatch");
    for (size_t i = 0; i < v.size(); ++i) mine[i] += v[i];
  }
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  Elem neg = o;
  neg *= Rat(-1);
  return *this += neg;
}

Elem& Elem::operator*=(const Rat& c) {
  for (auto& [cls, v] : coords)
    for (Rat& x : v) x *= c;
  return *this;
}

void Elem::prune() {
  for (auto it = coords.begin(); it != coords.end();) {
    bool zero = true;
    for (const Rat& c : it->second)
      if (c != 0) {
        zero = false;
        break;
      }
    it = zero ? coords.erase(it) : std::next(it);
  }
}

bool Elem::operator==(const Elem& o) const {
  Elem d = *this;
  d -= o;
  return d.isZero();
}

NicholsAlgebra::NicholsAlgebra(const RootSystem& rs) : NicholsAlgebra(rs, Options()) {}

NicholsAlgebra::NicholsAlgebra(const RootSystem& rs, Options opt) : rs_(&rs), opt_(opt) {
  Level l0;
  Block& b = l0[rs.identity()];
  b.basis.push_back(NcWord{});
  b.basisKey.emplace_back(-1, -1);
  b.gram = QMat::identity(1);
  for (int i = 0; i < rs.rank(); ++i) b.wact[i] = QMat::identity(1);
  levels_.push_back(std::move(l0));
}

const NicholsAlgebra::Block* NicholsAlgebra::block(int k, int cls) const {
  if (k < 0 || k > topDegree()) return nullptr;
  auto it = levels_[k].find(cls);
  return it == levels_[k].end() ? nullptr : &it->second;
}

int NicholsAlgebra::dim(int k) const {
  if (k < 0) return 0;
  if (k > topDegree()) return complete_ ? 0 : -1;
  int d = 0;
  for (const auto& [cls, b] : levels_[k]) d += static_cast<int>(b.basis.size());
  return d;
}

std::vector<int> NicholsAlgebra::hilbert() const {
  std::vector<int> h;
  for (int k = 0; k <= topDegree(); ++k) h.push_back(dim(k));
  return h;
}

std::vector<int> NicholsAlgebra::classesAt(int k) const {
  std::vector<int> out;
  if (k < 0 || k > topDegree()) return out;
  for (const auto& [cls, b] : levels_[k])
    if (!b.basis.empty()) out.push_back(cls);
  return out;
}

int NicholsAlgebra::blockDim(int k, int cls) const {
  const Block* b = block(k, cls);
  return b ? static_cast<int>(b->basis.size()) : 0;
}

const std::vector<NcWord>& NicholsAlgebra::basisWords(int k, int cls) const {
  const Block* b = block(k, cls);
  if (!b) throw EngineError("no such block");
  return b->basis;
}

const QMat& NicholsAlgebra::gram(int k, int cls) const {
  const Block* b = block(k, cls);
  if (!b) throw EngineError("no such block");
  return b->gram;
}

std::vector<Rat> NicholsAlgebra::wactRefl(int k, int r, int cls, int j) const {
  const Block* b = block(k, cls);
  if (!b) throw InvariantViolation("missing block in reflection action");
  std::vector<Rat> v(b->basis.size(), Rat(0));
  v[j] = 1;
  int g = cls;
  auto word = rs_->reducedWord(rs_->reflectionOf(r));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Block* src = block(k, g);
    auto mit = src->wact.find(*it);
    if (mit == src->wact.end()) throw InvariantViolation("missing simple action");
    const QMat& m = mit->second;
    std::vector<Rat> w(m.rows(), Rat(0));
    for (int rr = 0; rr < m.rows(); ++rr)
      for (int cc = 0; cc < m.cols(); ++cc)
        if (m.at(rr, cc) != 0) w[rr] += m.at(rr, cc) * v[cc];
    v = std::move(w);
    int s = rs_->simpleRefl(*it);
    g = rs_->mul(rs_->mul(s, g), s);
  }
  return v;
}

int NicholsAlgebra::tryBuildLevel(uint64_t prime, Level& out) const {
  const int k = static_cast<int>(levels_.size());
  const Level& prev = levels_[k - 1];
  const int m = rs_->posCount();

  // spanning words [a] b, b running over the previous basis, grouped by the
  // group-valued degree and sorted within each class
  std::map<int, std::vector<SpanEntry>> span;
  for (const auto& [h, pb] : prev) {
    for (int j = 0; j < static_cast<int>(pb.basis.size()); ++j)
      for (int a = 0; a < m; ++a) {
        int g = rs_->mulReflLeft(a, h);
        NcWord w;
        w.reserve(pb.basis[j].size() + 1);
        w.push_back(static_cast<uint8_t>(a));
        w.insert(w.end(), pb.basis[j].begin(), pb.basis[j].end());
        span[g].push_back({a, h, j, std::move(w)});
      }
  }
  for (auto& [g, v] : span)
    std::sort(v.begin(), v.end(),
              [](const SpanEntry& x, const SpanEntry& y) { return x.word < y.word; });

  // coordinates of v <- D_c in the previous level, one matrix per (class, letter)
  std::map<int, std::map<int, QMat>> dexp;  // cls -> letter -> (prev dim) x |span|
  for (const auto& [g, vs] : span) {
    for (int c = 0; c < m; ++c) {
      int hc = rs_->mulReflRight(g, c);
      int rows = 0;
      if (const Block* pb = block(k - 1, hc)) rows = static_cast<int>(pb->basis.size());
      QMat d(rows, static_cast<int>(vs.size()));
      if (rows == 0) {
        dexp[g].emplace(c, std::move(d));
        continue;
      }
      for (int col = 0; col < static_cast<int>(vs.size()); ++col) {
        const SpanEntry& v = vs[col];
        if (v.letter == c) {
          // the dropped letter is the front one: contributes s_c(b)
          auto w = wactRefl(k - 1, c, v.prevCls, v.prevIdx);
          for (int r = 0; r < rows; ++r) d.at(r, col) += w[r];
        }
        if (k >= 2) {
          const Block& pb = prev.at(v.prevCls);
          auto drit = pb.dright.find(c);
          if (drit != pb.dright.end() && drit->second.rows() > 0) {
            const QMat& dr = drit->second;  // to block (k-2, prevCls * s_c)
            const Block* tgt = block(k - 1, hc);
            auto lit = tgt->lmul.find(v.letter);
            if (lit != tgt->lmul.end() && lit->second.cols() == dr.rows()) {
              const QMat& L = lit->second;
              for (int t = 0; t < dr.rows(); ++t) {
                const Rat& f = dr.at(t, v.prevIdx);
                if (f == 0) continue;
                for (int r = 0; r < rows; ++r)
                  if (L.at(r, t) != 0) d.at(r, col) += f * L.at(r, t);
              }
            }
          }
        }
      }
      dexp[g].emplace(c, std::move(d));
    }
  }

  // blocked pairing matrix: rows are the spanning words of the inverse class
  std::map<int, QMat> gramFull;  // cls -> |span(g^-1)| x |span(g)|
  for (const auto& [g, vs] : span) {
    int gi = rs_->inverse(g);
    auto rit = span.find(gi);
    int nrows = rit == span.end() ? 0 : static_cast<int>(rit->second.size());
    QMat G(nrows, static_cast<int>(vs.size()));
    // row blocks per letter: <[c] b', v> = gram_{k-1} row of b' times dexp_c(v)
    std::map<int, QMat> rowBlock;  // letter -> (prev dim of class s_c g^-1) x |span(g)|
    for (int c = 0; c < m; ++c) {
      int hc = rs_->mulReflRight(g, c);  // class of v <- D_c
      const Block* gp = block(k - 1, hc);
      if (!gp) continue;
      rowBlock[c] = gp->gram * dexp.at(g).at(c);
    }
    if (nrows) {
      const auto& rows = rit->second;
      for (int r = 0; r < nrows; ++r) {
        const SpanEntry& u = rows[r];
        auto rb = rowBlock.find(u.letter);
        if (rb == rowBlock.end()) continue;
        for (int c2 = 0; c2 < G.cols(); ++c2) {
          G.at(r, c2) = rb->second.at(u.prevIdx, c2);
          if (!isInteger(G.at(r, c2)))
            throw InvariantViolation("pairing of words must be integral");
        }
      }
    }
    gramFull.emplace(g, std::move(G));
  }

  // modular greedy column selection per class
  std::map<int, std::vector<int>> selected;
  for (const auto& [g, G] : gramFull) {
    FpPivoter piv(prime, G.rows());
    std::vector<int> sel;
    for (int c2 = 0; c2 < G.cols(); ++c2) {
      bool ok = true;
      std::vector<uint64_t> col(G.rows());
      for (int r = 0; r < G.rows(); ++r) {
        uint64_t v;
        if (!ratModP(G.at(r, c2), prime, v)) {
          ok = false;
          break;
        }
        col[r] = v;
      }
      if (!ok) return -1;
      if (piv.offer(col)) sel.push_back(c2);
    }
    selected.emplace(g, std::move(sel));
  }

  // exact certification: the square minor on the selected rows/columns must
  // be nonsingular, every spanning word must expand over the selected basis
  // with zero residual against every row, and expansions of rejected words
  // may only use earlier basis words
  Level lv;
  for (const auto& [g, G] : gramFull) {
    const auto& X = selected.at(g);
    int gi = rs_->inverse(g);
    static const std::vector<int> kEmpty;
    const auto& Y = selected.count(gi) ? selected.at(gi) : kEmpty;
    if (X.size() != Y.size()) return -1;
    int n = static_cast<int>(X.size());
    QMat C;
    if (n > 0) {
      QMat M(n, n), R(n, G.cols());
      for (int r = 0; r < n; ++r)
        for (int c2 = 0; c2 < n; ++c2) M.at(r, c2) = G.at(Y[r], X[c2]);
      for (int r = 0; r < n; ++r)
        for (int c2 = 0; c2 < G.cols(); ++c2) R.at(r, c2) = G.at(Y[r], c2);
      if (!qmatTrySolve(M, R, C)) return -1;
      // residuals against all rows
      QMat GX(G.rows(), n);
      for (int r = 0; r < G.rows(); ++r)
        for (int c2 = 0; c2 < n; ++c2) GX.at(r, c2) = G.at(r, X[c2]);
      if (!(GX * C == G)) return -1;
    } else {
      C = QMat(0, G.cols());
      if (!G.isZero()) return -1;
    }
    // greedy certificate
    for (int c2 = 0; c2 < G.cols(); ++c2) {
      for (int t = 0; t < n; ++t)
        if (X[t] > c2 && C.at(t, c2) != 0) return -1;
    }
    if (n == 0) continue;

    Block b;
    const auto& vs = span.at(g);
    for (int t = 0; t < n; ++t) {
      b.basis.push_back(vs[X[t]].word);
      b.basisKey.emplace_back(vs[X[t]].letter, vs[X[t]].prevIdx);
    }
    // left multiplication: column j of lmul[a] is the expansion of [a] b_j
    for (int c2 = 0; c2 < static_cast<int>(vs.size()); ++c2) {
      const SpanEntry& v = vs[c2];
      auto& L = b.lmul[v.letter];
      if (L.rows() == 0) {
        int srcDim = blockDim(k - 1, v.prevCls);
        L = QMat(n, srcDim);
      }
      for (int t = 0; t < n; ++t) L.at(t, v.prevIdx) = C.at(t, c2);
    }
    // right derivations restricted to the selected words
    for (int c = 0; c < m; ++c) {
      const QMat& d = dexp.at(g).at(c);
      QMat dr(d.rows(), n);
      for (int t = 0; t < n; ++t)
        for (int r = 0; r < d.rows(); ++r) dr.at(r, t) = d.at(r, X[t]);
      b.dright.emplace(c, std::move(dr));
    }
    lv.emplace(g, std::move(b));
  }

  // grams of the sealed level
  for (auto& [g, b] : lv) {
    int gi = rs_->inverse(g);
    const auto& X = selected.at(g);
    const auto& Y = selected.at(gi);
    const QMat& G = gramFull.at(g);
    int n = static_cast<int>(X.size());
    QMat M(n, n);
    for (int r = 0; r < n; ++r)
      for (int c2 = 0; c2 < n; ++c2) M.at(r, c2) = G.at(Y[r], X[c2]);
    b.gram = std::move(M);
  }
  // the pairing is symmetric, so paired class blocks must be transposes
  for (const auto& [g, b] : lv) {
    int gi = rs_->inverse(g);
    const Block* bi = lv.count(gi) ? &lv.at(gi) : nullptr;
    if (!bi || !(b.gram == bi->gram.transpose()))
      throw InvariantViolation("pairing symmetry violated across inverse classes");
  }

  int total = 0;
  for (const auto& [g, b] : lv) total += static_cast<int>(b.basis.size());
  out = std::move(lv);
  return total;
}

void NicholsAlgebra::buildDerived(Level& lv) const {
  const int k = static_cast<int>(levels_.size()) - 1;
  // levels_ already contains lv as its back element
  const int m = rs_->posCount();
  for (auto& [g, b] : lv) {
    int n = static_cast<int>(b.basis.size());
    // left derivations
    for (int c = 0; c < m; ++c) {
      int tc = rs_->mulReflLeft(c, g);
      int tdim = blockDim(k - 1, tc);
      QMat D(tdim, n);
      for (int j = 0; j < n; ++j) {
        auto [a, pj] = b.basisKey[j];
        int h = rs_->mulReflLeft(a, g);  // class of the tail: g = s_a h
        if (a == c && tdim > 0) D.at(pj, j) += 1;
        if (k >= 2) {
          const Block* pb = block(k - 1, h);
          auto dit = pb->dbar.find(c);
          if (dit != pb->dbar.end() && dit->second.rows() > 0) {
            const QMat& dprev = dit->second;  // (k-2, s_c h) coords
            int sign = 0;
            int bimg = rs_->reflectRoot(c, a, sign);
            const Block* tgt = block(k - 1, tc);
            if (tgt) {
              auto lit = tgt->lmul.find(bimg);
              if (lit != tgt->lmul.end()) {
                const QMat& L = lit->second;
                for (int t = 0; t < dprev.rows(); ++t) {
                  const Rat& f = dprev.at(t, pj);
                  if (f == 0) continue;
                  for (int r = 0; r < tdim; ++r)
                    if (L.at(r, t) != 0) D.at(r, j) += Rat(sign) * f * L.at(r, t);
                }
              }
            }
          }
        }
      }
      b.dbar.emplace(c, std::move(D));
    }
  }
  // simple Weyl actions; these need the current level's lmul
  for (auto& [g, b] : lv) {
    int n = static_cast<int>(b.basis.size());
    for (int i = 0; i < rs_->rank(); ++i) {
      int s = rs_->simpleRefl(i);
      int tg = rs_->mul(rs_->mul(s, g), s);
      int tdim = blockDim(k, tg);
      QMat W(tdim, n);
      for (int j = 0; j < n; ++j) {
        auto [a, pj] = b.basisKey[j];
        int h = rs_->mulReflLeft(a, g);
        int sign = 0;
        int bimg = rs_->reflectRoot(i, a, sign);
        const Block* pb = block(k - 1, h);
        auto wit = pb->wact.find(i);
        if (wit == pb->wact.end()) throw InvariantViolation("missing previous action");
        const QMat& wa = wit->second;  // to (k-1, s_i h s_i)
        const Block* tgt = block(k, tg);
        if (!tgt) continue;
        auto lit = tgt->lmul.find(bimg);
        if (lit == tgt->lmul.end()) continue;
        const QMat& L = lit->second;
        for (int t = 0; t < wa.rows(); ++t) {
          const Rat& f = wa.at(t, pj);
          if (f == 0) continue;
          for (int r = 0; r < tdim; ++r)
            if (L.at(r, t) != 0) W.at(r, j) += Rat(sign) * f * L.at(r, t);
        }
      }
      b.wact.emplace(i, std::move(W));
    }
  }
}

int NicholsAlgebra::buildNextLevel() {
  if (complete_) return 0;
  Level lv;
  int d = -1;
  for (uint64_t p : opt_.primes) {
    d = tryBuildLevel(p, lv);
    if (d >= 0) break;
  }
  if (d < 0) throw InvariantViolation("basis certification failed for every prime");
  if (d == 0) {
    complete_ = true;
    return 0;
  }
  levels_.push_back(std::move(lv));
  buildDerived(levels_.back());
  return d;
}

void NicholsAlgebra::build() {
  while (!complete_ && topDegree() < opt_.maxDegree) buildNextLevel();
}

Elem NicholsAlgebra::zeroElem(int degree) const {
  Elem e;
  e.degree = degree;
  return e;
}

Elem NicholsAlgebra::vacuum() const {
  Elem e;
  e.degree = 0;
  e.coords[rs_->identity()] = {Rat(1)};
  return e;
}

Elem NicholsAlgebra::letterElem(int a) const {
  Elem e;
  e.degree = 1;
  int g = rs_->reflectionOf(a);
  const Block* b = block(1, g);
  if (!b) throw EngineError("degree 1 not built");
  std::vector<Rat> v(b->basis.size(), Rat(0));
  for (size_t i = 0; i < b->basis.size(); ++i)
    if (b->basis[i] == NcWord{static_cast<uint8_t>(a)}) v[i] = 1;
  e.coords[g] = std::move(v);
  return e;
}

Elem NicholsAlgebra::basisElem(int k, int cls, int i) const {
  const Block* b = block(k, cls);
  if (!b || i < 0 || i >= static_cast<int>(b->basis.size())) throw EngineError("no such basis element");
  Elem e;
  e.degree = k;
  std::vector<Rat> v(b->basis.size(), Rat(0));
  v[i] = 1;
  e.coords[cls] = std::move(v);
  return e;
}

std::optional<NicholsAlgebra::BlockMap> NicholsAlgebra::lmulBlock(int srcDeg, int letter,
                                                                  int srcCls) const {
  const Block* tgt = nullptr;
  int tc = rs_->mulReflLeft(letter, srcCls);
  tgt = block(srcDeg + 1, tc);
  if (!tgt) return std::nullopt;
  auto it = tgt->lmul.find(letter);
  if (it == tgt->lmul.end()) return std::nullopt;
  return BlockMap{tc, &it->second};
}

std::optional<NicholsAlgebra::BlockMap> NicholsAlgebra::dbarBlock(int srcDeg, int letter,
                                                                  int srcCls) const {
  const Block* src = block(srcDeg, srcCls);
  if (!src) return std::nullopt;
  auto it = src->dbar.find(letter);
  if (it == src->dbar.end()) return std::nullopt;
  return BlockMap{rs_->mulReflLeft(letter, srcCls), &it->second};
}

std::optional<NicholsAlgebra::BlockMap> NicholsAlgebra::wactBlock(int srcDeg, int simple,
                                                                  int srcCls) const {
  const Block* src = block(srcDeg, srcCls);
  if (!src) return std::nullopt;
  auto it = src->wact.find(simple);
  if (it == src->wact.end()) return std::nullopt;
  int s = rs_->simpleRefl(simple);
  return BlockMap{rs_->mul(rs_->mul(s, srcCls), s), &it->second};
}

static void applyBlock(const QMat& m, const std::vector<Rat>& src, std::vector<Rat>& dst) {
  for (int c = 0; c < m.cols(); ++c) {
    const Rat& f = src[c];
    if (f == 0) continue;
    for (int r = 0; r < m.rows(); ++r)
      if (m.at(r, c) != 0) dst[r] += m.at(r, c) * f;
  }
}

Elem NicholsAlgebra::mulLetter(int a, const Elem& x) const {
  if (x.degree + 1 > topDegree()) {
    if (complete_) return zeroElem(x.degree + 1);
    throw EngineError("product leaves the constructed range");
  }
  Elem out;
  out.degree = x.degree + 1;
  for (const auto& [cls, v] : x.coords) {
    auto bm = lmulBlock(x.degree, a, cls);
    if (!bm) continue;
    auto& dst = out.coords[bm->dstCls];
    if (dst.empty()) dst.assign(bm->m->rows(), Rat(0));
    applyBlock(*bm->m, v, dst);
  }
  out.prune();
  return out;
}

Elem NicholsAlgebra::normalForm(const NcWord& w) const {
  Elem e = vacuum();
  for (auto it = w.rbegin(); it != w.rend(); ++it) e = mulLetter(*it, e);
  return e;
}

Elem NicholsAlgebra::mul(const Elem& x, const Elem& y) const {
  Elem out = zeroElem(x.degree + y.degree);
  for (const auto& [cls, v] : x.coords) {
    const Block* b = block(x.degree, cls);
    if (!b) continue;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      const NcWord& w = b->basis[i];
      Elem t = y;
      for (auto it = w.rbegin(); it != w.rend(); ++it) t = mulLetter(*it, t);
      t *= v[i];
      out += t;
    }
  }
  out.prune();
  return out;
}

Elem NicholsAlgebra::dbar(int c, const Elem& x) const {
  Elem out;
  out.degree = x.degree - 1;
  for (const auto& [cls, v] : x.coords) {
    auto bm = dbarBlock(x.degree, c, cls);
    if (!bm || bm->m->rows() == 0) continue;
    auto& dst = out.coords[bm->dstCls];
    if (dst.empty()) dst.assign(bm->m->rows(), Rat(0));
    applyBlock(*bm->m, v, dst);
  }
  out.prune();
  return out;
}

Elem NicholsAlgebra::dbarWeyl(int w, const Elem& x) const {
  auto word = rs_->reducedWord(w);
  Elem e = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = dbar(*it, e);
  return e;
}

Elem NicholsAlgebra::wAct(int w, const Elem& x) const {
  auto word = rs_->reducedWord(w);
  Elem e = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Elem out;
    out.degree = e.degree;
    for (const auto& [cls, v] : e.coords) {
      auto bm = wactBlock(e.degree, *it, cls);
      if (!bm || bm->m->rows() == 0) continue;
      auto& dst = out.coords[bm->dstCls];
      if (dst.empty()) dst.assign(bm->m->rows(), Rat(0));
      applyBlock(*bm->m, v, dst);
    }
    out.prune();
    e = std::move(out);
  }
  return e;
}

Rat NicholsAlgebra::pairElems(const Elem& xi, const Elem& x) const {
  if (xi.degree != x.degree) return Rat(0);
  Rat out(0);
  for (const auto& [g, xv] : x.coords) {
    int gi = rs_->inverse(g);
    auto it = xi.coords.find(gi);
    if (it == xi.coords.end()) continue;
    const Block* b = block(x.degree, g);
    if (!b) continue;
    const QMat& G = b->gram;
    for (int r = 0; r < G.rows(); ++r) {
      if (it->second[r] == 0) continue;
      for (int c = 0; c < G.cols(); ++c)
        if (G.at(r, c) != 0 && xv[c] != 0) out += it->second[r] * G.at(r, c) * xv[c];
    }
  }
  return out;
}

static ordered_json matJson(const QMat& m) {
  ordered_json j;
  j["r"] = m.rows();
  j["c"] = m.cols();
  std::vector<std::string> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(ratStr(m.at(r, c)));
  j["v"] = v;
  return j;
}

static QMat matFromJson(const ordered_json& j) {
  QMat m(j.at("r").get<int>(), j.at("c").get<int>());
  const auto& v = j.at("v");
  size_t i = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = ratFromString(v.at(i++).get<std::string>());
  return m;
}

std::string NicholsAlgebra::cacheText() const {
  ordered_json j;
  j["format"] = "nqf-basis-v1";
  j["type"] = std::string(1, rs_->type());
  j["rank"] = rs_->rank();
  j["complete"] = complete_;
  ordered_json lvls = ordered_json::array();
  for (int k = 0; k <= topDegree(); ++k) {
    ordered_json lj = ordered_json::array();
    for (const auto& [cls, b] : levels_[k]) {
      ordered_json bj;
      bj["cls"] = cls;
      ordered_json words = ordered_json::array();
      for (const auto& w : b.basis) words.push_back(std::vector<int>(w.begin(), w.end()));
      bj["basis"] = words;
      ordered_json keys = ordered_json::array();
      for (const auto& [a, pj] : b.basisKey) keys.push_back(std::vector<int>{a, pj});
      bj["key"] = keys;
      bj["gram"] = matJson(b.gram);
      auto mapJson = [](const std::map<int, QMat>& mm) {
        ordered_json out = ordered_json::array();
        for (const auto& [key, mat] : mm) {
          ordered_json e;
          e["i"] = key;
          e["m"] = matJson(mat);
          out.push_back(e);
        }
        return out;
      };
      bj["lmul"] = mapJson(b.lmul);
      bj["dright"] = mapJson(b.dright);
      bj["dbar"] = mapJson(b.dbar);
      bj["wact"] = mapJson(b.wact);
      lj.push_back(bj);
    }
    lvls.push_back(lj);
  }
  j["levels"] = lvls;
  return j.dump() + "\n";
}

void NicholsAlgebra::saveCache(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw EngineError("cannot write cache file: " + path);
  f << cacheText();
}

void NicholsAlgebra::loadCacheText(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.at("format").get<std::string>() != "nqf-basis-v1")
    throw EngineError("unsupported cache format");
  if (j.at("type").get<std::string>() != std::string(1, rs_->type()) ||
      j.at("rank").get<int>() != rs_->rank())
    throw EngineError("cache was built for a different root system");
  std::vector<Level> lvls;
  for (const auto& lj : j.at("levels")) {
    Level lv;
    for (const auto& bj : lj) {
      Block b;
      for (const auto& wj : bj.at("basis")) {
        NcWord w;
        for (const auto& x : wj) w.push_back(static_cast<uint8_t>(x.get<int>()));
        b.basis.push_back(w);
      }
      for (const auto& kj : bj.at("key")) b.basisKey.emplace_back(kj.at(0).get<int>(), kj.at(1).get<int>());
      b.gram = matFromJson(bj.at("gram"));
      auto mapLoad = [](const ordered_json& arr, std::map<int, QMat>& mm) {
        for (const auto& e : arr) mm.emplace(e.at("i").get<int>(), matFromJson(e.at("m")));
      };
      mapLoad(bj.at("lmul"), b.lmul);
      mapLoad(bj.at("dright"), b.dright);
      mapLoad(bj.at("dbar"), b.dbar);
      mapLoad(bj.at("wact"), b.wact);
      lv.emplace(bj.at("cls").get<int>(), std::move(b));
    }
    lvls.push_back(std::move(lv));
  }
  if (lvls.empty()) throw EngineError("cache holds no levels");
  levels_ = std::move(lvls);
  complete_ = j.at("complete").get<bool>();
}

bool NicholsAlgebra::loadCacheFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  loadCacheText(ss.str());
  return true;
}

}  // namespace nqf
