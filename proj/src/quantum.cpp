#include "nqf/quantum.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace nqf {

bool RMat::isZero() const {
  for (const auto& e : v)
    if (!e.isZero()) return false;
  return true;
}

RMat rmatFromQ(const QMat& m, const RingElem& scale) {
  RMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r.at(i, j) = scale * m.at(i, j);
  return r;
}

RMat rmatMul(const RMat& a, const RMat& b) {
  if (a.cols != b.rows) throw InvariantViolation("block size mismatch in operator product");
  RMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const RingElem& f = a.at(i, k);
      if (f.isZero()) continue;
      for (int j = 0; j < b.cols; ++j)
        if (!b.at(k, j).isZero()) r.at(i, j) += f * b.at(k, j);
    }
  return r;
}

void rmatAdd(RMat& a, const RMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw InvariantViolation("block size mismatch in operator sum");
  for (size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
}

RMat rmatScaled(const RMat& m, const RingElem& c) {
  RMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.v.size(); ++i)
    if (!m.v[i].isZero()) r.v[i] = m.v[i] * c;
  return r;
}

void GradedOp::prune() {
  for (auto it = blocks.begin(); it != blocks.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second.isZero() ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? blocks.erase(it) : std::next(it);
  }
}

bool GradedOp::isZeroUpTo(int cap) const {
  for (const auto& [src, dsts] : blocks) {
    if (src.first > cap) continue;
    for (const auto& [dst, m] : dsts)
      if (!m.isZero()) return false;
  }
  return true;
}

int GradedOp::maxRaise() const {
  int r = 0;
  for (const auto& [src, dsts] : blocks)
    for (const auto& [dst, m] : dsts) r = std::max(r, dst.first - src.first);
  return r;
}

GradedOp& GradedOp::operator+=(const GradedOp& o) {
  srcCap = std::min(srcCap, o.srcCap);
  for (const auto& [src, dsts] : o.blocks)
    for (const auto& [dst, m] : dsts) {
      auto it = blocks[src].find(dst);
      if (it == blocks[src].end())
        blocks[src].emplace(dst, m);
      else
        rmatAdd(it->second, m);
    }
  return *this;
}

GradedOp GradedOp::scaled(const RingElem& c) const {
  GradedOp r;
  r.srcCap = srcCap;
  if (c.isZero()) return r;
  for (const auto& [src, dsts] : blocks)
    for (const auto& [dst, m] : dsts) r.blocks[src].emplace(dst, rmatScaled(m, c));
  return r;
}

GradedOp opCompose(const GradedOp& a, const GradedOp& b) {
  GradedOp r;
  r.srcCap = std::min(b.srcCap, a.srcCap - b.maxRaise());
  for (const auto& [src, mids] : b.blocks) {
    if (src.first > r.srcCap) continue;
    for (const auto& [mid, bm] : mids) {
      auto it = a.blocks.find(mid);
      if (it == a.blocks.end()) continue;
      for (const auto& [dst, am] : it->second) {
        RMat prod = rmatMul(am, bm);
        if (prod.isZero()) continue;
        auto jt = r.blocks[src].find(dst);
        if (jt == r.blocks[src].end())
          r.blocks[src].emplace(dst, std::move(prod));
        else
          rmatAdd(jt->second, prod);
      }
    }
  }
  r.prune();
  return r;
}

int opJointCap(const GradedOp& a, const GradedOp& b) { return std::min(a.srcCap, b.srcCap); }

bool opEqualUpTo(const GradedOp& a, const GradedOp& b, int cap) {
  GradedOp d = a;
  d += b.scaled(RingElem(Rat(-1)));
  d.prune();
  return d.isZeroUpTo(cap);
}

void qvecPrune(QVec& x) {
  for (auto it = x.begin(); it != x.end();) {
    bool zero = true;
    for (const auto& e : it->second)
      if (!e.isZero()) {
        zero = false;
        break;
      }
    it = zero ? x.erase(it) : std::next(it);
  }
}

QVec applyOp(const GradedOp& op, const QVec& x) {
  QVec y;
  for (const auto& [src, vec] : x) {
    if (src.first > op.srcCap)
      throw EngineError("operator applied beyond its valid degree range");
    auto it = op.blocks.find(src);
    if (it == op.blocks.end()) continue;
    for (const auto& [dst, m] : it->second) {
      if (m.cols != static_cast<int>(vec.size()))
        throw InvariantViolation("operator block does not match vector block");
      auto& out = y[dst];
      if (out.empty()) out.assign(m.rows, RingElem());
      for (int c = 0; c < m.cols; ++c) {
        if (vec[c].isZero()) continue;
        for (int r = 0; r < m.rows; ++r)
          if (!m.at(r, c).isZero()) out[r] += m.at(r, c) * vec[c];
      }
    }
  }
  qvecPrune(y);
  return y;
}

QVec qvecFromGraded(const GradedElem& x) {
  QVec y;
  for (const auto& [deg, elem] : x)
    for (const auto& [cls, v] : elem.coords) {
      bool zero = true;
      for (const auto& c : v)
        if (c != 0) {
          zero = false;
          break;
        }
      if (zero) continue;
      auto& out = y[{deg, cls}];
      out.assign(v.size(), RingElem());
      for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out[i] = RingElem(v[i]);
    }
  return y;
}

QuantumOps::QuantumOps(const NicholsAlgebra& alg, const CoeffConfig& cfg)
    : alg_(&alg), rs_(&alg.roots()), poly_(alg.roots()), cfg_(cfg) {}

int QuantumOps::defaultCap() const {
  return alg_->complete() ? GradedOp::kUnbounded : alg_->topDegree() - 1;
}

Rat QuantumOps::dFactor(int rootIdx) const {
  Rat prod(1);
  for (int i : rs_->reducedWord(rs_->reflectionOf(rootIdx))) prod *= cfg_.at(*rs_, i);
  return Rat(1) / prod;
}

QMonomial QuantumOps::corootMono(int rootIdx) const {
  const auto& cs = rs_->root(rootIdx).corootSimple;
  return QMonomial(cs.begin(), cs.end());
}

RingElem QuantumOps::corootQ(int rootIdx) const {
  return RingElem::monomial(corootMono(rootIdx));
}

const GradedOp& QuantumOps::lmulOp(int rootIdx) const {
  auto it = lmulCache_.find(rootIdx);
  if (it != lmulCache_.end()) return it->second;
  GradedOp op;
  op.srcCap = defaultCap();
  for (int d = 0; d < alg_->topDegree(); ++d)
    for (int cls : alg_->classesAt(d)) {
      auto bm = alg_->lmulBlock(d, rootIdx, cls);
      if (!bm || bm->m->rows() == 0) continue;
      RMat m = rmatFromQ(*bm->m, RingElem(Rat(1)));
      if (m.isZero()) continue;
      op.blocks[{d, cls}].emplace(GradedOp::Key{d + 1, bm->dstCls}, std::move(m));
    }
  return lmulCache_.emplace(rootIdx, std::move(op)).first->second;
}

GradedOp QuantumOps::dbarWordOp(int w) const {
  GradedOp op;
  op.srcCap = alg_->complete() ? GradedOp::kUnbounded : alg_->topDegree();
  auto word = rs_->reducedWord(w);
  if (word.empty()) return identityOp();
  for (int d = 0; d <= alg_->topDegree(); ++d)
    for (int cls : alg_->classesAt(d)) {
      int curDeg = d, curCls = cls;
      QMat acc;
      bool dead = false, first = true;
      for (auto lt = word.rbegin(); lt != word.rend(); ++lt) {
        auto bm = alg_->dbarBlock(curDeg, *lt, curCls);
        if (!bm || bm->m->rows() == 0) {
          dead = true;
          break;
        }
        acc = first ? *bm->m : (*bm->m) * acc;
        first = false;
        curCls = bm->dstCls;
        --curDeg;
      }
      if (dead) continue;
      RMat m = rmatFromQ(acc, RingElem(Rat(1)));
      if (m.isZero()) continue;
      op.blocks[{d, cls}].emplace(GradedOp::Key{curDeg, curCls}, std::move(m));
    }
  return op;
}

const GradedOp& QuantumOps::dbarReflOp(int rootIdx) const {
  auto it = dbarCache_.find(rootIdx);
  if (it != dbarCache_.end()) return it->second;
  return dbarCache_.emplace(rootIdx, dbarWordOp(rs_->reflectionOf(rootIdx))).first->second;
}

const GradedOp& QuantumOps::quantizeRoot(int rootIdx) const {
  auto it = genCache_.find(rootIdx);
  if (it != genCache_.end()) return it->second;
  GradedOp op = lmulOp(rootIdx).scaled(RingElem(cfg_.at(*rs_, rootIdx)));
  if (rs_->root(rootIdx).quantum)
    op += dbarReflOp(rootIdx).scaled(corootQ(rootIdx) * dFactor(rootIdx));
  op.prune();
  return genCache_.emplace(rootIdx, std::move(op)).first->second;
}

const GradedOp& QuantumOps::eta(int simple) const {
  auto it = etaCache_.find(simple);
  if (it != etaCache_.end()) return it->second;
  GradedOp op;
  op.srcCap = defaultCap();
  for (int a = 0; a < rs_->posCount(); ++a) {
    Rat k = rs_->root(a).corootSimple[simple];
    if (k == 0) continue;
    op += quantizeRoot(a).scaled(RingElem(k));
  }
  op.prune();
  return etaCache_.emplace(simple, std::move(op)).first->second;
}

GradedOp QuantumOps::muTildeLinear(const CPoly& linear) const {
  GradedOp op;
  op.srcCap = defaultCap();
  for (int a = 0; a < rs_->posCount(); ++a) {
    Rat k = poly_.corootPair(linear, a);
    if (k == 0) continue;
    op += quantizeRoot(a).scaled(RingElem(k));
  }
  op.prune();
  return op;
}

GradedOp QuantumOps::identityOp(const RingElem& c) const {
  GradedOp op;
  op.srcCap = alg_->complete() ? GradedOp::kUnbounded : alg_->topDegree();
  if (c.isZero()) return op;
  for (int d = 0; d <= alg_->topDegree(); ++d)
    for (int cls : alg_->classesAt(d)) {
      int n = alg_->blockDim(d, cls);
      RMat m(n, n);
      for (int i = 0; i < n; ++i) m.at(i, i) = c;
      op.blocks[{d, cls}].emplace(GradedOp::Key{d, cls}, std::move(m));
    }
  return op;
}

GradedOp QuantumOps::muTildePoly(const CPoly& f) const {
  if (f.coords != Coords::Weight)
    throw EngineError("operator substitution expects weight coordinates");
  GradedOp out;
  out.srcCap = GradedOp::kUnbounded;
  bool any = false;
  for (const auto& [e, c] : f.terms) {
    GradedOp term = identityOp(RingElem(Rat(1)));
    for (int i = f.nvars - 1; i >= 0; --i)
      for (int k = 0; k < e[i]; ++k) term = opCompose(eta(i), term);
    out += term.scaled(c);
    any = true;
  }
  if (!any) out.srcCap = alg_->complete() ? GradedOp::kUnbounded : alg_->topDegree();
  out.prune();
  return out;
}

QVec QuantumOps::vacuum() const {
  QVec v;
  int cls = alg_->classesAt(0).at(0);
  v[{0, cls}] = {RingElem(Rat(1))};
  return v;
}

QVec QuantumOps::muTildeVac(const CPoly& f) const {
  if (f.coords != Coords::Weight)
    throw EngineError("operator substitution expects weight coordinates");
  QVec out;
  for (const auto& [e, c] : f.terms) {
    QVec v = vacuum();
    for (int i = f.nvars - 1; i >= 0; --i)
      for (int k = 0; k < e[i]; ++k) v = applyOp(eta(i), v);
    for (auto& [key, vec] : v) {
      auto& acc = out[key];
      if (acc.empty()) acc.assign(vec.size(), RingElem());
      for (size_t j = 0; j < vec.size(); ++j) acc[j] += vec[j] * c;
    }
  }
  qvecPrune(out);
  return out;
}

std::vector<RingElem> QuantumOps::flatten(const QVec& x) const {
  std::vector<RingElem> out;
  for (int d = 0; d <= alg_->topDegree(); ++d)
    for (int cls : alg_->classesAt(d)) {
      int n = alg_->blockDim(d, cls);
      auto it = x.find({d, cls});
      for (int i = 0; i < n; ++i)
        out.push_back(it == x.end() ? RingElem() : it->second.at(i));
    }
  return out;
}

CPoly QuantumOps::yApply(int simple, const CPoly& f) const {
  if (f.coords != Coords::Weight) throw EngineError("Y operators act in weight coordinates");
  CPoly out = poly_.variable(Coords::Weight, simple) * f;
  for (int a = 0; a < rs_->posCount(); ++a) {
    if (!rs_->root(a).quantum) continue;
    Rat k = rs_->root(a).corootSimple[simple];
    if (k == 0) continue;
    CPoly t = poly_.demazureW(rs_->reflectionOf(a), f);
    if (t.isZero()) continue;
    t *= corootQ(a) * RingElem(k);
    out += t;
  }
  return out;
}

CPoly QuantumOps::yEval(const CPoly& f) const {
  if (f.coords != Coords::Weight) throw EngineError("Y operators act in weight coordinates");
  CPoly out = poly_.zero(Coords::Weight);
  for (const auto& [e, c] : f.terms) {
    CPoly t = poly_.constant(Coords::Weight, Rat(1));
    for (int i = f.nvars - 1; i >= 0; --i)
      for (int k = 0; k < e[i]; ++k) t = yApply(i, t);
    t *= c;
    out += t;
  }
  return out;
}

CPoly QuantumOps::quantizePoly(const CPoly& f) const {
  CPoly g = f;
  int guard = 2 * (f.degree() + 2);
  for (int step = 0; step <= guard; ++step) {
    CPoly err = yEval(g) - f;
    if (err.isZero()) return g;
    g -= err;
  }
  throw InvariantViolation("quantization did not stabilize");
}

std::vector<int> QuantumOps::fundamentalDegrees() const {
  std::vector<int> ds;
  int n = rs_->rank();
  switch (rs_->type()) {
    case 'A':
      for (int d = 2; d <= n + 1; ++d) ds.push_back(d);
      break;
    case 'B':
    case 'C':
      for (int k = 1; k <= n; ++k) ds.push_back(2 * k);
      break;
    case 'D':
      for (int k = 1; k < n; ++k) ds.push_back(2 * k);
      ds.push_back(n);
      std::stable_sort(ds.begin(), ds.end());
      break;
    default:
      throw EngineError("unsupported type");
  }
  return ds;
}

// elementary symmetric polynomial in the given polynomials
static CPoly elemSym(const PolyOps& ops, Coords c, const std::vector<CPoly>& xs, int k) {
  std::vector<CPoly> e(static_cast<size_t>(k) + 1, ops.zero(c));
  e[0] = ops.constant(c, Rat(1));
  for (const auto& x : xs)
    for (int j = k; j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

CPoly QuantumOps::classicalInvariant(int which) const {
  int n = rs_->rank();
  std::vector<CPoly> xs;
  for (int i = 0; i < rs_->ambientDim(); ++i) xs.push_back(poly_.variable(Coords::Ambient, i));
  CPoly amb = poly_.zero(Coords::Ambient);
  if (rs_->type() == 'A') {
    amb = elemSym(poly_, Coords::Ambient, xs, which + 2);
  } else if (rs_->type() == 'B' || rs_->type() == 'C') {
    std::vector<CPoly> sq;
    for (const auto& x : xs) sq.push_back(x * x);
    amb = elemSym(poly_, Coords::Ambient, sq, which + 1);
  } else {
    // type D: squares in ascending degree with the product invariant at degree n
    std::vector<std::pair<int, int>> kinds;  // (degree, k or 0 for product)
    for (int k = 1; k < n; ++k) kinds.push_back({2 * k, k});
    kinds.push_back({n, 0});
    std::stable_sort(kinds.begin(), kinds.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    auto [deg, k] = kinds.at(which);
    if (k == 0) {
      amb = poly_.constant(Coords::Ambient, Rat(1));
      for (const auto& x : xs) amb = amb * x;
    } else {
      std::vector<CPoly> sq;
      for (const auto& x : xs) sq.push_back(x * x);
      amb = elemSym(poly_, Coords::Ambient, sq, k);
    }
  }
  return poly_.restrictToWeights(amb);
}

std::vector<QuantumInvariant> QuantumOps::quantumInvariants() const {
  std::vector<QuantumInvariant> out;
  auto degs = fundamentalDegrees();
  int n = rs_->rank();
  for (size_t which = 0; which < degs.size(); ++which) {
    int d = degs[which];
    CPoly classical = classicalInvariant(static_cast<int>(which));

    // candidate monomials w^a q^lam with |a| + 2 ht(lam) = d
    struct Cand {
      std::vector<int> a;
      QMonomial lam;
    };
    std::vector<Cand> cands;
    std::function<void(std::vector<int>&, int, int, std::vector<std::vector<int>>&)> enumExp =
        [&](std::vector<int>& cur, int pos, int left, std::vector<std::vector<int>>& sink) {
          if (pos == n) {
            if (left == 0) sink.push_back(cur);
            return;
          }
          for (int m = 0; m <= left; ++m) {
            cur[pos] = m;
            enumExp(cur, pos + 1, left - m, sink);
          }
          cur[pos] = 0;
        };
    for (int h = 0; 2 * h <= d; ++h) {
      std::vector<std::vector<int>> lams, exps;
      std::vector<int> buf(n, 0);
      enumExp(buf, 0, h, lams);
      enumExp(buf, 0, d - 2 * h, exps);
      for (const auto& l : lams)
        for (const auto& e : exps) cands.push_back({e, QMonomial(l.begin(), l.end())});
    }

    // the image of a candidate under the quantized substitution, on the
    // vacuum, expanded into exact rational rows per q-monomial
    std::map<std::pair<size_t, QMonomial>, int> rows;
    std::vector<std::map<int, Rat>> cols(cands.size());
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      CPoly mono = poly_.zero(Coords::Weight);
      mono.terms[cands[ci].a] = RingElem::monomial(cands[ci].lam);
      auto flat = flatten(muTildeVac(mono));
      for (size_t p = 0; p < flat.size(); ++p)
        for (const auto& [qm, r] : flat[p].terms()) {
          auto key = std::make_pair(p, qm);
          auto it = rows.find(key);
          int row = it == rows.end()
                        ? rows.emplace(key, static_cast<int>(rows.size())).first->second
                        : it->second;
          cols[ci][row] = r;
        }
    }
    // classical-limit constraint rows, one per x-exponent of degree d
    std::map<std::vector<int>, int> limRows;
    auto limRow = [&](const std::vector<int>& e) {
      auto it = limRows.find(e);
      return it == limRows.end() ? limRows.emplace(e, static_cast<int>(limRows.size())).first->second
                                 : it->second;
    };
    for (size_t ci = 0; ci < cands.size(); ++ci)
      if (qmonoDegree(cands[ci].lam) == 0) limRow(cands[ci].a);
    for (const auto& [e, c] : classical.terms) limRow(e);

    int nr = static_cast<int>(rows.size()) + static_cast<int>(limRows.size());
    int nc = static_cast<int>(cands.size()) + 1;
    QMat m(nr, nc);
    for (size_t ci = 0; ci < cands.size(); ++ci)
      for (const auto& [row, val] : cols[ci]) m.at(row, static_cast<int>(ci)) = val;
    int base = static_cast<int>(rows.size());
    for (size_t ci = 0; ci < cands.size(); ++ci)
      if (qmonoDegree(cands[ci].lam) == 0)
        m.at(base + limRows.at(cands[ci].a), static_cast<int>(ci)) = Rat(1);
    for (const auto& [e, c] : classical.terms)
      m.at(base + limRows.at(e), nc - 1) = -c.constantPart();

    // Solutions form an affine space: adding q-multiples of lower-degree
    // kernel elements keeps both constraints.  Take the first normalized
    // solution of the homogenized system; the elimination is deterministic.
    QMat ns = qmatNullspace(m);
    int found = -1;
    for (int j = 0; j < ns.cols() && found < 0; ++j)
      if (ns.at(nc - 1, j) != 0) found = j;
    if (found < 0)
      throw EngineError("kernel search found no quantum invariant of degree " + std::to_string(d));
    Rat t = ns.at(nc - 1, found);
    CPoly inv = poly_.zero(Coords::Weight);
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      Rat coef = ns.at(static_cast<int>(ci), found) / t;
      if (coef == 0) continue;
      CPoly mono = poly_.zero(Coords::Weight);
      mono.terms[cands[ci].a] = RingElem::monomial(cands[ci].lam, coef);
      inv += mono;
    }
    out.push_back({d, classical, inv});
  }
  return out;
}

std::vector<CPoly> QuantumOps::gkPolynomials() const {
  if (rs_->type() != 'A') throw EngineError("the determinant recursion is defined for type A");
  int n = rs_->ambientDim();
  // F_k = F_{k-1} (1 + x_k t) + q_{k-1} t^2 F_{k-2}, coefficients of powers of t
  std::vector<std::vector<CPoly>> F(static_cast<size_t>(n) + 1);
  F[0] = {poly_.constant(Coords::Ambient, Rat(1))};
  for (int k = 1; k <= n; ++k) {
    CPoly xk = poly_.variable(Coords::Ambient, k - 1);
    F[k].assign(static_cast<size_t>(k) + 1, poly_.zero(Coords::Ambient));
    for (size_t j = 0; j < F[k - 1].size(); ++j) {
      F[k][j] += F[k - 1][j];
      F[k][j + 1] += F[k - 1][j] * xk;
    }
    if (k >= 2) {
      QMonomial q(rs_->rank(), 0);
      q[k - 2] = 1;
      for (size_t j = 0; j < F[k - 2].size(); ++j) {
        CPoly t = F[k - 2][j];
        t *= RingElem::monomial(q);
        F[k][j + 2] += t;
      }
    }
  }
  std::vector<CPoly> out;
  for (int d = 2; d <= n; ++d) out.push_back(F[n][d]);
  return out;
}

std::vector<int> QuantumOps::gradedRanks(int maxXDeg) const {
  std::vector<std::vector<int>> monos;
  std::function<void(std::vector<int>&, int, int)> enumExp = [&](std::vector<int>& cur, int pos,
                                                                 int left) {
    if (pos == rs_->rank()) {
      monos.push_back(cur);
      return;
    }
    for (int m = 0; m <= left; ++m) {
      cur[pos] = m;
      enumExp(cur, pos + 1, left - m);
    }
    cur[pos] = 0;
  };
  std::vector<int> start(rs_->rank(), 0);
  enumExp(start, 0, maxXDeg);
  std::stable_sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    return da < db;
  });
  std::vector<std::vector<RingElem>> mat;
  std::vector<int> degOf;
  for (const auto& e : monos) {
    CPoly mono = poly_.zero(Coords::Weight);
    mono.terms[e] = RingElem(Rat(1));
    mat.push_back(flatten(muTildeVac(mono)));
    int d = 0;
    for (int x : e) d += x;
    degOf.push_back(d);
  }
  std::vector<int> ranks;
  int prev = 0;
  for (int d = 0; d <= maxXDeg; ++d) {
    std::vector<std::vector<RingElem>> sub;
    for (size_t i = 0; i < mat.size(); ++i)
      if (degOf[i] <= d) sub.push_back(mat[i]);
    int r = ringRank(std::move(sub));
    ranks.push_back(r - prev);
    prev = r;
  }
  return ranks;
}

QuantumOps::Prop1Data QuantumOps::prop1Sets() const {
  Prop1Data out;
  int np = rs_->posCount();
  auto quantum = [&](int a) { return rs_->root(a).quantum; };
  auto len = [&](int w) { return rs_->length(w); };
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      int sa = rs_->reflectionOf(a), sb = rs_->reflectionOf(b);
      int prod = rs_->mul(sa, sb);
      if (quantum(a) && len(prod) == len(sa) - 1) {
        out.A.push_back({a, b});
        if (a != b) out.Aprime.push_back({a, b});
      }
      if (quantum(a) && quantum(b) && len(prod) == len(sa) + len(sb)) {
        out.B.push_back({a, b});
        if (rs_->mul(sa, sb) != rs_->mul(sb, sa)) out.Bprime.push_back({a, b});
      }
    }

  // candidate edges: coroots add up and the reflection products agree
  auto addVec = [&](const Vec& x, const Vec& y) {
    Vec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
  };
  std::vector<std::vector<int>> adj(out.Aprime.size());
  for (size_t i = 0; i < out.Aprime.size(); ++i) {
    auto [a, b] = out.Aprime[i];
    int sab = rs_->mul(rs_->reflectionOf(a), rs_->reflectionOf(b));
    for (size_t j = 0; j < out.Bprime.size(); ++j) {
      auto [g, dl] = out.Bprime[j];
      if (rs_->mul(rs_->reflectionOf(g), rs_->reflectionOf(dl)) != sab) continue;
      if (addVec(rs_->root(g).coroot, rs_->root(dl).coroot) != rs_->root(a).coroot) continue;
      adj[i].push_back(static_cast<int>(j));
    }
  }
  // bipartite matching by augmenting paths
  out.match.assign(out.Aprime.size(), -1);
  std::vector<int> owner(out.Bprime.size(), -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
    for (int j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(owner[j], seen)) {
        owner[j] = i;
        out.match[i] = j;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (size_t i = 0; i < out.Aprime.size(); ++i) {
    std::vector<char> seen(out.Bprime.size(), 0);
    if (augment(static_cast<int>(i), seen)) ++matched;
  }
  out.bijective = matched == static_cast<int>(out.Aprime.size()) &&
                  matched == static_cast<int>(out.Bprime.size());

  out.symmetricOk = out.bijective;
  for (size_t i = 0; i < out.Aprime.size() && out.symmetricOk; ++i) {
    if (out.match[i] < 0) {
      out.symmetricOk = false;
      break;
    }
    auto [a, b] = out.Aprime[i];
    auto [g, dl] = out.Bprime[out.match[i]];
    const Vec &av = rs_->root(a).coroot, &bv = rs_->root(b).coroot;
    const Vec &gv = rs_->root(g).coroot, &dv = rs_->root(dl).coroot;
    int m = rs_->ambientDim();
    for (int r = 0; r < m && out.symmetricOk; ++r)
      for (int c = 0; c < m; ++c)
        if (av[r] * bv[c] + gv[r] * dv[c] != av[c] * bv[r] + gv[c] * dv[r]) {
          out.symmetricOk = false;
          break;
        }
  }
  return out;
}

}  // namespace nqf
