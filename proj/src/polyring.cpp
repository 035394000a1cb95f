#include "nqf/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace nqf {

CPoly CPoly::zero(Coords c, int n) {
  CPoly p;
  p.coords = c;
  p.nvars = n;
  return p;
}

CPoly CPoly::constant(Coords c, int n, const Rat& v) {
  CPoly p = zero(c, n);
  if (v != 0) p.terms[std::vector<int>(n, 0)] = RingElem(v);
  return p;
}

CPoly CPoly::variable(Coords c, int n, int i) {
  if (i < 0 || i >= n) throw EngineError("variable index out of range");
  CPoly p = zero(c, n);
  std::vector<int> e(n, 0);
  e[i] = 1;
  p.terms[e] = RingElem(Rat(1));
  return p;
}

int CPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

bool CPoly::isConstant() const {
  for (const auto& [e, c] : terms)
    for (int x : e)
      if (x != 0) return false;
  return true;
}

Rat CPoly::constantValue() const {
  auto it = terms.find(std::vector<int>(nvars, 0));
  if (it == terms.end()) return Rat(0);
  return it->second.constantPart();
}

static void checkCompatible(const CPoly& a, const CPoly& b) {
  if (a.coords != b.coords || a.nvars != b.nvars)
    throw InvariantViolation("mixed polynomial coordinate systems");
}

CPoly& CPoly::operator+=(const CPoly& o) {
  checkCompatible(*this, o);
  for (const auto& [e, c] : o.terms) {
    auto& t = terms[e];
    t += c;
    if (t.isZero()) terms.erase(e);
  }
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  checkCompatible(*this, o);
  for (const auto& [e, c] : o.terms) {
    auto& t = terms[e];
    t -= c;
    if (t.isZero()) terms.erase(e);
  }
  return *this;
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly r = *this;
  r += o;
  return r;
}

CPoly CPoly::operator-(const CPoly& o) const {
  CPoly r = *this;
  r -= o;
  return r;
}

CPoly CPoly::operator*(const CPoly& o) const {
  checkCompatible(*this, o);
  CPoly r = zero(coords, nvars);
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      std::vector<int> e(nvars);
      for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      auto& t = r.terms[e];
      t += ca * cb;
      if (t.isZero()) r.terms.erase(e);
    }
  return r;
}

CPoly& CPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [e, t] : terms) t *= c;
  return *this;
}

CPoly& CPoly::operator*=(const RingElem& c) {
  if (c.isZero()) {
    terms.clear();
    return *this;
  }
  for (auto& [e, t] : terms) t *= c;
  prune();
  return *this;
}

bool CPoly::operator==(const CPoly& o) const {
  return coords == o.coords && nvars == o.nvars && terms == o.terms;
}

bool CPoly::isHomogeneous(int* degOut) const {
  int seen = -1;
  for (const auto& [e, c] : terms) {
    int xd = 0;
    for (int x : e) xd += x;
    int qd = 0;
    if (!c.isHomogeneous(&qd)) return false;
    int d = xd + qd;
    if (seen < 0)
      seen = d;
    else if (seen != d)
      return false;
  }
  if (degOut) *degOut = seen;
  return true;
}

CPoly CPoly::classicalLimit() const {
  CPoly r = zero(coords, nvars);
  for (const auto& [e, c] : terms) {
    RingElem l = c.classicalLimit();
    if (!l.isZero()) r.terms[e] = l;
  }
  return r;
}

void CPoly::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.isZero() ? terms.erase(it) : std::next(it);
}

std::string CPoly::str() const {
  if (terms.empty()) return "0";
  const char* vn = coords == Coords::Ambient ? "x" : "w";
  std::vector<const std::pair<const std::vector<int>, RingElem>*> order;
  for (const auto& t : terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = 0, db = 0;
    for (int x : a->first) da += x;
    for (int x : b->first) db += x;
    if (da != db) return da > db;
    return b->first < a->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : order) {
    std::string mono;
    for (size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vn + std::to_string(i + 1);
      if (t->first[i] != 1) mono += "^" + std::to_string(t->first[i]);
    }
    std::string cs;
    if (mono.empty()) {
      cs = t->second.str();
    } else if (t->second.isConstant()) {
      Rat v = t->second.constantPart();
      if (v == 1)
        cs = mono;
      else if (v == -1)
        cs = "-" + mono;
      else
        cs = ratStr(v) + "*" + mono;
    } else if (t->second.termCount() == 1) {
      cs = t->second.str() + "*" + mono;
    } else {
      cs = "(" + t->second.str() + ")*" + mono;
    }
    if (!first && cs[0] != '-') os << "+";
    os << cs;
    first = false;
  }
  return os.str();
}

PolyOps::PolyOps(const RootSystem& rs) : rs_(&rs) {}

int PolyOps::vars(Coords c) const {
  return c == Coords::Ambient ? rs_->ambientDim() : rs_->rank();
}

CPoly PolyOps::linearForm(Coords c, const std::vector<Rat>& coeffs) const {
  int n = vars(c);
  if (static_cast<int>(coeffs.size()) != n)
    throw EngineError("linear form has the wrong number of coordinates");
  CPoly p = CPoly::zero(c, n);
  for (int i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.terms[e] = RingElem(coeffs[i]);
  }
  return p;
}

CPoly PolyOps::rootForm(Coords c, int rootIdx) const {
  const RootData& rd = rs_->root(rootIdx);
  if (c == Coords::Ambient) return linearForm(c, rd.vec);
  std::vector<Rat> co(rs_->rank());
  for (int k = 0; k < rs_->rank(); ++k) co[k] = rs_->corootPairing(rd.vec, k);
  return linearForm(c, co);
}

Rat PolyOps::corootPair(const CPoly& linear, int rootIdx) const {
  Rat out(0);
  for (const auto& [e, c] : linear.terms) {
    int d = 0, var = -1;
    for (int i = 0; i < linear.nvars; ++i) {
      d += e[i];
      if (e[i] == 1) var = i;
    }
    if (d == 0) continue;  // constants evaluate to zero against coroots
    if (d != 1) throw EngineError("coroot pairing needs a linear polynomial");
    if (!c.isConstant()) throw EngineError("coroot pairing needs classical coefficients");
    Rat k;
    if (linear.coords == Coords::Weight) {
      k = rs_->root(rootIdx).corootSimple[var];
    } else {
      std::vector<Rat> ei(linear.nvars, Rat(0));
      ei[var] = 1;
      k = rs_->corootPairing(ei, rootIdx);
    }
    out += c.constantPart() * k;
  }
  return out;
}

CPoly PolyOps::actOnVariable(int w, Coords c, int i) const {
  if (c == Coords::Ambient) {
    Vec ei(rs_->ambientDim(), Rat(0));
    ei[i] = 1;
    return linearForm(c, rs_->act(w, ei));
  }
  Vec img = rs_->act(w, rs_->fundamentalWeight(i));
  std::vector<Rat> co(rs_->rank());
  for (int k = 0; k < rs_->rank(); ++k) co[k] = rs_->corootPairing(img, k);
  return linearForm(c, co);
}

CPoly PolyOps::substitute(const CPoly& f, const std::vector<CPoly>& images) const {
  CPoly out = CPoly::zero(f.coords, f.nvars);
  // lazily cache powers of each image
  std::vector<std::vector<CPoly>> pow(images.size());
  for (size_t i = 0; i < images.size(); ++i) pow[i].push_back(constant(f.coords, Rat(1)));
  for (const auto& [e, c] : f.terms) {
    CPoly t = constant(f.coords, Rat(1));
    for (int i = 0; i < f.nvars; ++i) {
      if (e[i] == 0) continue;
      auto& pw = pow[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    t *= c;
    out += t;
  }
  return out;
}

CPoly PolyOps::wAct(int w, const CPoly& f) const {
  if (vars(f.coords) != f.nvars) throw EngineError("polynomial does not match the root system");
  std::vector<CPoly> images;
  images.reserve(f.nvars);
  for (int i = 0; i < f.nvars; ++i) images.push_back(actOnVariable(w, f.coords, i));
  return substitute(f, images);
}

static CPoly divideByLinear(const CPoly& num, const CPoly& lin) {
  int v = -1;
  Rat c;
  for (const auto& [e, k] : lin.terms)
    for (int i = 0; i < lin.nvars; ++i)
      if (e[i] == 1 && v < 0) {
        v = i;
        c = k.constantPart();
      }
  if (v < 0) throw InvariantViolation("division by a zero linear form");
  CPoly rem = num;
  CPoly quot = CPoly::zero(num.coords, num.nvars);
  while (!rem.isZero()) {
    int d = 0;
    for (const auto& [e, k] : rem.terms) d = std::max(d, e[v]);
    if (d == 0) throw InvariantViolation("inexact division in a Demazure operator");
    CPoly piece = CPoly::zero(num.coords, num.nvars);
    for (const auto& [e, k] : rem.terms) {
      if (e[v] != d) continue;
      std::vector<int> f = e;
      f[v] = d - 1;
      piece.terms[f] = k * (Rat(1) / c);
    }
    quot += piece;
    rem -= lin * piece;
  }
  return quot;
}

CPoly PolyOps::demazure(int rootIdx, const CPoly& f) const {
  CPoly num = f - wAct(rs_->reflectionOf(rootIdx), f);
  if (num.isZero()) return CPoly::zero(f.coords, f.nvars);
  return divideByLinear(num, rootForm(f.coords, rootIdx));
}

CPoly PolyOps::demazureWord(const std::vector<int>& simples, const CPoly& f) const {
  CPoly out = f;
  for (auto it = simples.rbegin(); it != simples.rend(); ++it) out = demazure(*it, out);
  return out;
}

CPoly PolyOps::demazureW(int w, const CPoly& f) const {
  return demazureWord(rs_->reducedWord(w), f);
}

CPoly PolyOps::bggTop(Coords c) const {
  CPoly p = constant(c, Rat(1) / Rat(rs_->weylOrder()));
  for (int a = 0; a < rs_->posCount(); ++a) p = p * rootForm(c, a);
  return p;
}

CPoly PolyOps::bggClass(int w, Coords c) const {
  return demazureW(rs_->mul(rs_->inverse(w), rs_->longest()), bggTop(c));
}

CPoly PolyOps::schubertA(int w) const {
  if (rs_->type() != 'A') throw EngineError("Schubert staircase is defined for type A only");
  int n = rs_->ambientDim();
  CPoly top = constant(Coords::Ambient, Rat(1));
  std::vector<int> e(n, 0);
  for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
  top.terms.clear();
  top.terms[e] = RingElem(Rat(1));
  return demazureW(rs_->mul(rs_->inverse(w), rs_->longest()), top);
}

CPoly PolyOps::restrictToWeights(const CPoly& f) const {
  if (f.coords != Coords::Ambient) throw EngineError("restriction expects ambient coordinates");
  int n = rs_->rank();
  std::vector<CPoly> images;
  for (int i = 0; i < f.nvars; ++i) {
    std::vector<Rat> ei(f.nvars, Rat(0));
    ei[i] = 1;
    std::vector<Rat> co(n);
    for (int j = 0; j < n; ++j) co[j] = rs_->corootPairing(ei, j);
    images.push_back(linearForm(Coords::Weight, co));
  }
  CPoly g = CPoly::zero(Coords::Weight, n);
  for (const auto& [e, c] : f.terms) {
    CPoly t = constant(Coords::Weight, Rat(1));
    for (int i = 0; i < f.nvars; ++i)
      for (int k = 0; k < e[i]; ++k) t = t * images[i];
    t *= c;
    g += t;
  }
  return g;
}

Elem PolyOps::muLinear(const NicholsAlgebra& alg, const CPoly& linear,
                       const CoeffConfig& cfg) const {
  Elem out = alg.zeroElem(1);
  for (int a = 0; a < rs_->posCount(); ++a) {
    Rat k = corootPair(linear, a) * cfg.at(*rs_, a);
    if (k == 0) continue;
    Elem t = alg.letterElem(a);
    t *= k;
    out += t;
  }
  out.prune();
  return out;
}

GradedElem PolyOps::mu(const NicholsAlgebra& alg, const CPoly& f, const CoeffConfig& cfg) const {
  std::vector<Elem> varImg;
  for (int i = 0; i < f.nvars; ++i)
    varImg.push_back(muLinear(alg, variable(f.coords, i), cfg));
  GradedElem out;
  for (const auto& [e, c] : f.terms) {
    if (!c.isConstant()) throw EngineError("mu expects classical coefficients");
    int d = 0;
    for (int x : e) d += x;
    Elem t = alg.vacuum();
    for (int i = f.nvars - 1; i >= 0; --i)
      for (int k = 0; k < e[i]; ++k) t = alg.mul(varImg[i], t);
    t *= c.constantPart();
    auto it = out.find(d);
    if (it == out.end())
      out.emplace(d, t);
    else
      it->second += t;
  }
  for (auto it = out.begin(); it != out.end();) {
    it->second.prune();
    it = it->second.isZero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace nqf
