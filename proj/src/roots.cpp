#include "nqf/roots.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace nqf {

RootSystem::RootSystem(char type, int rank, int maxRank, long weylBound)
    : type_(type), rank_(rank) {
  int minRank = type == 'A' ? 1 : (type == 'D' ? 3 : 2);
  if (type != 'A' && type != 'B' && type != 'C' && type != 'D')
    throw EngineError(std::string("unsupported type ") + type);
  if (rank < minRank || rank > maxRank)
    throw EngineError(std::string("rank out of range for type ") + type + ": " +
                      std::to_string(rank));
  ambient_ = (type == 'A') ? rank + 1 : rank;
  buildRoots();
  enumerateWeyl(weylBound);
}

Rat RootSystem::form(const Vec& x, const Vec& y) const {
  Rat s(0);
  for (int i = 0; i < ambient_; ++i) s += x[i] * y[i];
  return s;
}

Rat RootSystem::corootPairing(const Vec& x, int rootIdx) const {
  return form(x, roots_[rootIdx].coroot);
}

Vec RootSystem::reflect(int a, const Vec& x) const {
  Rat c = corootPairing(x, a);
  Vec r = x;
  for (int i = 0; i < ambient_; ++i) r[i] -= c * roots_[a].vec[i];
  return r;
}

int RootSystem::reflectRoot(int a, int b, int& sign) const {
  // integer arithmetic over simple-root coordinates:
  // s_a(b) = b - <b, a^vee> a
  Rat pr = form(roots_[b].vec, roots_[a].coroot);
  if (denominator(pr) != 1) throw InvariantViolation("non-integral Cartan pairing");
  long c = static_cast<long>(numerator(pr));
  std::vector<int> out = roots_[b].simple;
  for (int i = 0; i < rank_; ++i) out[i] -= static_cast<int>(c) * roots_[a].simple[i];
  sign = 1;
  auto it = bySimple_.find(out);
  if (it != bySimple_.end()) return it->second;
  for (int& v : out) v = -v;
  it = bySimple_.find(out);
  if (it == bySimple_.end()) throw InvariantViolation("reflection escaped root set");
  sign = -1;
  return it->second;
}

void RootSystem::buildRoots() {
  const int n = rank_;
  std::vector<Vec> simples;
  auto e = [&](int i) {
    Vec v(ambient_, Rat(0));
    v[i] = 1;
    return v;
  };
  auto sub = [&](int i, int j) {
    Vec v(ambient_, Rat(0));
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  auto add2 = [&](int i, int j) {
    Vec v(ambient_, Rat(0));
    v[i] = 1;
    v[j] = 1;
    return v;
  };

  std::vector<Vec> pos;
  switch (type_) {
    case 'A':
      for (int i = 0; i < n; ++i) simples.push_back(sub(i, i + 1));
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pos.push_back(sub(i, j));
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) simples.push_back(sub(i, i + 1));
      simples.push_back(e(n - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(sub(i, j));
          pos.push_back(add2(i, j));
        }
      for (int i = 0; i < n; ++i) pos.push_back(e(i));
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) simples.push_back(sub(i, i + 1));
      {
        Vec v(ambient_, Rat(0));
        v[n - 1] = 2;
        simples.push_back(v);
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(sub(i, j));
          pos.push_back(add2(i, j));
        }
      for (int i = 0; i < n; ++i) {
        Vec v(ambient_, Rat(0));
        v[i] = 2;
        pos.push_back(v);
      }
      break;
    case 'D':
      for (int i = 0; i + 1 < n; ++i) simples.push_back(sub(i, i + 1));
      simples.push_back(add2(n - 2, n - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(sub(i, j));
          pos.push_back(add2(i, j));
        }
      break;
  }

  // simple-root coordinates by solving over the simple basis; all systems
  // here are unitriangular enough that exact elimination is immediate
  auto simpleCoords = [&](const Vec& v) {
    // solve sum c_i simples[i] = v with c integral
    std::vector<Vec> m(simples);
    Vec rhs = v;
    std::vector<Rat> c(n, Rat(0));
    // Gaussian elimination on the ambient components
    std::vector<int> pivotRow(n, -1);
    std::vector<Vec> cols(ambient_, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < ambient_; ++j) cols[j][i] = simples[i][j];
    // build augmented matrix rows = ambient coords
    std::vector<Vec> aug(ambient_, Vec(n + 1, Rat(0)));
    for (int r = 0; r < ambient_; ++r) {
      for (int i = 0; i < n; ++i) aug[r][i] = simples[i][r];
      aug[r][n] = v[r];
    }
    int rr = 0;
    for (int col = 0; col < n && rr < ambient_; ++col) {
      int p = -1;
      for (int r = rr; r < ambient_; ++r)
        if (aug[r][col] != 0) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(aug[p], aug[rr]);
      Rat pv = aug[rr][col];
      for (auto& x : aug[rr]) x /= pv;
      for (int r = 0; r < ambient_; ++r) {
        if (r == rr || aug[r][col] == 0) continue;
        Rat f = aug[r][col];
        for (int k = 0; k <= n; ++k) aug[r][k] -= f * aug[rr][k];
      }
      pivotRow[col] = rr;
      ++rr;
    }
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i) {
      if (pivotRow[i] < 0) throw InvariantViolation("simple roots not independent");
      Rat ci = aug[pivotRow[i]][n];
      if (denominator(ci) != 1) throw InvariantViolation("non-integral root coordinates");
      out[i] = static_cast<int>(numerator(ci));
    }
    return out;
  };

  std::vector<RootData> rd;
  for (const Vec& v : pos) {
    RootData d;
    d.vec = v;
    d.simple = simpleCoords(v);
    d.height = 0;
    for (int c : d.simple) d.height += c;
    Rat nn = form(v, v);
    d.coroot = v;
    for (auto& x : d.coroot) x = x * 2 / nn;
    rd.push_back(std::move(d));
  }
  // long = maximal squared length present
  Rat maxn(0);
  for (auto& d : rd) maxn = std::max(maxn, form(d.vec, d.vec));
  for (auto& d : rd) d.isLong = (form(d.vec, d.vec) == maxn);

  // order: height ascending, then prefer mass on low simple indices
  std::sort(rd.begin(), rd.end(), [](const RootData& a, const RootData& b) {
    if (a.height != b.height) return a.height < b.height;
    return std::lexicographical_compare(b.simple.begin(), b.simple.end(),
                                        a.simple.begin(), a.simple.end());
  });
  roots_ = std::move(rd);
  for (int i = 0; i < posCount(); ++i) bySimple_[roots_[i].simple] = i;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> unit(rank_, 0);
    unit[i] = 1;
    if (bySimple_.at(unit) != i) throw InvariantViolation("simple roots must lead the order");
  }

  // coroot coordinates over the simple coroots
  {
    std::vector<Vec> scor;
    for (int i = 0; i < rank_; ++i) scor.push_back(roots_[i].coroot);
    for (auto& d : roots_) {
      // solve sum c_i scor[i] = d.coroot
      std::vector<Vec> aug(ambient_, Vec(rank_ + 1, Rat(0)));
      for (int r = 0; r < ambient_; ++r) {
        for (int i = 0; i < rank_; ++i) aug[r][i] = scor[i][r];
        aug[r][rank_] = d.coroot[r];
      }
      int rr = 0;
      std::vector<int> pivotRow(rank_, -1);
      for (int col = 0; col < rank_ && rr < ambient_; ++col) {
        int p = -1;
        for (int r = rr; r < ambient_; ++r)
          if (aug[r][col] != 0) {
            p = r;
            break;
          }
        if (p < 0) continue;
        std::swap(aug[p], aug[rr]);
        Rat pv = aug[rr][col];
        for (auto& x : aug[rr]) x /= pv;
        for (int r = 0; r < ambient_; ++r) {
          if (r == rr || aug[r][col] == 0) continue;
          Rat f = aug[r][col];
          for (int k = 0; k <= rank_; ++k) aug[r][k] -= f * aug[rr][k];
        }
        pivotRow[col] = rr;
        ++rr;
      }
      d.corootSimple.assign(rank_, 0);
      d.corootHeight = 0;
      for (int i = 0; i < rank_; ++i) {
        Rat ci = aug[pivotRow[i]][rank_];
        if (denominator(ci) != 1) throw InvariantViolation("non-integral coroot coordinates");
        d.corootSimple[i] = static_cast<int>(numerator(ci));
        d.corootHeight += d.corootSimple[i];
      }
    }
  }

  // fundamental weights: <omega_i, alpha_j^vee> = delta_ij; type A
  // representative is taken orthogonal to e_1+...+e_{n+1}
  omega_.assign(rank_, Vec(ambient_, Rat(0)));
  if (type_ == 'A') {
    for (int i = 0; i < rank_; ++i) {
      Vec v(ambient_, Rat(-(i + 1), ambient_));
      for (int j = 0; j <= i; ++j) v[j] += 1;
      omega_[i] = v;
    }
  } else {
    for (int i = 0; i < rank_; ++i) {
      // solve <x, alpha_j^vee> = delta_ij in the full ambient
      std::vector<Vec> aug(rank_, Vec(ambient_ + 1, Rat(0)));
      for (int r = 0; r < rank_; ++r) {
        for (int c = 0; c < ambient_; ++c) aug[r][c] = roots_[r].coroot[c];
        aug[r][ambient_] = (r == i) ? 1 : 0;
      }
      // square system (ambient_ == rank_ here)
      for (int col = 0; col < ambient_; ++col) {
        int p = -1;
        for (int r = col; r < rank_; ++r)
          if (aug[r][col] != 0) {
            p = r;
            break;
          }
        if (p < 0) throw InvariantViolation("degenerate coroot matrix");
        std::swap(aug[p], aug[col]);
        Rat pv = aug[col][col];
        for (auto& x : aug[col]) x /= pv;
        for (int r = 0; r < rank_; ++r) {
          if (r == col || aug[r][col] == 0) continue;
          Rat f = aug[r][col];
          for (int k = 0; k <= ambient_; ++k) aug[r][k] -= f * aug[col][k];
        }
      }
      for (int c = 0; c < ambient_; ++c) omega_[i][c] = aug[c][ambient_];
    }
  }
}

WeylElem RootSystem::reflectionTable(int rootIdx) const {
  WeylElem t;
  t.sp.resize(posCount());
  for (int b = 0; b < posCount(); ++b) {
    int sign;
    int img = reflectRoot(rootIdx, b, sign);
    t.sp[b] = static_cast<int16_t>(sign * (img + 1));
  }
  return t;
}

static WeylElem composeTables(const WeylElem& u, const WeylElem& v) {
  // (u*v)(b) = u(v(b))
  WeylElem r;
  r.sp.resize(v.sp.size());
  for (size_t b = 0; b < v.sp.size(); ++b) {
    int s1;
    int j = v.apply(static_cast<int>(b), s1);
    int s2;
    int k = u.apply(j, s2);
    r.sp[b] = static_cast<int16_t>(s1 * s2 * (k + 1));
  }
  return r;
}

void RootSystem::enumerateWeyl(long bound) {
  WeylElem id;
  id.sp.resize(posCount());
  for (int b = 0; b < posCount(); ++b) id.sp[b] = static_cast<int16_t>(b + 1);
  std::vector<WeylElem> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(reflectionTable(i));

  std::map<std::vector<int16_t>, int> seen;
  std::vector<WeylElem> found{id};
  seen[id.sp] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    for (int i = 0; i < rank_; ++i) {
      WeylElem nx = composeTables(gens[i], found[cur]);
      if (seen.emplace(nx.sp, static_cast<int>(found.size())).second) {
        if (static_cast<long>(found.size()) >= bound)
          throw EngineError("Weyl group exceeds enumeration bound");
        found.push_back(nx);
        q.push(static_cast<int>(found.size()) - 1);
      }
    }
  }

  // canonical order: length, then table
  auto lengthOf = [&](const WeylElem& e) {
    int l = 0;
    for (int b = 0; b < posCount(); ++b)
      if (e.sp[b] < 0) ++l;
    return l;
  };
  std::sort(found.begin(), found.end(), [&](const WeylElem& a, const WeylElem& b) {
    int la = lengthOf(a), lb = lengthOf(b);
    if (la != lb) return la < lb;
    return a.sp < b.sp;
  });
  elems_ = std::move(found);
  elemIndex_.clear();
  for (int i = 0; i < static_cast<int>(elems_.size()); ++i) elemIndex_[elems_[i].sp] = i;
  len_.resize(elems_.size());
  for (size_t i = 0; i < elems_.size(); ++i) len_[i] = lengthOf(elems_[i]);
  longest_ = static_cast<int>(elems_.size()) - 1;

  inv_.assign(elems_.size(), -1);
  for (size_t i = 0; i < elems_.size(); ++i) {
    // invert the signed permutation
    WeylElem ivt;
    ivt.sp.resize(posCount());
    for (int b = 0; b < posCount(); ++b) {
      int s;
      int j = elems_[i].apply(b, s);
      ivt.sp[j] = static_cast<int16_t>(s * (b + 1));
    }
    inv_[i] = elemIndex_.at(ivt.sp);
  }

  leftSimple_.assign(rank_, std::vector<int>(elems_.size()));
  rightSimple_.assign(rank_, std::vector<int>(elems_.size()));
  for (int i = 0; i < rank_; ++i) {
    const WeylElem& g = elems_[elemIndex_.at(reflectionTable(i).sp)];
    for (size_t w = 0; w < elems_.size(); ++w) {
      leftSimple_[i][w] = elemIndex_.at(composeTables(g, elems_[w]).sp);
      rightSimple_[i][w] = elemIndex_.at(composeTables(elems_[w], g).sp);
    }
  }
  leftRefl_.assign(posCount(), std::vector<int>(elems_.size()));
  rightRefl_.assign(posCount(), std::vector<int>(elems_.size()));
  for (int r = 0; r < posCount(); ++r) {
    WeylElem t = reflectionTable(r);
    int ti = elemIndex_.at(t.sp);
    roots_[r].reflection = ti;
    roots_[r].reflLength = len_[ti];
    roots_[r].quantum = (len_[ti] == 2 * roots_[r].corootHeight - 1);
    for (size_t w = 0; w < elems_.size(); ++w) {
      leftRefl_[r][w] = elemIndex_.at(composeTables(t, elems_[w]).sp);
      rightRefl_[r][w] = elemIndex_.at(composeTables(elems_[w], t).sp);
    }
  }
}

int RootSystem::weylIndex(const WeylElem& e) const {
  auto it = elemIndex_.find(e.sp);
  if (it == elemIndex_.end()) throw EngineError("element not in Weyl group");
  return it->second;
}

int RootSystem::mul(int u, int v) const {
  return elemIndex_.at(composeTables(elems_[u], elems_[v]).sp);
}

std::vector<int> RootSystem::reducedWord(int w) const {
  std::vector<int> word;
  int cur = w;
  while (cur != 0) {
    int i = 0;
    for (; i < rank_; ++i)
      if (elems_[cur].sp[i] < 0) break;  // w(alpha_i) < 0: right descent
    if (i == rank_) throw InvariantViolation("non-identity element without descent");
    word.push_back(i);
    cur = rightSimple_[i][cur];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::vector<int>> RootSystem::allReducedWords(int w, size_t cap) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // peel right descents in every possible way
  std::function<void(int)> rec = [&](int u) {
    if (out.size() > cap) throw EngineError("too many reduced words");
    if (u == 0) {
      std::vector<int> word(cur.rbegin(), cur.rend());
      out.push_back(word);
      return;
    }
    for (int i = 0; i < rank_; ++i) {
      if (elems_[u].sp[i] < 0) {
        cur.push_back(i);
        rec(rightSimple_[i][u]);
        cur.pop_back();
      }
    }
  };
  rec(w);
  std::sort(out.begin(), out.end());
  return out;
}

Vec RootSystem::act(int w, const Vec& x) const {
  Vec v = x;
  std::vector<int> word = reducedWord(w);
  // w = s_{i1} ... s_{ik} acting left to right from the innermost
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(*it, v);
  return v;
}

std::vector<int> RootSystem::lengthHistogram() const {
  std::vector<int> h(len_[longest_] + 1, 0);
  for (int l : len_) ++h[l];
  return h;
}

std::vector<int> RootSystem::quantumRoots() const {
  std::vector<int> out;
  for (int i = 0; i < posCount(); ++i)
    if (roots_[i].quantum) out.push_back(i);
  return out;
}

int RootSystem::rootIndexBySimple(const std::vector<int>& coords) const {
  auto it = bySimple_.find(coords);
  return it == bySimple_.end() ? -1 : it->second;
}

std::string RootSystem::rootName(int i) const {
  // epsilon coordinates, e.g. "e1-e2", "e1+e2", "e2", "2e1"
  const Vec& v = roots_[i].vec;
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < ambient_; ++j) {
    if (v[j] == 0) continue;
    Rat c = v[j];
    if (c > 0 && !first) os << "+";
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c.str() << "*";
    os << "e" << (j + 1);
    first = false;
  }
  return os.str();
}

}  // namespace nqf
