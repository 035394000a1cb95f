#include "nqf/words.hpp"

#include <sstream>

namespace nqf {

std::string wordStr(const NcWord& w) {
  std::ostringstream os;
  if (w.empty()) return "1";
  for (uint8_t a : w) os << '[' << int(a) << ']';
  return os.str();
}

NcPoly NcPoly::word(const NcWord& w, const Rat& c) {
  NcPoly p;
  if (c != 0) p.terms[w] = c;
  return p;
}

void NcPoly::add(const NcWord& w, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, v] : terms) v *= c;
  return *this;
}

std::string NcPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    if (a != 1) os << ratStr(a) << "*";
    os << wordStr(w);
  }
  return os.str();
}

int WordOps::wdeg(const NcWord& w) const {
  int g = rs_->identity();
  for (uint8_t a : w) g = rs_->mulReflRight(g, a);
  return g;
}

std::pair<NcWord, int> WordOps::act(int w, const NcWord& x) const {
  NcWord out;
  out.reserve(x.size());
  int sign = 1;
  const WeylElem& we = rs_->weyl(w);
  for (uint8_t a : x) {
    int s = 0;
    out.push_back(static_cast<uint8_t>(we.apply(a, s)));
    sign *= s;
  }
  return {out, sign};
}

NcPoly WordOps::actPoly(int w, const NcPoly& x) const {
  NcPoly out;
  for (const auto& [word, c] : x.terms) {
    auto [aw, sign] = act(w, word);
    out.add(aw, c * sign);
  }
  return out;
}

NcPoly WordOps::rightDer(const NcWord& x, int c) const {
  NcPoly out;
  int t = rs_->reflectionOf(c);
  const WeylElem& sc = rs_->weyl(t);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] != c) continue;
    NcWord w(x.begin(), x.begin() + i);
    int sign = 1;
    for (size_t j = i + 1; j < x.size(); ++j) {
      int s = 0;
      w.push_back(static_cast<uint8_t>(sc.apply(x[j], s)));
      sign *= s;
    }
    out.add(w, Rat(sign));
  }
  return out;
}

NcPoly WordOps::rightDerPoly(const NcPoly& x, int c) const {
  NcPoly out;
  for (const auto& [w, coef] : x.terms) {
    NcPoly d = rightDer(w, c);
    d *= coef;
    out += d;
  }
  return out;
}

NcPoly WordOps::leftDer(const NcWord& x, int c) const {
  NcPoly out;
  int t = rs_->reflectionOf(c);
  const WeylElem& sc = rs_->weyl(t);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] != c) continue;
    NcWord w;
    w.reserve(x.size() - 1);
    int sign = 1;
    for (size_t j = 0; j < i; ++j) {
      int s = 0;
      w.push_back(static_cast<uint8_t>(sc.apply(x[j], s)));
      sign *= s;
    }
    w.insert(w.end(), x.begin() + i + 1, x.end());
    out.add(w, Rat(sign));
  }
  return out;
}

NcPoly WordOps::leftDerPoly(const NcPoly& x, int c) const {
  NcPoly out;
  for (const auto& [w, coef] : x.terms) {
    NcPoly d = leftDer(w, c);
    d *= coef;
    out += d;
  }
  return out;
}

Rat WordOps::pair(const NcWord& xi, const NcWord& x) const {
  if (xi.size() != x.size()) return Rat(0);
  if (xi.empty()) return Rat(1);
  if (xi.size() == 1) return Rat(xi[0] == x[0] ? 1 : 0);
  auto key = std::make_pair(xi, x);
  auto it = pairMemo_.find(key);
  if (it != pairMemo_.end()) return it->second;
  // <[c] eta, x> = <eta, x <- D_c>
  NcWord eta(xi.begin() + 1, xi.end());
  NcPoly d = rightDer(x, xi[0]);
  Rat v(0);
  for (const auto& [w, c] : d.terms) v += c * pair(eta, w);
  pairMemo_.emplace(key, v);
  return v;
}

Rat WordOps::pairDual(const NcWord& xi, const NcWord& x) const {
  if (xi.size() != x.size()) return Rat(0);
  if (xi.empty()) return Rat(1);
  if (xi.size() == 1) return Rat(xi[0] == x[0] ? 1 : 0);
  auto key = std::make_pair(xi, x);
  auto it = pairDualMemo_.find(key);
  if (it != pairDualMemo_.end()) return it->second;
  // peel the last letter c of x: sum over single-letter left components of xi
  int c = x.back();
  NcWord y(x.begin(), x.end() - 1);
  Rat v(0);
  int g = rs_->identity();
  for (size_t i = 0; i < xi.size(); ++i) {
    int sign = 0;
    int r = rs_->weyl(g).apply(xi[i], sign);
    if (r == c) {
      NcWord rest;
      rest.reserve(xi.size() - 1);
      rest.insert(rest.end(), xi.begin(), xi.begin() + i);
      rest.insert(rest.end(), xi.begin() + i + 1, xi.end());
      v += Rat(sign) * pairDual(rest, y);
    }
    g = rs_->mulReflRight(g, xi[i]);
  }
  pairDualMemo_.emplace(key, v);
  return v;
}

Rat WordOps::pairPoly(const NcPoly& xi, const NcPoly& x) const {
  Rat v(0);
  for (const auto& [wx, cx] : xi.terms)
    for (const auto& [wy, cy] : x.terms) v += cx * cy * pair(wx, wy);
  return v;
}

std::vector<WordOps::Split> WordOps::coproduct(const NcWord& x, int leftLen) const {
  std::vector<Split> out;
  int n = static_cast<int>(x.size());
  if (leftLen < 0 || leftLen > n) return out;
  // iterate over subsets of positions assigned to the left tensor factor
  std::vector<int> pick(leftLen);
  std::vector<char> inLeft(n, 0);
  auto emit = [&]() {
    std::fill(inLeft.begin(), inLeft.end(), 0);
    for (int p : pick) inLeft[p] = 1;
    NcWord left, right;
    int sign = 1;
    int g = rs_->identity();  // product of degrees of right letters seen so far
    for (int i = 0; i < n; ++i) {
      if (inLeft[i]) {
        int s = 0;
        left.push_back(static_cast<uint8_t>(rs_->weyl(g).apply(x[i], s)));
        sign *= s;
      } else {
        right.push_back(x[i]);
        g = rs_->mulReflRight(g, x[i]);
      }
    }
    out.push_back({Rat(sign), left, right});
  };
  // enumerate leftLen-subsets in lexicographic order
  for (int i = 0; i < leftLen; ++i) pick[i] = i;
  while (true) {
    emit();
    int i = leftLen - 1;
    while (i >= 0 && pick[i] == n - leftLen + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < leftLen; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<NcWord> WordOps::allWords(int len) const {
  std::vector<NcWord> out;
  int m = rs_->posCount();
  NcWord w(len, 0);
  while (true) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[i] == m - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  if (len == 0) out.assign(1, NcWord{});
  return out;
}

}  // namespace nqf
