#include "nqf/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace nqf {

bool ratModP(const Rat& r, uint64_t p, uint64_t& out) {
  const Int& num = numerator(r);
  const Int& den = denominator(r);
  uint64_t dn = static_cast<uint64_t>(mpz_fdiv_ui(den.backend().data(), p));
  if (dn == 0) return false;
  uint64_t nn = static_cast<uint64_t>(mpz_fdiv_ui(num.backend().data(), p));
  // modular inverse of dn via Fermat (p prime)
  uint64_t inv = 1, base = dn, e = p - 2;
  while (e) {
    if (e & 1) inv = static_cast<uint64_t>((unsigned __int128)inv * base % p);
    base = static_cast<uint64_t>((unsigned __int128)base * base % p);
    e >>= 1;
  }
  out = static_cast<uint64_t>((unsigned __int128)nn * inv % p);
  return true;
}

int qmonoDegree(const QMonomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool QMonoLess::operator()(const QMonomial& a, const QMonomial& b) const {
  int da = qmonoDegree(a), db = qmonoDegree(b);
  if (da != db) return da < db;
  // within a degree, q1-heavy monomials come first; missing tail entries
  // count as zero so the order is compatible with products
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int xa = i < a.size() ? a[i] : 0;
    int xb = i < b.size() ? b[i] : 0;
    if (xa != xb) return xa > xb;
  }
  return false;
}

// canonical form: exponent vectors carry no trailing zeros, so constants
// built with any declared rank compare and multiply consistently
static QMonomial qmonoCanon(QMonomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

QMonomial qmonoMul(const QMonomial& a, const QMonomial& b) {
  QMonomial r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return qmonoCanon(std::move(r));
}

RingElem::RingElem(const Rat& c, int nvars) {
  (void)nvars;
  if (c != 0) terms_[QMonomial()] = c;
}

RingElem RingElem::monomial(const QMonomial& m, const Rat& c) {
  RingElem e;
  if (c != 0) e.terms_[qmonoCanon(m)] = c;
  return e;
}

bool RingElem::isConstant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return qmonoDegree(terms_.begin()->first) == 0 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

Rat RingElem::constantPart() const {
  for (const auto& [m, c] : terms_) {
    if (std::all_of(m.begin(), m.end(), [](int e) { return e == 0; })) return c;
  }
  return Rat(0);
}

void RingElem::addTerm(const QMonomial& m, const Rat& c) {
  if (c == 0) return;
  QMonomial key = qmonoCanon(m);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElem& RingElem::operator+=(const RingElem& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

RingElem RingElem::operator+(const RingElem& o) const {
  RingElem r = *this;
  r += o;
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const {
  RingElem r = *this;
  r -= o;
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
  RingElem r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.addTerm(qmonoMul(m1, m2), c1 * c2);
  return r;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  *this = *this * o;
  return *this;
}

RingElem RingElem::operator*(const Rat& c) const {
  RingElem r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

RingElem& RingElem::operator*=(const Rat& c) {
  *this = *this * c;
  return *this;
}

RingElem RingElem::classicalLimit() const {
  RingElem r;
  for (const auto& [m, c] : terms_) {
    if (std::all_of(m.begin(), m.end(), [](int e) { return e == 0; })) r.terms_[m] = c;
  }
  return r;
}

bool RingElem::isPolynomial() const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (int e : m)
      if (e < 0) return false;
  }
  return true;
}

bool RingElem::isHomogeneous(int* degOut) const {
  bool first = true;
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int d = 2 * qmonoDegree(m);
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (degOut) *degOut = first ? 0 : deg;
  return true;
}

RingElem RingElem::divideExact(const RingElem& divisor) const {
  if (divisor.isZero()) throw InvariantViolation("division by zero RingElem");
  RingElem rem = *this, quot;
  auto lead = [](const RingElem& e) { return std::prev(e.terms_.end()); };
  auto dlt = lead(divisor);
  // generous bound: exact divisions in fraction-free elimination are tiny
  long guard = 64 + 16L * (termCount() + 1) * (divisor.termCount() + 1);
  while (!rem.isZero()) {
    if (--guard < 0) throw InvariantViolation("non-exact RingElem division");
    auto rlt = lead(rem);
    QMonomial qm(std::max(rlt->first.size(), dlt->first.size()), 0);
    for (size_t i = 0; i < rlt->first.size(); ++i) qm[i] += rlt->first[i];
    for (size_t i = 0; i < dlt->first.size(); ++i) qm[i] -= dlt->first[i];
    Rat qc = rlt->second / dlt->second;
    quot.addTerm(qm, qc);
    rem -= RingElem::monomial(qm, qc) * divisor;
  }
  return quot;
}

std::string qmonoStr(const QMonomial& m, const std::string& varPrefix) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (any) os << "*";
    os << varPrefix << (i + 1);
    if (m[i] != 1) os << "^" << m[i];
    any = true;
  }
  return any ? os.str() : std::string();
}

static std::string termsToStr(const std::map<QMonomial, Rat, QMonoLess>& terms,
                              const std::vector<std::vector<int>>* colToEps) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string mono;
    if (colToEps) {
      // rewrite exponents through the integer map: eps_j exponent =
      // sum_i m_i * (*colToEps)[i][j]
      std::vector<int> eps;
      if (!colToEps->empty()) eps.assign((*colToEps)[0].size(), 0);
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < eps.size(); ++j) eps[j] += m[i] * (*colToEps)[i][j];
      mono = qmonoStr(eps);
    } else {
      mono = qmonoStr(m);
    }
    std::string coeff = c.str();
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (!first) os << (neg ? "" : "+");
    first = false;
    if (mono.empty()) {
      os << coeff;
    } else if (c == 1) {
      os << mono;
    } else if (c == -1) {
      os << "-" << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

std::string RingElem::str() const { return termsToStr(terms_, nullptr); }

std::string RingElem::strMapped(const std::vector<std::vector<int>>& colToEps) const {
  return termsToStr(terms_, &colToEps);
}

}  // namespace nqf
