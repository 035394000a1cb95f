#ifndef NQF_SCALARS_HPP
#define NQF_SCALARS_HPP

// Coefficient ring R = Q[q^{a_1},...,q^{a_n}] attached to a rank-n root
// system: Laurent monomials in the simple-coroot parameters with exact
// rational coefficients.  A monomial exponent vector e means
// q^{e_1 a_1 + ... + e_n a_n}; exponents may go negative (the type-B
// display map produces q_i^{-1} factors), although everything produced
// by the quantization itself stays polynomial.

#include "nqf/rational.hpp"

#include <map>
#include <vector>

namespace nqf {

using QMonomial = std::vector<int>;

// graded-lex: total degree first, then lexicographic on the exponents
struct QMonoLess {
  bool operator()(const QMonomial& a, const QMonomial& b) const;
};

int qmonoDegree(const QMonomial& m);
QMonomial qmonoMul(const QMonomial& a, const QMonomial& b);

class RingElem {
public:
  RingElem() = default;
  explicit RingElem(const Rat& c, int nvars = 0);
  static RingElem monomial(const QMonomial& m, const Rat& c = Rat(1));
  static RingElem zero() { return RingElem(); }
  static RingElem one(int nvars = 0) { return RingElem(Rat(1), nvars); }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rat constantPart() const;  // coefficient of q^0
  int termCount() const { return static_cast<int>(terms_.size()); }

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  RingElem& operator*=(const RingElem& o);
  RingElem operator*(const Rat& c) const;
  RingElem& operator*=(const Rat& c);
  bool operator==(const RingElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  void addTerm(const QMonomial& m, const Rat& c);

  // q -> 0 limit: keeps only terms whose exponent vector is all zero.
  // Only meaningful on polynomial (exponent >= 0) elements; asserted.
  RingElem classicalLimit() const;
  bool isPolynomial() const;  // no negative exponents

  // doubled grading: deg q^{a_i} = 2, so a monomial weighs 2*sum(exps)
  bool isHomogeneous(int* degOut = nullptr) const;

  // exact division, used by fraction-free elimination; throws
  // InvariantViolation if the division does not come out exact
  RingElem divideExact(const RingElem& divisor) const;

  // "3/2*q1^2*q2", "q1-q2", "1", "0"; terms in ascending graded-lex order
  std::string str() const;
  // same, but with monomials rewritten through an integer linear map of
  // exponents (the type-B epsilon-coordinate display)
  std::string strMapped(const std::vector<std::vector<int>>& colToEps) const;

  const std::map<QMonomial, Rat, QMonoLess>& terms() const { return terms_; }

private:
  std::map<QMonomial, Rat, QMonoLess> terms_;
};

inline RingElem operator*(const Rat& c, const RingElem& e) { return e * c; }

std::string qmonoStr(const QMonomial& m, const std::string& varPrefix = "q");

}  // namespace nqf

#endif
