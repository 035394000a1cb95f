#pragma once

#include <map>
#include <string>
#include <vector>

#include "nqf/nichols.hpp"
#include "nqf/roots.hpp"
#include "nqf/scalars.hpp"

namespace nqf {

// Coordinate system for the polynomial ring: ambient epsilon coordinates
// x1..xN, or fundamental-weight coordinates w1..wn.
enum class Coords { Ambient, Weight };

// Sparse polynomial with coefficients in the q-scalar ring.  All exponent
// vectors in `terms` have length `nvars`, and every operation checks that
// its operands share the same coordinate system.
struct CPoly {
  Coords coords = Coords::Weight;
  int nvars = 0;
  std::map<std::vector<int>, RingElem> terms;

  static CPoly zero(Coords c, int n);
  static CPoly constant(Coords c, int n, const Rat& v);
  static CPoly variable(Coords c, int n, int i);

  bool isZero() const { return terms.empty(); }
  int degree() const;  // total degree in the x variables, -1 for zero
  bool isConstant() const;
  Rat constantValue() const;  // coefficient of the empty monomial at q = 0

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly& operator*=(const Rat& c);
  CPoly& operator*=(const RingElem& c);
  bool operator==(const CPoly& o) const;
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  // homogeneous under deg x_i = 1, deg q_i = 2
  bool isHomogeneous(int* degOut = nullptr) const;
  CPoly classicalLimit() const;  // q -> 0 on every coefficient

  void prune();
  std::string str() const;
};

// Element of the Nichols algebra split by degree.
using GradedElem = std::map<int, Elem>;

// Per-orbit coefficients c_alpha, constant on Weyl orbits by construction.
struct CoeffConfig {
  Rat cLong = Rat(1);
  Rat cShort = Rat(1);
  Rat at(const RootSystem& rs, int rootIdx) const {
    return rs.root(rootIdx).isLong ? cLong : cShort;
  }
};

// Polynomial-side operations bound to a root system: Weyl action, Demazure
// operators, BGG and Schubert representatives, and the map mu into the
// Nichols algebra.
class PolyOps {
 public:
  explicit PolyOps(const RootSystem& rs);

  const RootSystem& rootSystem() const { return *rs_; }
  int vars(Coords c) const;

  CPoly zero(Coords c) const { return CPoly::zero(c, vars(c)); }
  CPoly constant(Coords c, const Rat& v) const { return CPoly::constant(c, vars(c), v); }
  CPoly variable(Coords c, int i) const { return CPoly::variable(c, vars(c), i); }
  CPoly linearForm(Coords c, const std::vector<Rat>& coeffs) const;

  // the root alpha_{rootIdx} as a linear polynomial
  CPoly rootForm(Coords c, int rootIdx) const;
  // pairing of a linear polynomial against the coroot of root rootIdx
  Rat corootPair(const CPoly& linear, int rootIdx) const;

  CPoly wAct(int w, const CPoly& f) const;
  CPoly demazure(int rootIdx, const CPoly& f) const;  // (f - s_a(f)) / alpha
  CPoly demazureWord(const std::vector<int>& simples, const CPoly& f) const;
  CPoly demazureW(int w, const CPoly& f) const;  // along a reduced word of w

  // product of the positive roots over |W|, and its divided differences
  CPoly bggTop(Coords c) const;
  CPoly bggClass(int w, Coords c) const;
  // type A only: divided differences of the staircase monomial x1^n...xn
  CPoly schubertA(int w) const;

  // substitute x_i -> sum_j <e_i, alpha_j^vee> w_j
  CPoly restrictToWeights(const CPoly& f) const;

  // Bazlov's map, extended to polynomials as an algebra map.  The image of
  // an inhomogeneous polynomial is returned one degree at a time.
  Elem muLinear(const NicholsAlgebra& alg, const CPoly& linear,
                const CoeffConfig& cfg = {}) const;
  GradedElem mu(const NicholsAlgebra& alg, const CPoly& f, const CoeffConfig& cfg = {}) const;

 private:
  const RootSystem* rs_;

  CPoly actOnVariable(int w, Coords c, int i) const;
  CPoly substitute(const CPoly& f, const std::vector<CPoly>& images) const;
};

}  // namespace nqf
