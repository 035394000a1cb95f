#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nqf/nichols.hpp"
#include "nqf/polyring.hpp"

namespace nqf {

// Dense matrix over the q-scalar ring.
struct RMat {
  int rows = 0, cols = 0;
  std::vector<RingElem> v;
  RMat() = default;
  RMat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c) {}
  RingElem& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  const RingElem& at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
  bool isZero() const;
  bool operator==(const RMat& o) const { return rows == o.rows && cols == o.cols && v == o.v; }
};

RMat rmatFromQ(const QMat& m, const RingElem& scale);
RMat rmatMul(const RMat& a, const RMat& b);
void rmatAdd(RMat& a, const RMat& b);
RMat rmatScaled(const RMat& m, const RingElem& c);

// Block operator on the Nichols algebra with entries in the q-scalar ring.
// Blocks are keyed by (degree, class) on both sides.  On a truncated algebra
// an operator is represented faithfully only for source degrees <= srcCap;
// composition shrinks the cap according to how far the inner factor raises
// degrees.
class GradedOp {
 public:
  using Key = std::pair<int, int>;
  static constexpr int kUnbounded = 1 << 20;

  std::map<Key, std::map<Key, RMat>> blocks;  // src -> dst -> matrix
  int srcCap = kUnbounded;

  void prune();
  bool isZeroUpTo(int cap) const;
  int maxRaise() const;  // largest dst-src degree jump present
  GradedOp& operator+=(const GradedOp& o);
  GradedOp scaled(const RingElem& c) const;
};

// a applied after b; the result is capped so every retained block is exact
GradedOp opCompose(const GradedOp& a, const GradedOp& b);
int opJointCap(const GradedOp& a, const GradedOp& b);
bool opEqualUpTo(const GradedOp& a, const GradedOp& b, int cap);

// Vector of the Nichols algebra with q-scalar coordinates, split into
// (degree, class) blocks.
using QVec = std::map<GradedOp::Key, std::vector<RingElem>>;

void qvecPrune(QVec& x);
QVec applyOp(const GradedOp& op, const QVec& x);
QVec qvecFromGraded(const GradedElem& x);

struct QuantumInvariant {
  int degree = 0;
  CPoly classical;  // canonical classical limit, weight coordinates
  CPoly quantum;    // the searched polynomial with that limit
};

// Quantized operators and the quantum layer built on a sealed Nichols
// algebra.  The coefficient configuration fixes c_alpha per orbit.
class QuantumOps {
 public:
  explicit QuantumOps(const NicholsAlgebra& alg, const CoeffConfig& cfg = {});

  const RootSystem& rootSystem() const { return *rs_; }
  const NicholsAlgebra& algebra() const { return *alg_; }
  const PolyOps& polyOps() const { return poly_; }
  const CoeffConfig& coeffs() const { return cfg_; }
  int defaultCap() const;  // kUnbounded when complete, topDegree-1 otherwise

  Rat dFactor(int rootIdx) const;
  QMonomial corootMono(int rootIdx) const;  // exponents of q^{alpha_vee}
  RingElem corootQ(int rootIdx) const;      // the monomial as a scalar

  GradedOp dbarWordOp(int w) const;  // derivation chain along a reduced word
  const GradedOp& dbarReflOp(int rootIdx) const;
  const GradedOp& lmulOp(int rootIdx) const;
  const GradedOp& quantizeRoot(int rootIdx) const;
  const GradedOp& eta(int simple) const;
  GradedOp muTildeLinear(const CPoly& linear) const;
  GradedOp muTildePoly(const CPoly& f) const;  // weight coordinates
  GradedOp identityOp(const RingElem& c = RingElem(Rat(1))) const;

  QVec vacuum() const;
  QVec muTildeVac(const CPoly& f) const;  // f((eta))(1) without composing
  std::vector<RingElem> flatten(const QVec& x) const;

  // polynomial realization on Sym(h)
  CPoly yApply(int simple, const CPoly& f) const;
  CPoly yEval(const CPoly& f) const;  // f((Y))(1)
  CPoly quantizePoly(const CPoly& f) const;

  std::vector<int> fundamentalDegrees() const;
  CPoly classicalInvariant(int which) const;  // canonical, weight coordinates
  std::vector<QuantumInvariant> quantumInvariants() const;
  std::vector<CPoly> gkPolynomials() const;  // type A, ambient coordinates

  // filtration ranks of the span of muTildeVac over monomials, degree by degree
  std::vector<int> gradedRanks(int maxXDeg) const;

  struct Prop1Data {
    std::vector<std::pair<int, int>> A, B, Aprime, Bprime;  // root index pairs
    std::vector<int> match;  // Aprime position -> Bprime position, -1 if none
    bool bijective = false;
    bool symmetricOk = false;  // dyadic symmetry along every matched pair
  };
  Prop1Data prop1Sets() const;

 private:
  const NicholsAlgebra* alg_;
  const RootSystem* rs_;
  PolyOps poly_;
  CoeffConfig cfg_;

  mutable std::map<int, GradedOp> dbarCache_, lmulCache_, genCache_, etaCache_;
};

}  // namespace nqf
