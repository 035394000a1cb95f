#pragma once

#include "nqf/scalars.hpp"

#include <cstdint>
#include <vector>

namespace nqf {

// dense rational matrix
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  static QMat identity(int n);
  QMat transpose() const;
  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat& operator*=(const Rat& c);
  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool isZero() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// A X = B for square nonsingular A; throws InvariantViolation when singular
QMat qmatSolve(QMat a, QMat b);
bool qmatTrySolve(QMat a, QMat b, QMat& x);
QMat qmatInverse(const QMat& a);
int qmatRank(QMat a);
// columns span the right kernel of a
QMat qmatNullspace(const QMat& a);

// r mod p; requires the denominator to be invertible mod p
uint64_t fpFromRat(const Rat& r, uint64_t p);
bool fpNonsingular(const QMat& m, uint64_t p);

// Incremental independence filter over F_p: columns are offered one at a
// time and accepted when independent of the accepted set.
class FpPivoter {
 public:
  FpPivoter(uint64_t p, int dim) : p_(p), dim_(dim) {}
  bool offer(const std::vector<uint64_t>& col);
  bool offer(const QMat& m, int col);
  int rank() const { return static_cast<int>(cols_.size()); }

 private:
  uint64_t p_;
  int dim_;
  std::vector<int> pivotRow_;
  std::vector<std::vector<uint64_t>> cols_;  // reduced, unit at own pivot row
};

// rank of a polynomial matrix over the fraction field, by fraction-free
// elimination
int ringRank(std::vector<std::vector<RingElem>> m);

}  // namespace nqf
