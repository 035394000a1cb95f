#include "nqf/linalg.hpp"

namespace nqf {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw InvariantViolation("matrix shape mismatch in product");
  QMat m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < o.cols_; ++c) {
        const Rat& w = o.at(k, c);
        if (w != 0) m.at(r, c) += v * w;
      }
    }
  return m;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantViolation("matrix shape mismatch in sum");
  QMat m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantViolation("matrix shape mismatch in difference");
  QMat m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

QMat& QMat::operator*=(const Rat& c) {
  for (Rat& v : a_) v *= c;
  return *this;
}

bool QMat::isZero() const {
  for (const Rat& v : a_)
    if (v != 0) return false;
  return true;
}

bool qmatTrySolve(QMat a, QMat b, QMat& x) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw InvariantViolation("bad shapes in linear solve");
  int n = a.rows(), m = b.cols();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(piv, c), a.at(col, c));
      }
    if (piv != col)
      for (int c = 0; c < m; ++c) std::swap(b.at(piv, c), b.at(col, c));
    Rat inv = Rat(1) / a.at(col, col);
    for (int c = col; c < n; ++c) a.at(col, c) *= inv;
    for (int c = 0; c < m; ++c) b.at(col, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = a.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
      for (int c = 0; c < m; ++c) b.at(r, c) -= f * b.at(col, c);
    }
  }
  x = std::move(b);
  return true;
}

QMat qmatSolve(QMat a, QMat b) {
  QMat x;
  if (!qmatTrySolve(std::move(a), std::move(b), x))
    throw InvariantViolation("singular matrix in linear solve");
  return x;
}

QMat qmatInverse(const QMat& a) { return qmatSolve(a, QMat::identity(a.rows())); }

int qmatRank(QMat a) {
  int n = a.rows(), m = a.cols(), rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < m; ++c) std::swap(a.at(piv, c), a.at(rank, c));
    Rat inv = Rat(1) / a.at(rank, col);
    for (int c = col; c < m; ++c) a.at(rank, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      Rat f = a.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < m; ++c) a.at(r, c) -= f * a.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

QMat qmatNullspace(const QMat& a) {
  int n = a.rows(), m = a.cols();
  QMat e = a;
  std::vector<int> pivotCol;
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (e.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < m; ++c) std::swap(e.at(piv, c), e.at(rank, c));
    Rat inv = Rat(1) / e.at(rank, col);
    for (int c = 0; c < m; ++c) e.at(rank, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      Rat f = e.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < m; ++c) e.at(r, c) -= f * e.at(rank, c);
    }
    pivotCol.push_back(col);
    ++rank;
  }
  std::vector<char> isPivot(m, 0);
  for (int c : pivotCol) isPivot[c] = 1;
  QMat ker(m, m - rank);
  int k = 0;
  for (int c = 0; c < m; ++c) {
    if (isPivot[c]) continue;
    ker.at(c, k) = 1;
    for (int r = 0; r < rank; ++r) ker.at(pivotCol[r], k) = -e.at(r, c);
    ++k;
  }
  return ker;
}

static uint64_t fpInv(uint64_t a, uint64_t p) {
  uint64_t inv = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) inv = static_cast<uint64_t>((unsigned __int128)inv * base % p);
    base = static_cast<uint64_t>((unsigned __int128)base * base % p);
    e >>= 1;
  }
  return inv;
}

uint64_t fpFromRat(const Rat& r, uint64_t p) {
  uint64_t v;
  if (!ratModP(r, p, v)) throw InvariantViolation("denominator not invertible mod p");
  return v;
}

bool fpNonsingular(const QMat& m, uint64_t p) {
  if (m.rows() != m.cols()) return false;
  int n = m.rows();
  std::vector<std::vector<uint64_t>> a(n, std::vector<uint64_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!ratModP(m.at(r, c), p, a[r][c])) return false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(a[piv], a[col]);
    uint64_t inv = fpInv(a[col][col], p);
    for (int c = col; c < n; ++c)
      a[col][c] = static_cast<uint64_t>((unsigned __int128)a[col][c] * inv % p);
    for (int r = col + 1; r < n; ++r) {
      uint64_t f = a[r][col];
      if (f == 0) continue;
      for (int c = col; c < n; ++c) {
        uint64_t s = static_cast<uint64_t>((unsigned __int128)f * a[col][c] % p);
        a[r][c] = (a[r][c] + p - s) % p;
      }
    }
  }
  return true;
}

bool FpPivoter::offer(const std::vector<uint64_t>& col) {
  std::vector<uint64_t> v = col;
  if (static_cast<int>(v.size()) != dim_) throw InvariantViolation("column length mismatch");
  for (size_t k = 0; k < cols_.size(); ++k) {
    uint64_t f = v[pivotRow_[k]];
    if (f == 0) continue;
    const auto& rc = cols_[k];
    for (int r = 0; r < dim_; ++r) {
      uint64_t s = static_cast<uint64_t>((unsigned __int128)f * rc[r] % p_);
      v[r] = (v[r] + p_ - s) % p_;
    }
  }
  int pr = -1;
  for (int r = 0; r < dim_; ++r)
    if (v[r] != 0) {
      pr = r;
      break;
    }
  if (pr < 0) return false;
  uint64_t inv = fpInv(v[pr], p_);
  for (int r = 0; r < dim_; ++r)
    v[r] = static_cast<uint64_t>((unsigned __int128)v[r] * inv % p_);
  pivotRow_.push_back(pr);
  cols_.push_back(std::move(v));
  return true;
}

bool FpPivoter::offer(const QMat& m, int col) {
  std::vector<uint64_t> v(m.rows());
  for (int r = 0; r < m.rows(); ++r) v[r] = fpFromRat(m.at(r, col), p_);
  return offer(v);
}

int ringRank(std::vector<std::vector<RingElem>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  RingElem prev = RingElem(Rat(1), 0);
  bool prevSet = false;
  std::vector<int> colOf(cols);
  for (int c = 0; c < cols; ++c) colOf[c] = c;
  for (int step = 0; step < std::min(rows, cols); ++step) {
    int pr = -1, pc = -1;
    for (int r = step; r < rows && pr < 0; ++r)
      for (int c = step; c < cols; ++c)
        if (!m[r][c].isZero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    std::swap(m[step], m[pr]);
    if (pc != step)
      for (int r = 0; r < rows; ++r) std::swap(m[r][step], m[r][pc]);
    const RingElem pivot = m[step][step];
    for (int r = step + 1; r < rows; ++r) {
      for (int c = step + 1; c < cols; ++c) {
        RingElem num = m[r][c] * pivot - m[r][step] * m[step][c];
        m[r][c] = prevSet ? num.divideExact(prev) : num;
      }
      m[r][step] = RingElem();
    }
    prev = pivot;
    prevSet = true;
    ++rank;
  }
  return rank;
}

}  // namespace nqf
