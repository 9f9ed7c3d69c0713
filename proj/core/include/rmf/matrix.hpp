#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rmf/errors.hpp"
#include "rmf/rational.hpp"

namespace rmf {

// Dense matrix over an exact ring/field T.  T needs default construction
// (zero), +, -, *, is_zero(), ==; the elimination routines additionally
// need inv().  Multiplication skips zero entries, so sparse operands cost
// what their support costs.
template <typename T>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n, const T& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (const T& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_square() const { return r_ == c_; }

  Matrix operator-() const {
    Matrix out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = T{} - a_[i];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.match(b, "+");
    for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] = a.a_[i] + b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.match(b, "-");
    for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] = a.a_[i] - b.a_[i];
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw StructuralError("Matrix: shape mismatch in *");
    Matrix out(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i) {
      for (int k = 0; k < a.c_; ++k) {
        const T& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) {
          const T& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          out.at(i, j) = out.at(i, j) + aik * bkj;
        }
      }
    }
    return out;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

  Matrix scale(const T& k) const {
    Matrix out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * k;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  T trace() const {
    if (!is_square()) throw StructuralError("Matrix::trace: not square");
    T acc{};
    for (int i = 0; i < r_; ++i) acc = acc + at(i, i);
    return acc;
  }

  // Commutator [a, b] = ab - ba.
  friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

  // Kronecker product: (a (x) b)[(i1,i2),(j1,j2)] = a[i1,j1] * b[i2,j2].
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.r_ * b.r_, a.c_ * b.c_);
    for (int i1 = 0; i1 < a.r_; ++i1)
      for (int j1 = 0; j1 < a.c_; ++j1) {
        const T& x = a.at(i1, j1);
        if (x.is_zero()) continue;
        for (int i2 = 0; i2 < b.r_; ++i2)
          for (int j2 = 0; j2 < b.c_; ++j2) {
            const T& y = b.at(i2, j2);
            if (y.is_zero()) continue;
            out.at(i1 * b.r_ + i2, j1 * b.c_ + j2) = x * y;
          }
      }
    return out;
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out.at(i, j) = f(at(i, j));
    return out;
  }

  size_t nonzero_count() const {
    size_t n = 0;
    for (const T& x : a_)
      if (!x.is_zero()) ++n;
    return n;
  }

 private:
  void match(const Matrix& o, const char* op) const {
    if (r_ != o.r_ || c_ != o.c_)
      throw StructuralError(std::string("Matrix: shape mismatch in ") + op);
  }

  int r_, c_;
  std::vector<T> a_;
};

// Complexity measure used for pivot selection during exact elimination
// (prefer the structurally simplest nonzero pivot; deterministic).
inline long pivot_cost(const Rational& x) {
  return static_cast<long>(mpz_size(x.num().get_mpz_t()) + mpz_size(x.den().get_mpz_t()));
}

template <typename T>
long pivot_cost(const T& x) {
  long n = static_cast<long>(x.num().term_count());
  for (const auto& [f, e] : x.den_factors()) n += e * static_cast<long>(f.term_count());
  return n;
}

// In-place reduced row echelon form over a field.  Returns the list of
// pivot columns.  Deterministic: among the nonzero candidates of a column
// it picks the cheapest (ties broken by row index).
template <typename T>
std::vector<int> rref(Matrix<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    long best_cost = 0;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      long c = pivot_cost(m.at(i, col));
      if (best < 0 || c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(best, j));
    T piv_inv = m.at(row, col).inv();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * piv_inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      T f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right nullspace { x : m x = 0 }.
template <typename T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, const T& one) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = one;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = T{} - m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a square matrix; DomainError when singular.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m, const T& one) {
  if (!m.is_square()) throw StructuralError("inverse: not square");
  int n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = one;
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw DomainError("inverse: singular matrix");
  Matrix<T> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

// Determinant via fraction-producing elimination (exact over a field).
template <typename T>
T det(Matrix<T> m, const T& one) {
  if (!m.is_square()) throw StructuralError("det: not square");
  int n = m.rows();
  T acc = one;
  bool neg = false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return T{};
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(piv, j));
      neg = !neg;
    }
    acc = acc * m.at(col, col);
    T inv = m.at(col, col).inv();
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      T f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return neg ? T{} - acc : acc;
}

}  // namespace rmf
