#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coxlink/errors.hpp"

namespace coxlink {

/// Dense square matrix over an exact ring. Row-major storage.
template <class T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw ValidationError("matrix rows must form a square");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[check(i, j)]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[check(i, j)]; }

  SquareMatrix transpose() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    same_size(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    same_size(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(SquareMatrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.same_size(b);
    const std::size_t n = a.n_;
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.n_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.n_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t check(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw ValidationError("matrix index out of range");
    return i * n_ + j;
  }
  void same_size(const SquareMatrix& o) const {
    if (o.n_ != n_) throw ValidationError("matrix dimensions differ");
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<Integer>;
using RationalMatrix = SquareMatrix<Rational>;

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// Fraction-free (Bareiss) determinant; exact for integer matrices.
inline Integer determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace coxlink
