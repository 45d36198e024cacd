#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "maxrho/error.hpp"

namespace maxrho {

/// Dense square matrix, row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw InputError("SquareMatrix: ragged initializer");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  SquareMatrix operator*(const SquareMatrix& o) const {
    SquareMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        if (sgn_of((*this)(i, k)) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }

  SquareMatrix operator+(const SquareMatrix& o) const {
    SquareMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  SquareMatrix operator-(const SquareMatrix& o) const {
    SquareMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  static int sgn_of(const T& x) { return sgn(x); }

  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = SquareMatrix<mpz_class>;
using RatMatrix = SquareMatrix<mpq_class>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = mpq_class(m(i, j));
  return r;
}

}  // namespace maxrho
