#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "maxrho/error.hpp"

namespace maxrho {

/// Exact univariate polynomial, constant term first. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }
  static Polynomial monomial(T coeff, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw InputError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator-(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    std::vector<T> r = c_;
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r));
  }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial scaled(const T& s) const {
    std::vector<T> r = c_;
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  /// Horner evaluation at an exact rational point.
  mpq_class eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  int sign_at(const mpq_class& x) const { return sgn(eval(x)); }

  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + mpq_class(c_[i]).get_d();
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
  }

  /// Human-readable form in the variable x, highest power first.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (sgn(c_[i]) == 0) continue;
      const bool neg = sgn(c_[i]) < 0;
      T mag = neg ? T(-c_[i]) : c_[i];
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = (mag == T(1));
      if (!unit || i == 0) out += mag.get_str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

/// Converts a polynomial whose coefficients are all integers; throws otherwise.
IntPolynomial to_integer(const RatPolynomial& p);

/// Convenience: integer polynomial from machine integers, constant term first.
IntPolynomial int_poly(std::initializer_list<long> coeffs);

/// q(x) = p(x - k).
RatPolynomial shift_argument(const RatPolynomial& p, const mpq_class& k);

/// Euclidean division; divisor must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Monic greatest common divisor (zero if both are zero).
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// p / gcd(p, p'), made monic: same distinct roots, all simple.
RatPolynomial squarefree_part(const RatPolynomial& p);

}  // namespace maxrho
