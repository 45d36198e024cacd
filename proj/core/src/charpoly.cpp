#include "maxrho/charpoly.hpp"

namespace maxrho {

namespace {

template <class T, class Divide>
Polynomial<T> faddeev_leverrier(const SquareMatrix<T>& a, Divide divide) {
  const std::size_t n = a.size();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  SquareMatrix<T> m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    SquareMatrix<T> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const T tr = (a * m).trace();
    c[n - k] = divide(T(-tr), k);
  }
  return Polynomial<T>(std::move(c));
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& m) {
  return faddeev_leverrier(m, [](const mpz_class& x, std::size_t k) {
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
    return q;
  });
}

RatPolynomial char_poly(const RatMatrix& m) {
  return faddeev_leverrier(m, [](const mpq_class& x, std::size_t k) {
    return mpq_class(x / mpq_class(static_cast<unsigned long>(k)));
  });
}

}  // namespace maxrho
