#include "maxrho/polynomial.hpp"

namespace maxrho {

IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<mpz_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) throw InputError("to_integer: non-integral coefficient " + x.get_str());
    c.emplace_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial int_poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long x : coeffs) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

RatPolynomial shift_argument(const RatPolynomial& p, const mpq_class& k) {
  // Horner in the polynomial ring: acc = acc * (x - k) + c_i.
  const RatPolynomial linear{mpq_class(-k), mpq_class(1)};
  RatPolynomial acc;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * linear + RatPolynomial::constant(c[i]);
  return acc;
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1), mpq_class(0));
  const mpq_class& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const mpq_class q = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(mpq_class(1) / a.leading());
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return p;
  const RatPolynomial g = gcd(p, p.derivative());
  RatPolynomial q = divmod(p, g).first;
  return q.scaled(mpq_class(1) / q.leading());
}

}  // namespace maxrho
