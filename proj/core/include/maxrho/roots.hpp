#pragma once

#include <optional>
#include <vector>

#include "maxrho/polynomial.hpp"

namespace maxrho {

/// Half-open rational interval (lo, hi]. When produced for a maximum root,
/// exactly one root lies inside and none lies above hi. lo == hi marks a root
/// located exactly.
struct RootBracket {
  mpq_class lo;
  mpq_class hi;

  bool exact() const { return lo == hi; }
  double midpoint() const { return mpq_class((lo + hi) / 2).get_d(); }
};

/// Sturm chain of the square-free part of a polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const RatPolynomial& p);

  const RatPolynomial& squarefree() const { return chain_.front(); }

  /// Distinct real roots in (lo, hi].
  int count(const mpq_class& lo, const mpq_class& hi) const;
  /// Distinct real roots in (lo, +inf).
  int count_above(const mpq_class& lo) const;
  int count_real() const;

 private:
  int variations(const mpq_class& x) const;
  int variations_at_infinity(bool positive) const;

  std::vector<RatPolynomial> chain_;
};

/// 1 + max |a_i / a_n|; every root has absolute value below it.
mpq_class cauchy_bound(const RatPolynomial& p);

/// Brackets the maximum real root. Throws InputError if p has no real root.
RootBracket isolate_max_root(const RatPolynomial& p);

/// Bisects a single-root bracket until hi - lo <= width (or hits the root).
RootBracket refine(const SturmSequence& s, RootBracket b, const mpq_class& width);

/// Maximum real root inside a caller-supplied bracket, to within `width`.
/// The bracket must hold exactly one root in (lo, hi] and none above hi.
double max_real_root(const RatPolynomial& p, const RootBracket& bracket, double width = 1e-12);
double max_real_root(const IntPolynomial& p, const RootBracket& bracket, double width = 1e-12);

/// Isolates automatically, then refines.
double max_real_root(const RatPolynomial& p, double width = 1e-12);
double max_real_root(const IntPolynomial& p, double width = 1e-12);

/// Exact three-way comparison of maximum real roots: -1, 0, +1.
int compare_max_roots(const RatPolynomial& p, const RatPolynomial& q);
int compare_max_roots(const IntPolynomial& p, const IntPolynomial& q);

/// Brackets every distinct real root in (lo, hi], in increasing order.
std::vector<RootBracket> isolate_roots(const SturmSequence& s, const mpq_class& lo, const mpq_class& hi);

/// Exact test that d(x) >= 0 for every x in [lo, hi] (hi absent: [lo, +inf)).
bool nonnegative_on(const RatPolynomial& d, const mpq_class& lo, const std::optional<mpq_class>& hi);

/// True iff p2(x) >= p1(x) for all x >= from. Touching counts as dominating.
bool poly_dominates(const RatPolynomial& p1, const RatPolynomial& p2, const mpq_class& from);
bool poly_dominates(const IntPolynomial& p1, const IntPolynomial& p2, const mpq_class& from);

/// True iff p2(x - k) - p1(x) >= 0 for all x in [lo, hi]. Requires k >= 0.
bool shifted_root_bound(const RatPolynomial& p1, const RatPolynomial& p2, const mpq_class& k,
                        const mpq_class& lo, const mpq_class& hi);
bool shifted_root_bound(const IntPolynomial& p1, const IntPolynomial& p2, const mpq_class& k,
                        const mpq_class& lo, const mpq_class& hi);

}  // namespace maxrho
