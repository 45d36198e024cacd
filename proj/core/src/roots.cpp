#include "maxrho/roots.hpp"

#include <algorithm>

namespace maxrho {

SturmSequence::SturmSequence(const RatPolynomial& p) {
  if (p.is_zero()) throw InputError("Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() <= 0) return;
  chain_.push_back(chain_.front().derivative());
  while (true) {
    RatPolynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::variations(const mpq_class& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const mpq_class& lo, const mpq_class& hi) const {
  if (lo >= hi) return 0;
  return variations(lo) - variations(hi);
}

int SturmSequence::count_above(const mpq_class& lo) const { return variations(lo) - variations_at_infinity(true); }

int SturmSequence::count_real() const { return variations_at_infinity(false) - variations_at_infinity(true); }

mpq_class cauchy_bound(const RatPolynomial& p) {
  if (p.degree() < 1) return mpq_class(1);
  mpq_class m = 0;
  const mpq_class lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpq_class(abs(p.coeffs()[static_cast<std::size_t>(i)]) / lead));
  return m + 1;
}

namespace {

// Round the bound up to an integer so that bisection midpoints stay dyadic.
mpq_class integral_bound(const RatPolynomial& p) {
  mpq_class b = cauchy_bound(p);
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return mpq_class(c + 1);
}

RootBracket isolate_max_root(const SturmSequence& s) {
  const mpq_class bound = integral_bound(s.squarefree());
  mpq_class lo = -bound;
  mpq_class hi = bound;
  if (s.count(lo, hi) == 0) throw InputError("polynomial has no real root");
  while (s.count(lo, hi) > 1) {
    mpq_class mid = (lo + hi) / 2;
    if (s.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

void isolate_into(const SturmSequence& s, const mpq_class& lo, const mpq_class& hi, int c,
                  std::vector<RootBracket>& out) {
  if (c == 0) return;
  if (c == 1) {
    out.push_back({lo, hi});
    return;
  }
  const mpq_class mid = (lo + hi) / 2;
  const int left = s.count(lo, mid);
  isolate_into(s, lo, mid, left, out);
  isolate_into(s, mid, hi, c - left, out);
}

// Shrinks (a, b] around its single root until both ends are non-roots, or
// locates the root exactly.
RootBracket separate(const RatPolynomial& sf, RootBracket b) {
  if (sf.sign_at(b.hi) == 0) return {b.hi, b.hi};
  while (sf.sign_at(b.lo) == 0) {
    const mpq_class mid = (b.lo + b.hi) / 2;
    const int sm = sf.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == sf.sign_at(b.hi))
      b.hi = mid;
    else
      b.lo = mid;
  }
  return b;
}

}  // namespace

RootBracket isolate_max_root(const RatPolynomial& p) { return isolate_max_root(SturmSequence(p)); }

RootBracket refine(const SturmSequence& s, RootBracket b, const mpq_class& width) {
  const RatPolynomial& sf = s.squarefree();
  if (b.exact()) return b;
  int shi = sf.sign_at(b.hi);
  if (shi == 0) return {b.hi, b.hi};
  while (b.hi - b.lo > width) {
    const mpq_class mid = (b.lo + b.hi) / 2;
    const int sm = sf.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == shi)
      b.hi = mid;
    else
      b.lo = mid;
  }
  return b;
}

double max_real_root(const RatPolynomial& p, const RootBracket& bracket, double width) {
  if (p.degree() < 1) throw InputError("max_real_root: constant polynomial");
  if (!(bracket.lo < bracket.hi)) throw InputError("max_real_root: bracket needs lo < hi");
  const SturmSequence s(p);
  if (s.count(bracket.lo, bracket.hi) != 1 || s.count_above(bracket.hi) != 0)
    throw InputError("max_real_root: bracket (" + bracket.lo.get_str() + ", " + bracket.hi.get_str() +
                     "] does not isolate the maximum real root");
  return refine(s, bracket, mpq_class(width)).midpoint();
}

double max_real_root(const IntPolynomial& p, const RootBracket& bracket, double width) {
  return max_real_root(to_rational(p), bracket, width);
}

double max_real_root(const RatPolynomial& p, double width) {
  if (p.degree() < 1) throw InputError("max_real_root: constant polynomial");
  const SturmSequence s(p);
  return refine(s, isolate_max_root(s), mpq_class(width)).midpoint();
}

double max_real_root(const IntPolynomial& p, double width) { return max_real_root(to_rational(p), width); }

int compare_max_roots(const RatPolynomial& p, const RatPolynomial& q) {
  const SturmSequence sp(p);
  const SturmSequence sq(q);
  RootBracket bp = isolate_max_root(sp);
  RootBracket bq = isolate_max_root(sq);

  const RatPolynomial common = gcd(sp.squarefree(), sq.squarefree());
  if (common.degree() >= 1) {
    // A common root r1 in p's bracket is max(p) and r2 in q's bracket is max(q);
    // each is a root of both, so r1 <= r2 <= r1.
    const SturmSequence sc(common);
    if (sc.count(bp.lo, bp.hi) >= 1 && sc.count(bq.lo, bq.hi) >= 1) return 0;
  }
  // Distinct roots: bisect the wider bracket until the closed intervals separate.
  while (true) {
    if (bp.hi < bq.lo) return -1;
    if (bq.hi < bp.lo) return 1;
    if (bp.exact() && bq.exact()) return bp.lo < bq.lo ? -1 : (bp.lo == bq.lo ? 0 : 1);
    if (bp.hi - bp.lo >= bq.hi - bq.lo)
      bp = refine(sp, bp, mpq_class((bp.hi - bp.lo) / 2));
    else
      bq = refine(sq, bq, mpq_class((bq.hi - bq.lo) / 2));
  }
}

int compare_max_roots(const IntPolynomial& p, const IntPolynomial& q) {
  return compare_max_roots(to_rational(p), to_rational(q));
}

std::vector<RootBracket> isolate_roots(const SturmSequence& s, const mpq_class& lo, const mpq_class& hi) {
  std::vector<RootBracket> out;
  isolate_into(s, lo, hi, s.count(lo, hi), out);
  return out;
}

bool nonnegative_on(const RatPolynomial& d, const mpq_class& lo, const std::optional<mpq_class>& hi_opt) {
  if (d.is_zero()) return true;
  if (d.degree() == 0) return sgn(d.leading()) > 0;
  mpq_class hi;
  if (hi_opt) {
    hi = *hi_opt;
    if (hi < lo) throw InputError("nonnegative_on: empty interval");
  } else {
    hi = std::max(lo, integral_bound(d)) + 1;
    if (sgn(d.leading()) < 0) return false;
  }
  if (d.sign_at(lo) < 0 || d.sign_at(hi) < 0) return false;
  if (lo == hi) return true;

  const SturmSequence s(d);
  const auto brackets = isolate_roots(s, lo, hi);
  if (brackets.empty()) return d.sign_at((lo + hi) / 2) >= 0;
  // Between consecutive distinct roots the sign is constant, and every such
  // gap contains a non-root bracket endpoint.
  for (const auto& raw : brackets) {
    const RootBracket b = separate(s.squarefree(), raw);
    if (b.exact()) continue;
    if (d.sign_at(b.lo) < 0 || d.sign_at(b.hi) < 0) return false;
  }
  return true;
}

bool poly_dominates(const RatPolynomial& p1, const RatPolynomial& p2, const mpq_class& from) {
  if (p1.is_zero() || p2.is_zero()) throw InputError("poly_dominates: zero polynomial");
  return nonnegative_on(p2 - p1, from, std::nullopt);
}

bool poly_dominates(const IntPolynomial& p1, const IntPolynomial& p2, const mpq_class& from) {
  return poly_dominates(to_rational(p1), to_rational(p2), from);
}

bool shifted_root_bound(const RatPolynomial& p1, const RatPolynomial& p2, const mpq_class& k, const mpq_class& lo,
                        const mpq_class& hi) {
  if (sgn(k) < 0) throw InputError("shifted_root_bound: shift must be nonnegative");
  return nonnegative_on(shift_argument(p2, k) - p1, lo, hi);
}

bool shifted_root_bound(const IntPolynomial& p1, const IntPolynomial& p2, const mpq_class& k, const mpq_class& lo,
                        const mpq_class& hi) {
  return shifted_root_bound(to_rational(p1), to_rational(p2), k, lo, hi);
}

}  // namespace maxrho
