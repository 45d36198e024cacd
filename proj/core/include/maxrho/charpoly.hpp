#pragma once

#include "maxrho/matrix.hpp"
#include "maxrho/polynomial.hpp"

namespace maxrho {

/// det(xI - M) by the Faddeev-LeVerrier recursion in exact arithmetic.
/// Every division in the recursion is exact over the integers.
IntPolynomial char_poly(const IntMatrix& m);
RatPolynomial char_poly(const RatMatrix& m);

}  // namespace maxrho
