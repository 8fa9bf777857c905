#pragma once

#include "specbound/polynomial.hpp"

namespace specbound::closedform {

// Hand-expanded characteristic polynomials of the family quotient matrices,
// kept as independent evaluators to cross-check the determinant path. The
// library itself never computes from these.

inline IntPolynomial charpoly_H(long long p, long long r, long long s) {
  return IntPolynomial({0,
                        p * p + p * r + p * s + 2 * p,
                        -(2 * p * p + 2 * p * r + 2 * p * s + 6 * p + 2 * r * s + 2 * r + 2 * s + 2),
                        p * p + p * r + p * s + 6 * p + r * s + 3 * r + 3 * s + 5,
                        -(2 * p + r + s + 4),
                        1});
}

inline IntPolynomial charpoly_H_s0(long long p, long long r) {
  return IntPolynomial({0,
                        -(p * r + p * p + 2 * p),
                        (p + 2) * r + p * p + 4 * p + 2,
                        -(r + 2 * p + 3),
                        1});
}

inline IntPolynomial charpoly_G(long long p, long long r, long long s) {
  return IntPolynomial({-4 * p,
                        (p + 2) * s + (p + 2) * r + p * p + 12 * p + 4,
                        (-2 * r - 2 * p - 5) * s + (-2 * p - 5) * r - 2 * p * p - 14 * p - 12,
                        (r + p + 4) * s + (p + 4) * r + p * p + 8 * p + 13,
                        -(s + r + 2 * p + 6),
                        1});
}

inline IntPolynomial charpoly_G_p0(long long r, long long s) {
  return IntPolynomial({0,
                        -(r + s + 2),
                        (r + 2) * s + 2 * r + 5,
                        -(r + s + 4),
                        1});
}

// Point values the sign arguments rest on, in fully factored form.

// charpoly_H_s0 evaluated at x = p.
inline long long H_s0_value_at_p(long long p, long long r) { return r * p * p; }

// charpoly_G_p0 evaluated at x = s+1.
inline long long G_p0_value_at_s1(long long r, long long s) {
  return s * (s + 1) * (r - s);
}

// charpoly_H evaluated at x = p+s with r = s+k.
inline long long H_value_at_ps(long long p, long long s, long long k) {
  return (p + s) *
         (k * p * p + 2 * k * p * s - k * p + k * s * s - 2 * k * s + 2 * p * s + s * s - 2 * s);
}

// charpoly_G with r = s evaluated at x = d1 + 2 = p+r+3.
inline long long G_rs_value_at_d1p2(long long p, long long r) {
  return -(2 * r + 3 * p + 6) * (p * r - 2 * r + p * p + p - 2);
}

// charpoly_G with r = s+k evaluated at x = d2 = p+s+1.
inline long long G_value_at_d2(long long p, long long s, long long k) {
  return k * s * s * s + (3 * k - 2) * p * s * s +
         ((3 * k - 5) * p * p + (k + 2) * p - k) * s + (k - 3) * p * p * p +
         (k + 1) * p * p;
}

// charpoly_G with p = 1, r = s: 32*f(d1 + 3/2) and 32*f(d2 - 1/2) are integers.
inline long long G_p1_value32_at_d1(long long r) {
  return -(6 * r + 25) * (4 * r * r + 12 * r + 25);
}
inline long long G_p1_value32_at_d2(long long r) {
  return (2 * r - 1) * (20 * r * r + 12 * r + 5);
}

}  // namespace specbound::closedform
