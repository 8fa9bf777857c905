#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "specbound/errors.hpp"
#include "specbound/graph.hpp"
#include "specbound/polynomial.hpp"
#include "specbound/spectra.hpp"

namespace specbound {

enum class FamilyKind { H, H_s0, G, G_p0 };

inline const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::H: return "H";
    case FamilyKind::H_s0: return "H-s0";
    case FamilyKind::G: return "G";
    default: return "G-p0";
  }
}

/// Reduced matrix of the equitable partition {u}, {v}, middles, u-pendants,
/// v-pendants of the two-hub families, with the vertex-class sizes kept
/// alongside (needed to symmetrize and to check row sums). Order is 5, or 4
/// for the degenerate s=0 / p=0 families.
struct QuotientMatrix {
  int order = 0;
  std::array<std::array<long long, 5>, 5> m{};
  std::vector<long long> class_sizes;
  FamilyParams params;
  FamilyKind family = FamilyKind::H;

  long long at(int i, int j) const { return m[i][j]; }
  long long row_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < order; ++j) s += m[i][j];
    return s;
  }
};

namespace detail {

// 64-bit coefficients are asserted to be safe for p,r,s up to 1e4; reject
// anything larger up front.
inline void check_family_range(const FamilyParams& fp) {
  if (fp.p > 10000 || fp.r > 10000 || fp.s > 10000)
    throw std::invalid_argument("family parameters capped at 10^4 (exact 64-bit coefficients)");
}

}  // namespace detail

// H(p,r,s) with p >= 1, r >= s >= 1; classes u | v | middles | u-pend | v-pend.
inline QuotientMatrix quotient_H(const FamilyParams& fp) {
  detail::check_family_range(fp);
  const long long p = fp.p, r = fp.r, s = fp.s;
  if (p < 1 || s < 1 || r < s)
    throw hypothesis_error("quotient_H requires p >= 1 and r >= s >= 1");
  QuotientMatrix q;
  q.order = 5;
  q.m = {{{p + r, 0, p, r, 0},
          {0, p + s, p, 0, s},
          {1, 1, 2, 0, 0},
          {1, 0, 0, 1, 0},
          {0, 1, 0, 0, 1}}};
  q.class_sizes = {1, 1, p, r, s};
  q.params = fp;
  q.family = FamilyKind::H;
  return q;
}

// H(p,r,0) with p >= 1, r >= 1.
inline QuotientMatrix quotient_H_s0(const FamilyParams& fp) {
  detail::check_family_range(fp);
  const long long p = fp.p, r = fp.r;
  if (p < 1 || r < 1 || fp.s != 0)
    throw hypothesis_error("quotient_H_s0 requires p >= 1, r >= 1, s = 0");
  QuotientMatrix q;
  q.order = 4;
  q.m = {{{p + r, 0, p, r, 0},
          {0, p, p, 0, 0},
          {1, 1, 2, 0, 0},
          {1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0}}};
  q.class_sizes = {1, 1, p, r};
  q.params = fp;
  q.family = FamilyKind::H_s0;
  return q;
}

// G(p,r,s) = H(p,r,s) + uv edge, p >= 1, r >= s >= 1.
inline QuotientMatrix quotient_G(const FamilyParams& fp) {
  detail::check_family_range(fp);
  const long long p = fp.p, r = fp.r, s = fp.s;
  if (p < 1 || s < 1 || r < s)
    throw hypothesis_error("quotient_G requires p >= 1 and r >= s >= 1");
  QuotientMatrix q;
  q.order = 5;
  q.m = {{{p + r + 1, 1, p, r, 0},
          {1, p + s + 1, p, 0, s},
          {1, 1, 2, 0, 0},
          {1, 0, 0, 1, 0},
          {0, 1, 0, 0, 1}}};
  q.class_sizes = {1, 1, p, r, s};
  q.params = fp;
  q.family = FamilyKind::G;
  return q;
}

// G(0,r,s) with r >= 1, s >= 1 (no middles, hubs adjacent).
inline QuotientMatrix quotient_G_p0(const FamilyParams& fp) {
  detail::check_family_range(fp);
  const long long r = fp.r, s = fp.s;
  if (fp.p != 0 || r < 1 || s < 1)
    throw hypothesis_error("quotient_G_p0 requires p = 0 and r, s >= 1");
  QuotientMatrix q;
  q.order = 4;
  q.m = {{{r + 1, 1, r, 0, 0},
          {1, s + 1, 0, s, 0},
          {1, 0, 1, 0, 0},
          {0, 1, 0, 1, 0},
          {0, 0, 0, 0, 0}}};
  q.class_sizes = {1, 1, r, s};
  q.params = fp;
  q.family = FamilyKind::G_p0;
  return q;
}

// det(xI - M) by Faddeev-LeVerrier over exact integers; the division by the
// step index is exact, intermediates run in 128 bits.
inline IntPolynomial charpoly(const QuotientMatrix& qm) {
  const int n = qm.order;
  std::vector<__int128> m(n * n), b(n * n), tmp(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = qm.m[i][j];
  std::vector<long long> coeff(n + 1, 0);
  coeff[n] = 1;
  // B_1 = M, c_{n-1} = -tr(B_1); B_k = M (B_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(B_k)/k
  b = m;
  __int128 c = 0;
  for (int i = 0; i < n; ++i) c += b[i * n + i];
  c = -c;
  coeff[n - 1] = detail::narrow_i128(c, "charpoly coefficient");
  for (int k = 2; k <= n; ++k) {
    for (int i = 0; i < n; ++i) b[i * n + i] += c;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        __int128 acc = 0;
        for (int l = 0; l < n; ++l) acc += m[i * n + l] * b[l * n + j];
        tmp[i * n + j] = acc;
      }
    b.swap(tmp);
    __int128 tr = 0;
    for (int i = 0; i < n; ++i) tr += b[i * n + i];
    c = -tr / k;
    if (c * k != -tr) throw std::logic_error("charpoly: inexact trace division");
    coeff[n - k] = detail::narrow_i128(c, "charpoly coefficient");
  }
  return IntPolynomial(coeff);
}

// Eigenvalues of the reduced matrix. M is not symmetric, but D^{1/2} M D^{-1/2}
// with D = diag(class sizes) is, because n_i * m_ij = n_j * m_ji (both count
// the edges between the two classes); the Jacobi solver handles the rest.
inline Spectrum quotient_spectrum(const QuotientMatrix& qm, double tol = 1e-10) {
  const int n = qm.order;
  SymMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double via_i = qm.m[i][j] * std::sqrt(static_cast<double>(qm.class_sizes[i]) /
                                                  static_cast<double>(qm.class_sizes[j]));
      const double via_j = qm.m[j][i] * std::sqrt(static_cast<double>(qm.class_sizes[j]) /
                                                  static_cast<double>(qm.class_sizes[i]));
      if (std::abs(via_i - via_j) > 1e-9 * (1.0 + std::abs(via_i)))
        throw std::logic_error("quotient_spectrum: partition is not equitable");
      s.set(i, j, via_i);
    }
  return spectrum(s, tol);
}

/// Result of checking the structural eigenvectors of a family graph: the
/// middle-difference vectors must give eigenvalue 2, the pendant-difference
/// vectors eigenvalue 1, and the full Q-spectrum must equal the quotient
/// spectrum plus those fixed eigenvalues.
struct EigvecFamilyReport {
  int count_eig2 = 0;       // verified eigenvectors for eigenvalue 2 (expect p-1)
  int count_eig1 = 0;       // verified eigenvectors for eigenvalue 1
  double max_residual = 0;  // worst ||Q x - lambda x||_inf over those vectors
  bool union_matches = false;
  std::string detail;
};

namespace detail {

inline double residual_inf(const SymMatrix& q, const std::vector<double>& x, double lambda) {
  const int n = q.order();
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    double acc = 0;
    for (int j = 0; j < n; ++j) acc += q(i, j) * x[j];
    worst = std::max(worst, std::abs(acc - lambda * x[i]));
  }
  return worst;
}

}  // namespace detail

inline EigvecFamilyReport verify_eigvec_families(const Graph& g, const FamilyParams& fp,
                                                 FamilyKind kind, double tol = 1e-8) {
  if (g.order() != fp.n())
    throw std::invalid_argument("verify_eigvec_families: graph order does not match params");
  const bool with_uv = (kind == FamilyKind::G || kind == FamilyKind::G_p0);
  if (g.adjacent(0, 1) != with_uv)
    throw std::invalid_argument("verify_eigvec_families: graph/family kind mismatch on uv edge");

  const SymMatrix q = signless_laplacian(g);
  EigvecFamilyReport rep;
  const int n = g.order();
  auto unit_diff = [&](int a, int b) {
    std::vector<double> x(n, 0.0);
    x[a] = 1.0;
    x[b] = -1.0;
    return x;
  };

  // middle differences -> eigenvalue 2
  for (int j = 3; j <= fp.p + 1; ++j) {
    const double res = detail::residual_inf(q, unit_diff(2, j), 2.0);
    rep.max_residual = std::max(rep.max_residual, res);
    if (res <= tol) ++rep.count_eig2;
  }
  // pendant differences within each pendant class -> eigenvalue 1
  const int u_base = 2 + fp.p, v_base = 2 + fp.p + fp.r;
  for (int j = u_base + 1; j < u_base + fp.r; ++j) {
    const double res = detail::residual_inf(q, unit_diff(u_base, j), 1.0);
    rep.max_residual = std::max(rep.max_residual, res);
    if (res <= tol) ++rep.count_eig1;
  }
  for (int j = v_base + 1; j < v_base + fp.s; ++j) {
    const double res = detail::residual_inf(q, unit_diff(v_base, j), 1.0);
    rep.max_residual = std::max(rep.max_residual, res);
    if (res <= tol) ++rep.count_eig1;
  }

  QuotientMatrix qm;
  switch (kind) {
    case FamilyKind::H: qm = quotient_H(fp); break;
    case FamilyKind::H_s0: qm = quotient_H_s0(fp); break;
    case FamilyKind::G: qm = quotient_G(fp); break;
    case FamilyKind::G_p0: qm = quotient_G_p0(fp); break;
  }

  const int want_eig2 = std::max(fp.p - 1, 0);
  const int want_eig1 = std::max(fp.r - 1, 0) + std::max(fp.s - 1, 0);
  std::vector<double> expected = quotient_spectrum(qm).values;
  for (int i = 0; i < want_eig2; ++i) expected.push_back(2.0);
  for (int i = 0; i < want_eig1; ++i) expected.push_back(1.0);
  std::sort(expected.begin(), expected.end(), std::greater<>());

  const std::vector<double> full = spectrum(q).values;
  rep.union_matches =
      expected.size() == full.size() && rep.count_eig2 == want_eig2 && rep.count_eig1 == want_eig1;
  if (!rep.union_matches) {
    rep.detail = "eigenvector counts or multiset size off";
  } else {
    for (std::size_t i = 0; i < full.size(); ++i)
      if (std::abs(full[i] - expected[i]) > tol) {
        rep.union_matches = false;
        rep.detail = "mismatch at index " + std::to_string(i) + ": " +
                     std::to_string(full[i]) + " vs " + std::to_string(expected[i]);
        break;
      }
  }
  return rep;
}

}  // namespace specbound
