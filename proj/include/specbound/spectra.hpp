#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

namespace detail {

// Cyclic Jacobi on a row-major symmetric n x n buffer, in place. Stops when
// the off-diagonal Frobenius norm drops below 1e-12 of its initial value
// (hard cap 100 sweeps); the diagonal then holds the eigenvalues. Fully
// deterministic for identical input.
inline int jacobi_inplace(double* a, int n) {
  auto off_sq = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return 2.0 * s;
  };
  const double off0 = off_sq();
  if (off0 == 0.0) return 0;
  const double stop = 1e-24 * off0;  // (1e-12 * ||off||)^2
  int sweep = 0;
  for (; sweep < 100; ++sweep) {
    if (off_sq() <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e12) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
          a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
        }
      }
    }
  }
  return sweep;
}

}  // namespace detail

/// Dense symmetric real matrix; set() writes both mirror entries.
class SymMatrix {
 public:
  explicit SymMatrix(int order) : n_(order) {
    if (order < 1) throw std::invalid_argument("SymMatrix order must be >= 1");
    a_.assign(static_cast<std::size_t>(order) * order, 0.0);
  }

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  double trace() const {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += a_[idx(i, i)];
    return t;
  }

  // Gershgorin bound on the spectral radius.
  double gershgorin_radius() const {
    double best = 0;
    for (int i = 0; i < n_; ++i) {
      double row = 0;
      for (int j = 0; j < n_; ++j) row += std::abs(a_[idx(i, j)]);
      best = std::max(best, row);
    }
    return best;
  }

  std::string to_text() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) os << (j ? " " : "") << a_[idx(i, j)];
      os << '\n';
    }
    return os.str();
  }

  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw std::invalid_argument("SymMatrix index out of range");
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<double> a_;
};

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

inline const char* to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::Adjacency: return "A";
    case MatrixKind::Laplacian: return "L";
    default: return "Q";
  }
}

inline SymMatrix adjacency(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [a, b] : g.edges()) m.set(a, b, 1.0);
  return m;
}

inline SymMatrix laplacian(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [a, b] : g.edges()) m.set(a, b, -1.0);
  for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
  return m;
}

inline SymMatrix signless_laplacian(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [a, b] : g.edges()) m.set(a, b, 1.0);
  for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
  return m;
}

inline SymMatrix matrix_of(const Graph& g, MatrixKind k) {
  switch (k) {
    case MatrixKind::Adjacency: return adjacency(g);
    case MatrixKind::Laplacian: return laplacian(g);
    default: return signless_laplacian(g);
  }
}

/// Eigenvalues sorted non-increasing plus the tolerance used for
/// equality/multiplicity decisions on them.
struct Spectrum {
  std::vector<double> values;
  double tol = 0.0;
};

inline double default_tol(const SymMatrix& m) {
  return 1e-8 * std::max(1.0, m.gershgorin_radius());
}

inline Spectrum spectrum(const SymMatrix& m, double tol) {
  for (double v : m.data())
    if (!std::isfinite(v))
      throw std::domain_error("spectrum: non-finite matrix entry");
  const int n = m.order();
  std::vector<double> a = m.data();
  detail::jacobi_inplace(a.data(), n);
  Spectrum sp;
  sp.tol = tol;
  sp.values.reserve(n);
  for (int i = 0; i < n; ++i) sp.values.push_back(a[i * static_cast<std::size_t>(n) + i]);
  std::sort(sp.values.begin(), sp.values.end(), std::greater<>());
  return sp;
}

inline Spectrum spectrum(const SymMatrix& m) { return spectrum(m, default_tol(m)); }

// Sum of the k largest eigenvalues.
inline double kyfan_sum(const Spectrum& sp, int k) {
  if (k < 1 || k > static_cast<int>(sp.values.size()))
    throw std::invalid_argument("kyfan_sum: k out of range");
  double s = 0;
  for (int i = 0; i < k; ++i) s += sp.values[i];
  return s;
}

}  // namespace specbound
