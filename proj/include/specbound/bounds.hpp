#pragma once

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "specbound/closedforms.hpp"
#include "specbound/errors.hpp"
#include "specbound/graph.hpp"
#include "specbound/graph_io.hpp"
#include "specbound/quotient.hpp"
#include "specbound/rational.hpp"
#include "specbound/spectra.hpp"

namespace specbound {

enum class Verdict { Strict, Equality, Violated };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Strict: return "strict";
    case Verdict::Equality: return "equality";
    default: return "violated";
  }
}

// Integer-entried matrices of order <= 8 put eigenvalue sums far inside this
// tolerance; anything between the tolerance and the suspicious band is
// reported for manual review instead of being classified silently.
constexpr double kEqualityTol = 1e-7;
constexpr double kSuspiciousBand = 1e-4;

/// One inequality check: lhs vs rhs with a verdict under the given tolerance.
struct BoundReport {
  std::string kind;
  int k = 1;
  int n = 0;
  double lhs = 0;
  double rhs = 0;
  Verdict verdict = Verdict::Strict;
  bool suspicious = false;
  std::string witness;
  double tol = kEqualityTol;
  std::string note;

  nlohmann::json to_json() const {
    nlohmann::json j{{"kind", kind},       {"k", k},
                     {"n", n},             {"lhs", lhs},
                     {"rhs", rhs},         {"verdict", to_string(verdict)},
                     {"suspicious", suspicious}, {"witness", witness},
                     {"tol", tol}};
    if (!note.empty()) j["note"] = note;
    return j;
  }

  static std::string csv_header() { return "kind,k,n,lhs,rhs,verdict,witness"; }
  std::string csv_row() const {
    std::ostringstream os;
    os.precision(15);
    os << kind << ',' << k << ',' << n << ',' << lhs << ',' << rhs << ','
       << to_string(verdict) << ',' << witness;
    return os.str();
  }
};

namespace detail {

inline void fill_verdict(BoundReport& r) {
  const double d = r.lhs - r.rhs;
  if (d < -r.tol)
    r.verdict = Verdict::Violated;
  else if (std::abs(d) <= r.tol)
    r.verdict = Verdict::Equality;
  else
    r.verdict = Verdict::Strict;
  r.suspicious = std::abs(d) > r.tol && std::abs(d) < kSuspiciousBand;
}

inline void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g))
    throw hypothesis_error(std::string(who) + ": hypothesis needs a connected graph");
}

inline bool is_star_shape(const Graph& g, const DegreeSequence& ds) {
  return g.edge_count() == g.order() - 1 && ds.d1() == g.order() - 1;
}

}  // namespace detail

// Ky Fan k-sum of L or Q against 1 + the k largest degrees.
inline BoundReport check_grone_sum(const Graph& g, int k, MatrixKind kind,
                                   double tol = kEqualityTol) {
  if (kind == MatrixKind::Adjacency)
    throw std::invalid_argument("check_grone_sum: matrix kind must be L or Q");
  detail::require_connected(g, "check_grone_sum");
  if (k < 1 || k > g.order())
    throw std::invalid_argument("check_grone_sum: k out of range");
  const DegreeSequence ds = degree_sequence(g);
  BoundReport r;
  r.kind = std::string("grone_sum_") + to_string(kind);
  r.k = k;
  r.n = g.order();
  r.tol = tol;
  r.lhs = kyfan_sum(spectrum(matrix_of(g, kind)), k);
  r.rhs = 1.0 + static_cast<double>(ds.top_sum(k));
  r.witness = g.order() <= 62 ? to_graph6(g) : "";
  detail::fill_verdict(r);
  return r;
}

// q1 >= d1 + 1, equality characterized by stars.
inline BoundReport check_lemma_q1(const Graph& g, double tol = kEqualityTol) {
  detail::require_connected(g, "check_lemma_q1");
  if (g.order() < 2) throw std::invalid_argument("check_lemma_q1: need n >= 2");
  const DegreeSequence ds = degree_sequence(g);
  BoundReport r;
  r.kind = "lemma_q1";
  r.n = g.order();
  r.tol = tol;
  r.lhs = spectrum(signless_laplacian(g)).values[0];
  r.rhs = ds.d1() + 1.0;
  r.witness = g.order() <= 62 ? to_graph6(g) : "";
  detail::fill_verdict(r);
  const bool star = detail::is_star_shape(g, ds);
  if (r.verdict == Verdict::Equality)
    r.note = star ? "equality on a star, as characterized"
                  : "equality on a NON-star: characterization violated";
  else if (star)
    r.note = "star without equality: characterization violated";
  return r;
}

// q2 >= d2 - 1.
inline BoundReport check_lemma_q2(const Graph& g, double tol = kEqualityTol) {
  if (g.order() < 2) throw std::invalid_argument("check_lemma_q2: need n >= 2");
  const DegreeSequence ds = degree_sequence(g);
  BoundReport r;
  r.kind = "lemma_q2";
  r.n = g.order();
  r.tol = tol;
  r.lhs = spectrum(signless_laplacian(g)).values[1];
  r.rhs = ds.d2() - 1.0;
  r.witness = g.order() <= 62 ? to_graph6(g) : "";
  detail::fill_verdict(r);
  return r;
}

// Ky Fan k-sum against the k largest diagonal entries; pure matrix statement,
// no connectivity assumption.
inline BoundReport check_schur(const SymMatrix& m, int k, double tol = kEqualityTol) {
  if (k < 1 || k > m.order()) throw std::invalid_argument("check_schur: k out of range");
  std::vector<double> diag;
  diag.reserve(m.order());
  for (int i = 0; i < m.order(); ++i) diag.push_back(m(i, i));
  std::sort(diag.begin(), diag.end(), std::greater<>());
  BoundReport r;
  r.kind = "schur";
  r.k = k;
  r.n = m.order();
  r.tol = tol;
  r.lhs = kyfan_sum(spectrum(m), k);
  r.rhs = 0;
  for (int i = 0; i < k; ++i) r.rhs += diag[i];
  detail::fill_verdict(r);
  return r;
}

enum class EqualityClass { Star, K3, P4, Other };

inline const char* to_string(EqualityClass c) {
  switch (c) {
    case EqualityClass::Star: return "Star";
    case EqualityClass::K3: return "K3";
    case EqualityClass::P4: return "P4";
    default: return "Other";
  }
}

// Structural tag for a graph; degree sequence plus edge count pin these
// families exactly.
inline EqualityClass classify_graph_shape(const Graph& g) {
  const DegreeSequence ds = degree_sequence(g);
  if (detail::is_star_shape(g, ds)) return EqualityClass::Star;
  if (g.order() == 3 && g.edge_count() == 3) return EqualityClass::K3;
  if (g.order() == 4 && g.edge_count() == 3 && ds.degrees == std::vector<int>{2, 2, 1, 1} &&
      is_connected(g))
    return EqualityClass::P4;
  return EqualityClass::Other;
}

// Only meaningful on an equality case of check_grone_sum.
inline EqualityClass classify_equality(const Graph& g, int k, MatrixKind kind,
                                       double tol = kEqualityTol) {
  const BoundReport r = check_grone_sum(g, k, kind, tol);
  if (r.verdict != Verdict::Equality)
    throw state_error("classify_equality: report verdict is not an equality");
  return classify_graph_shape(g);
}

enum class PropositionId { P3, P4, P5, P6i, P6ii, P6iii, P6iv };

inline const char* to_string(PropositionId id) {
  switch (id) {
    case PropositionId::P3: return "P3";
    case PropositionId::P4: return "P4";
    case PropositionId::P5: return "P5";
    case PropositionId::P6i: return "P6i";
    case PropositionId::P6ii: return "P6ii";
    case PropositionId::P6iii: return "P6iii";
    default: return "P6iv";
  }
}

inline bool proposition_hypothesis(PropositionId id, const FamilyParams& fp) {
  switch (id) {
    case PropositionId::P3: return fp.p >= 1 && fp.s >= 1 && fp.r >= fp.s;
    case PropositionId::P4: return fp.p >= 1 && fp.r >= 1 && fp.s == 0;
    case PropositionId::P5: return fp.p == 0 && fp.s >= 1 && fp.r >= fp.s;
    case PropositionId::P6i: return fp.p == 1 && fp.s >= 1 && fp.r == fp.s;
    case PropositionId::P6ii: return fp.p >= 2 && fp.s >= 1 && fp.r == fp.s;
    case PropositionId::P6iii: return fp.p >= 1 && fp.s >= 1 && fp.r >= fp.s + 3;
    case PropositionId::P6iv:
      return fp.p >= 1 && fp.s >= 1 && (fp.r == fp.s + 1 || fp.r == fp.s + 2);
  }
  return false;
}

namespace detail {

inline void route_agreement(bool eigen_says, bool sign_says, PropositionId id,
                            const FamilyParams& fp) {
  if (eigen_says != sign_says)
    throw std::logic_error(std::string("verify_proposition ") + to_string(id) + fp.to_string() +
                           ": eigenvalue route and polynomial sign route disagree");
}

}  // namespace detail

// Checks one proposition instance two ways: eigenvalues of the full matrix
// (the returned report) and the exact sign of the quotient charpoly at the
// proof's evaluation point; a disagreement throws.
inline BoundReport verify_proposition(PropositionId id, const FamilyParams& fp,
                                      double tol = kEqualityTol) {
  if (!proposition_hypothesis(id, fp)) {
    std::string ranges;
    switch (id) {
      case PropositionId::P3: ranges = "p >= 1, r >= s >= 1"; break;
      case PropositionId::P4: ranges = "p >= 1, r >= 1, s = 0"; break;
      case PropositionId::P5: ranges = "p = 0, r >= s >= 1"; break;
      case PropositionId::P6i: ranges = "p = 1, r = s >= 1"; break;
      case PropositionId::P6ii: ranges = "p >= 2, r = s >= 1"; break;
      case PropositionId::P6iii: ranges = "p >= 1, r >= s+3, s >= 1"; break;
      case PropositionId::P6iv: ranges = "p >= 1, r in {s+1, s+2}, s >= 1"; break;
    }
    throw hypothesis_error(std::string("verify_proposition ") + to_string(id) +
                           ": params " + fp.to_string() + " outside hypothesis (" + ranges + ")");
  }

  BoundReport r;
  r.kind = to_string(id);
  r.tol = tol;

  switch (id) {
    case PropositionId::P3: {
      const Graph g = make_H(fp);
      const DegreeSequence ds = degree_sequence(g);
      const Spectrum sp = spectrum(signless_laplacian(g));
      r.n = g.order();
      r.lhs = sp.values[1];
      r.rhs = ds.d2();
      r.witness = "H" + fp.to_string();
      detail::fill_verdict(r);
      const Rational sign_val = charpoly(quotient_H(fp)).eval(Rational(ds.d2()));
      detail::route_agreement(r.verdict == Verdict::Strict, sign_val.sign() > 0, id, fp);
      r.note = "f(d2) = " + sign_val.to_string();
      break;
    }
    case PropositionId::P4: {
      const Graph g = make_H(fp);
      const DegreeSequence ds = degree_sequence(g);
      const Spectrum sp = spectrum(signless_laplacian(g));
      r.n = g.order();
      r.lhs = sp.values[1];
      r.rhs = ds.d2();
      r.witness = "H" + fp.to_string();
      detail::fill_verdict(r);
      // Both evaluation points: x = p (the substitution the closed form rp^2
      // uses) and x = the actual second-largest degree, which differs for
      // p = 1, r >= 2 where a middle vertex has degree 2 > p.
      const IntPolynomial f = charpoly(quotient_H_s0(fp));
      const Rational at_p = f.eval(Rational(fp.p));
      const Rational at_d2 = f.eval(Rational(ds.d2()));
      r.note = "f(p) = " + at_p.to_string() + ", f(d2) = " + at_d2.to_string();
      const bool sign_strict = at_d2.sign() > 0;
      const bool sign_equal = at_d2.is_zero();
      detail::route_agreement(r.verdict == Verdict::Strict, sign_strict, id, fp);
      detail::route_agreement(r.verdict == Verdict::Equality, sign_equal, id, fp);
      break;
    }
    case PropositionId::P5: {
      const Graph g = make_G(fp);
      const DegreeSequence ds = degree_sequence(g);
      const Spectrum sp = spectrum(signless_laplacian(g));
      r.n = g.order();
      r.lhs = sp.values[0] + sp.values[1];
      r.rhs = ds.d1() + ds.d2() + 1.0;
      r.witness = "G" + fp.to_string();
      detail::fill_verdict(r);
      // q2 >= d2 from the charpoly sign, q1 > d1+1 because the graph is not
      // a star; together the sum bound is strict.
      const Rational at_d2 = charpoly(quotient_G_p0(fp)).eval(Rational(ds.d2()));
      const bool sign_strict = at_d2.sign() >= 0 && !detail::is_star_shape(g, ds);
      detail::route_agreement(r.verdict == Verdict::Strict, sign_strict, id, fp);
      r.note = "f(d2) = " + at_d2.to_string();
      break;
    }
    case PropositionId::P6i:
    case PropositionId::P6ii:
    case PropositionId::P6iii:
    case PropositionId::P6iv: {
      const Graph g = make_G(fp);
      const DegreeSequence ds = degree_sequence(g);
      const Spectrum sp = spectrum(signless_laplacian(g));
      const IntPolynomial f = charpoly(quotient_G(fp));
      r.n = g.order();
      r.witness = "G" + fp.to_string();
      const long long d1 = ds.d1(), d2 = ds.d2(), n = g.order();
      if (id == PropositionId::P6i) {
        r.lhs = sp.values[0];
        r.rhs = d1 + 1.5;
        detail::fill_verdict(r);
        const Rational v1 = f.eval(Rational(2 * d1 + 3, 2));
        const Rational v2 = f.eval(Rational(2 * d2 - 1, 2));
        detail::route_agreement(r.verdict == Verdict::Strict, v1.sign() < 0, id, fp);
        const bool q2_ok = sp.values[1] > d2 - 0.5 + tol;
        detail::route_agreement(q2_ok, v2.sign() > 0, id, fp);
        r.note = "f(d1+3/2) = " + v1.to_string() + ", f(d2-1/2) = " + v2.to_string() +
                 ", q2 = " + std::to_string(sp.values[1]);
      } else if (id == PropositionId::P6ii) {
        r.lhs = sp.values[0];
        r.rhs = static_cast<double>(d1 + 2);
        detail::fill_verdict(r);
        const Rational v = f.eval(Rational(d1 + 2));
        detail::route_agreement(r.verdict == Verdict::Strict, v.sign() < 0, id, fp);
        r.note = "f(d1+2) = " + v.to_string();
      } else if (id == PropositionId::P6iii) {
        r.lhs = sp.values[1];
        r.rhs = static_cast<double>(d2);
        detail::fill_verdict(r);
        const Rational v = f.eval(Rational(d2));
        detail::route_agreement(r.verdict == Verdict::Strict, v.sign() > 0, id, fp);
        r.note = "f(d2) = " + v.to_string();
      } else {
        r.lhs = sp.values[0];
        r.rhs = d1 + 1.0 + static_cast<double>(fp.p) / n;
        detail::fill_verdict(r);
        const Rational x1 = Rational(d1 + 1) + Rational(fp.p, n);
        const Rational x2 = Rational(d2) - Rational(fp.p, n);
        const Rational v1 = f.eval(x1);
        const Rational v2 = f.eval(x2);
        detail::route_agreement(r.verdict == Verdict::Strict, v1.sign() < 0, id, fp);
        const bool q2_ok = sp.values[1] > d2 - static_cast<double>(fp.p) / n + tol;
        detail::route_agreement(q2_ok, v2.sign() > 0, id, fp);
        r.note = "f(d1+1+p/n) = " + v1.to_string() + ", f(d2-p/n) = " + v2.to_string();
      }
      break;
    }
  }
  return r;
}

// Whether the proposition's claim holds given the report (P4 allows the
// equality case only on P_4 itself; the others are strict claims).
inline bool proposition_holds(PropositionId id, const FamilyParams& fp, const BoundReport& r) {
  if (id == PropositionId::P4) {
    if (r.verdict == Verdict::Strict) return true;
    return r.verdict == Verdict::Equality && fp.p == 1 && fp.r == 1;
  }
  return r.verdict == Verdict::Strict;
}

/// Per-band detail for the star-plus-edge spectral check.
struct SnPlusBandReport {
  int n = 0;
  double q1 = 0, q2 = 0, qn = 0;
  bool q1_in_band = false;   // q1 in (n, n + 1/n)
  bool q2_in_band = false;   // q2 in (3 - 2.5/n, 3 - 1/n)
  bool plateau_ok = false;   // q_3 .. q_{n-1} == 1 within tol
  bool qn_ok = false;        // 0 <= q_n < d_n
  double plateau_max_dev = 0;
  double margin = 0;         // (n+k+1) - sum_{i<=k} q_i is q_n for any 3 <= k <= n-1

  bool all_ok() const { return q1_in_band && q2_in_band && plateau_ok && qn_ok; }
};

inline SnPlusBandReport snplus_bands(int n, double tol = 1e-8) {
  if (n < 4) throw std::invalid_argument("snplus_bands: need n >= 4");
  const Graph g = make_star_plus_edge(n);
  const Spectrum sp = spectrum(signless_laplacian(g), tol);
  SnPlusBandReport b;
  b.n = n;
  b.q1 = sp.values[0];
  b.q2 = sp.values[1];
  b.qn = sp.values[n - 1];
  b.q1_in_band = b.q1 > n && b.q1 < n + 1.0 / n;
  b.q2_in_band = b.q2 > 3.0 - 2.5 / n && b.q2 < 3.0 - 1.0 / n;
  b.plateau_max_dev = 0;
  for (int i = 2; i <= n - 2; ++i)
    b.plateau_max_dev = std::max(b.plateau_max_dev, std::abs(sp.values[i] - 1.0));
  b.plateau_ok = b.plateau_max_dev <= tol;
  const int dn = degree_sequence(g).degrees.back();
  b.qn_ok = b.qn >= -tol && b.qn < dn;
  b.margin = b.qn;
  return b;
}

inline BoundReport snplus_band_check(int n, double tol = 1e-8) {
  const SnPlusBandReport b = snplus_bands(n, tol);
  BoundReport r;
  r.kind = "snplus_bands";
  r.n = n;
  r.tol = tol;
  r.lhs = b.q1;
  r.rhs = n + 1.0 / n;
  r.witness = "S_" + std::to_string(n) + "+";
  r.verdict = b.all_ok() ? Verdict::Strict : Verdict::Violated;
  r.note = std::string("q1 band ") + (b.q1_in_band ? "ok" : "VIOLATED") + ", q2 band " +
           (b.q2_in_band ? "ok" : "VIOLATED") + ", plateau " + (b.plateau_ok ? "ok" : "VIOLATED") +
           ", qn " + (b.qn_ok ? "ok" : "VIOLATED");
  return r;
}

}  // namespace specbound
