#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "specbound/closedforms.hpp"
#include "specbound/quotient.hpp"
#include "specbound/rational.hpp"

using namespace specbound;
using Catch::Matchers::WithinAbs;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-2, -4).num() == 1);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).den() == 1);

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(7, 3).to_string() == "7/3");
  CHECK(Rational(-4).to_string() == "-4");

  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(3), std::overflow_error);
}

TEST_CASE("integer polynomials") {
  const IntPolynomial p({0, 5, -20, 21, -8, 1});
  CHECK(p.degree() == 5);
  CHECK(p.coeff(7) == 0);
  CHECK(p.to_text() == "5*x - 20*x^2 + 21*x^3 - 8*x^4 + x^5");
  CHECK(IntPolynomial({-4, 3}).to_text() == "-4 + 3*x");
  CHECK(IntPolynomial({7}).to_text() == "7");
  CHECK(IntPolynomial({0, 0, 0}).to_text() == "0");
  CHECK(IntPolynomial({1, 2, 0, 0}).degree() == 1);  // trailing zeros trimmed

  CHECK(p.eval(Rational(1)) == Rational(-1));
  CHECK(p.eval(Rational(1, 2)) == Rational(0 * 32 + 5 * 16 - 20 * 8 + 21 * 4 - 8 * 2 + 1, 32));
  CHECK_THAT(p.eval(2.0), WithinAbs(10.0 - 80.0 + 168.0 - 128.0 + 32.0, 1e-12));
}

TEST_CASE("quotient matrices match the expected block data") {
  SECTION("H(1,1,1)") {
    const QuotientMatrix q = quotient_H({1, 1, 1});
    const long long want[5][5] = {{2, 0, 1, 1, 0},
                                  {0, 2, 1, 0, 1},
                                  {1, 1, 2, 0, 0},
                                  {1, 0, 0, 1, 0},
                                  {0, 1, 0, 0, 1}};
    REQUIRE(q.order == 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(q.at(i, j) == want[i][j]);
  }
  SECTION("H_s0(1,1)") {
    const QuotientMatrix q = quotient_H_s0({1, 1, 0});
    const long long want[4][4] = {{2, 0, 1, 1}, {0, 1, 1, 0}, {1, 1, 2, 0}, {1, 0, 0, 1}};
    REQUIRE(q.order == 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(q.at(i, j) == want[i][j]);
  }
  SECTION("G(1,1,1)") {
    const QuotientMatrix q = quotient_G({1, 1, 1});
    const long long want[5][5] = {{3, 1, 1, 1, 0},
                                  {1, 3, 1, 0, 1},
                                  {1, 1, 2, 0, 0},
                                  {1, 0, 0, 1, 0},
                                  {0, 1, 0, 0, 1}};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(q.at(i, j) == want[i][j]);
  }
  SECTION("G_p0(1,1)") {
    const QuotientMatrix q = quotient_G_p0({0, 1, 1});
    const long long want[4][4] = {{2, 1, 1, 0}, {1, 2, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(q.at(i, j) == want[i][j]);
  }
  SECTION("row sums equal the Q row sums of each vertex class") {
    for (int p = 1; p <= 3; ++p)
      for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= r; ++s) {
          const FamilyParams fp{p, r, s};
          const Graph h = make_H(fp);
          const SymMatrix q = signless_laplacian(h);
          const int reps[5] = {0, 1, 2, 2 + p, 2 + p + r};  // one vertex per class
          const QuotientMatrix qm = quotient_H(fp);
          for (int c = 0; c < 5; ++c) {
            double row = 0;
            for (int j = 0; j < h.order(); ++j) row += q(reps[c], j);
            CHECK(qm.row_sum(c) == static_cast<long long>(row));
          }
        }
  }
  SECTION("preconditions") {
    CHECK_THROWS_AS(quotient_H({0, 1, 1}), hypothesis_error);
    CHECK_THROWS_AS(quotient_H({1, 1, 2}), hypothesis_error);  // r < s
    CHECK_THROWS_AS(quotient_H_s0({0, 1, 0}), hypothesis_error);
    CHECK_THROWS_AS(quotient_H_s0({1, 1, 1}), hypothesis_error);  // s != 0
    CHECK_THROWS_AS(quotient_G_p0({1, 1, 1}), hypothesis_error);  // p != 0
    CHECK_THROWS_AS(quotient_H({20000, 1, 1}), std::invalid_argument);
  }
}

TEST_CASE("charpoly by Faddeev-LeVerrier") {
  SECTION("identity gives (x-1)^order") {
    QuotientMatrix id;
    id.order = 4;
    for (int i = 0; i < 4; ++i) id.m[i][i] = 1;
    id.class_sizes = {1, 1, 1, 1};
    CHECK(charpoly(id) == IntPolynomial({1, -4, 6, -4, 1}));
  }
  SECTION("matches the hand-expanded closed forms on the full grid") {
    for (long long p = 1; p <= 6; ++p)
      for (long long r = 1; r <= 6; ++r) {
        const FamilyParams hr{static_cast<int>(p), static_cast<int>(r), 0};
        CHECK(charpoly(quotient_H_s0(hr)) == closedform::charpoly_H_s0(p, r));
        for (long long s = 1; s <= r; ++s) {
          const FamilyParams fp{static_cast<int>(p), static_cast<int>(r), static_cast<int>(s)};
          CHECK(charpoly(quotient_H(fp)) == closedform::charpoly_H(p, r, s));
          CHECK(charpoly(quotient_G(fp)) == closedform::charpoly_G(p, r, s));
        }
      }
    for (long long r = 1; r <= 6; ++r)
      for (long long s = 1; s <= 6; ++s)
        CHECK(charpoly(quotient_G_p0({0, static_cast<int>(r), static_cast<int>(s)})) ==
              closedform::charpoly_G_p0(r, s));
  }
  SECTION("zero constant terms, recorded sign pattern near 0") {
    // both 'H' and 'G_p0' charpolys vanish at 0; the slope signs decide the
    // sign just right of the origin
    const IntPolynomial fh = charpoly(quotient_H({2, 2, 1}));
    CHECK(fh.coeff(0) == 0);
    CHECK(fh.coeff(1) == 2 * (2 + 2 + 1 + 2));  // p(p+r+s+2) > 0
    const IntPolynomial fg0 = charpoly(quotient_G_p0({0, 3, 2}));
    CHECK(fg0.coeff(0) == 0);
    CHECK(fg0.coeff(1) == -(3 + 2 + 2));  // -(r+s+2) < 0
    const IntPolynomial fg = charpoly(quotient_G({2, 2, 1}));
    CHECK(fg.coeff(0) == -8);  // -4p < 0
  }
}

TEST_CASE("exact evaluation identities behind the sign arguments") {
  SECTION("H_s0: f(p) = r p^2") {
    for (long long p = 1; p <= 6; ++p)
      for (long long r = 1; r <= 6; ++r) {
        const Rational v =
            charpoly(quotient_H_s0({static_cast<int>(p), static_cast<int>(r), 0})).eval(Rational(p));
        CHECK(v == Rational(closedform::H_s0_value_at_p(p, r)));
        CHECK(v.sign() > 0);
      }
  }
  SECTION("G_p0: f(s+1) = s(s+1)(r-s)") {
    for (long long r = 1; r <= 6; ++r)
      for (long long s = 1; s <= 6; ++s) {
        const Rational v = charpoly(quotient_G_p0({0, static_cast<int>(r), static_cast<int>(s)}))
                               .eval(Rational(s + 1));
        CHECK(v == Rational(closedform::G_p0_value_at_s1(r, s)));
      }
  }
  SECTION("H: f(p+s) factors through (p+s) and is positive") {
    for (long long p = 1; p <= 6; ++p)
      for (long long s = 1; s <= 6; ++s)
        for (long long k = 0; k + s <= 6; ++k) {
          const FamilyParams fp{static_cast<int>(p), static_cast<int>(s + k), static_cast<int>(s)};
          const Rational v = charpoly(quotient_H(fp)).eval(Rational(p + s));
          CHECK(v == Rational(closedform::H_value_at_ps(p, s, k)));
          CHECK(v.sign() > 0);
        }
  }
  SECTION("G with r=s: f(d1+2) factored form, negative") {
    for (long long p = 1; p <= 6; ++p)
      for (long long r = 1; r <= 6; ++r) {
        const FamilyParams fp{static_cast<int>(p), static_cast<int>(r), static_cast<int>(r)};
        const Rational v = charpoly(quotient_G(fp)).eval(Rational(p + r + 1 + 2));
        CHECK(v == Rational(closedform::G_rs_value_at_d1p2(p, r)));
        if (p >= 2) CHECK(v.sign() < 0);
      }
  }
  SECTION("G: f(d2) cubic in s for r = s+k, positive from k >= 3") {
    for (long long p = 1; p <= 6; ++p)
      for (long long s = 1; s <= 6; ++s)
        for (long long k = 0; k <= 5; ++k) {
          const FamilyParams fp{static_cast<int>(p), static_cast<int>(s + k), static_cast<int>(s)};
          const Rational v = charpoly(quotient_G(fp)).eval(Rational(p + s + 1));
          CHECK(v == Rational(closedform::G_value_at_d2(p, s, k)));
          if (k >= 3) CHECK(v.sign() > 0);
        }
  }
  SECTION("G with p=1, r=s: half-integer points, 32 f(x) is integral") {
    for (long long r = 1; r <= 6; ++r) {
      const FamilyParams fp{1, static_cast<int>(r), static_cast<int>(r)};
      const IntPolynomial f = charpoly(quotient_G(fp));
      const long long d1 = 1 + r + 1, d2 = 1 + r + 1;
      const Rational v1 = f.eval(Rational(2 * d1 + 3, 2)) * Rational(32);
      const Rational v2 = f.eval(Rational(2 * d2 - 1, 2)) * Rational(32);
      CHECK(v1 == Rational(closedform::G_p1_value32_at_d1(r)));
      CHECK(v2 == Rational(closedform::G_p1_value32_at_d2(r)));
      CHECK(v1.sign() < 0);
      CHECK(v2.sign() > 0);
    }
  }
}

TEST_CASE("quotient spectra and the eigenvector families") {
  SECTION("charpoly vanishes on the quotient spectrum") {
    for (int p = 1; p <= 4; ++p)
      for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= r; ++s) {
          const QuotientMatrix qm = quotient_G({p, r, s});
          const IntPolynomial f = charpoly(qm);
          for (double lam : quotient_spectrum(qm).values) {
            double scale = 1.0;
            for (int i = 0; i <= f.degree(); ++i)
              scale += std::abs(static_cast<double>(f.coeff(i))) * std::pow(std::abs(lam), i);
            CHECK_THAT(f.eval(lam) / scale, WithinAbs(0.0, 1e-10));
          }
        }
  }
  SECTION("between the top two quotient eigenvalues the charpoly is negative") {
    for (int p = 1; p <= 4; ++p)
      for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= r; ++s)
          for (const bool with_uv : {false, true}) {
            const QuotientMatrix qm =
                with_uv ? quotient_G({p, r, s}) : quotient_H({p, r, s});
            const IntPolynomial f = charpoly(qm);
            const auto vals = quotient_spectrum(qm).values;
            const double q1 = vals[0], q2 = vals[1];
            if (q1 - q2 < 1e-6) continue;
            for (double t : {0.25, 0.5, 0.75}) {
              const double y = q2 + t * (q1 - q2);
              CHECK(f.eval(y) < 0.0);
            }
          }
  }
  SECTION("H(3,2,1): eigenvalue 2 twice, eigenvalue 1 once, union matches") {
    const auto rep = verify_eigvec_families(make_H({3, 2, 1}), {3, 2, 1}, FamilyKind::H);
    CHECK(rep.count_eig2 == 2);
    CHECK(rep.count_eig1 == 1);
    CHECK(rep.max_residual < 1e-12);
    CHECK(rep.union_matches);
  }
  SECTION("G(2,2,2): quotient + {2} + {1,1} is the whole spectrum") {
    const auto rep = verify_eigvec_families(make_G({2, 2, 2}), {2, 2, 2}, FamilyKind::G);
    CHECK(rep.count_eig2 == 1);
    CHECK(rep.count_eig1 == 2);
    CHECK(rep.union_matches);
  }
  SECTION("H(1,1,0): quotient order equals n, no fixed eigenvalues") {
    const auto rep = verify_eigvec_families(make_H({1, 1, 0}), {1, 1, 0}, FamilyKind::H_s0);
    CHECK(rep.count_eig2 == 0);
    CHECK(rep.count_eig1 == 0);
    CHECK(rep.union_matches);
  }
  SECTION("G_p0 family") {
    const auto rep = verify_eigvec_families(make_G({0, 3, 2}), {0, 3, 2}, FamilyKind::G_p0);
    CHECK(rep.count_eig1 == 3);
    CHECK(rep.union_matches);
  }
  SECTION("mismatched graph and params") {
    CHECK_THROWS_AS(verify_eigvec_families(make_H({2, 1, 1}), {1, 1, 1}, FamilyKind::H),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_eigvec_families(make_H({1, 1, 1}), {1, 1, 1}, FamilyKind::G),
                    std::invalid_argument);
  }
}
