#pragma once

#include <string>
#include <vector>

#include "specbound/rational.hpp"

namespace specbound {

/// Univariate polynomial with exact 64-bit integer coefficients, ascending
/// degree. Trailing zero coefficients are trimmed; the zero polynomial keeps
/// a single 0.
class IntPolynomial {
 public:
  IntPolynomial() : c_{0} {}
  explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(0);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  const std::vector<long long>& coeffs() const { return c_; }
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  // Exact Horner evaluation.
  Rational eval(const Rational& x) const {
    Rational acc(c_.back());
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i)
      acc = acc * x + Rational(c_[i]);
    return acc;
  }

  double eval(double x) const {
    double acc = static_cast<double>(c_.back());
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i)
      acc = acc * x + static_cast<double>(c_[i]);
    return acc;
  }

  // Canonical ascii rendering, ascending powers, zero terms skipped:
  // "5*x - 20*x^2 + 21*x^3 - 8*x^4 + x^5". The zero polynomial prints "0".
  std::string to_text() const {
    std::string out;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
      const long long c = c_[i];
      if (c == 0) continue;
      const long long mag = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const bool unit = mag == 1 && i > 0;
      if (!unit) out += std::to_string(mag);
      if (i > 0) {
        if (!unit) out += "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<long long> c_;
};

}  // namespace specbound
