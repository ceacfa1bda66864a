#pragma once

#include <string>
#include <vector>

#include "opstruct/rational.hpp"

namespace opstruct {

// Dense univariate polynomial over Rational; coeffs()[k] multiplies x^k.
// Trailing zeros are never stored, so the zero polynomial has no
// coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(int k, const Rational& c = 1);
  static Poly x() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Coefficient of x^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const Rational& leading() const { return coeff(degree()); }

  Rational operator()(const Rational& at) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable form, ascending powers: "1 - 1/2*x".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly poly_mul(const Poly& p, const Poly& q);
Rational poly_eval(const Poly& p, const Rational& at);

}  // namespace opstruct
