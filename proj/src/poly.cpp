#include "opstruct/poly.hpp"

#include <algorithm>
#include <utility>

namespace opstruct {

namespace {
const Rational kZero;
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(int k, const Rational& c) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && opstruct::is_zero(coeffs_.back())) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (opstruct::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (opstruct::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeff(k);
    if (opstruct::is_zero(c)) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += opstruct::to_string(mag);
      continue;
    }
    if (mag != 1) out += opstruct::to_string(mag) + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

Rational poly_eval(const Poly& p, const Rational& at) { return p(at); }

}  // namespace opstruct
