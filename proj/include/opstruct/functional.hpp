#pragma once

#include <vector>

#include "opstruct/poly.hpp"
#include "opstruct/rational.hpp"

namespace opstruct {

// Linear functional known through its moments mu_k = <u, x^k>, k = 0..K.
// Every consumer checks degrees against the truncation depth K.
class MomentFunctional {
 public:
  MomentFunctional() = default;
  explicit MomentFunctional(std::vector<Rational> moments);

  int depth() const { return static_cast<int>(moments_.size()) - 1; }
  const std::vector<Rational>& moments() const { return moments_; }
  const Rational& moment(int k) const;
  bool is_normalized() const { return !moments_.empty() && moments_.front() == 1; }

  friend bool operator==(const MomentFunctional&, const MomentFunctional&) = default;

 private:
  std::vector<Rational> moments_;
};

struct RegularityCertificate {
  int n_checked = -1;
  std::vector<Rational> hankel_dets;  // Delta_0 .. Delta_{n_checked}

  bool regular() const;
  // First m with Delta_m = 0, or -1.
  int first_singular() const;
};

// <u, p>.
Rational apply(const MomentFunctional& u, const Poly& p);

// Moments of phi*u, i.e. <phi u, x^k> = <u, phi x^k>. Not renormalized.
MomentFunctional poly_mod(const Poly& phi, const MomentFunctional& u);

// p / <u, p^2>.
Poly normalized(const Poly& p, const MomentFunctional& u);

// Hankel determinants det[mu_{i+j}]_{i,j<=m} for m = 0..n.
RegularityCertificate hankel_regular(const MomentFunctional& u, int n);

}  // namespace opstruct
