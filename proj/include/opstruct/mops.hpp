#pragma once

#include <span>
#include <string>
#include <vector>

#include "opstruct/functional.hpp"
#include "opstruct/poly.hpp"
#include "opstruct/rational.hpp"

namespace opstruct {

// Coefficients of P_{n+1} = (x - beta_n) P_n - gamma_n P_{n-1}:
// beta_0..beta_{n-1} and gamma_1..gamma_{n-1}. Construction enforces
// gamma_n != 0 (Favard).
class RecurrenceCoeffs {
 public:
  RecurrenceCoeffs() = default;
  RecurrenceCoeffs(std::vector<Rational> betas, std::vector<Rational> gammas);

  // Number of steps available: generate() can reach P_size().
  int size() const { return static_cast<int>(betas_.size()); }
  const Rational& beta(int n) const;
  const Rational& gamma(int n) const;

  const std::vector<Rational>& betas() const { return betas_; }
  // gammas()[0] is gamma_1.
  const std::vector<Rational>& gammas() const { return gammas_; }

  RecurrenceCoeffs truncated(int n) const;

  friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;

 private:
  std::vector<Rational> betas_;
  std::vector<Rational> gammas_;
};

struct Mops {
  std::vector<Poly> polys;          // P_0..P_{n_max}
  MomentFunctional functional;
  RecurrenceCoeffs recurrence;
  std::vector<Rational> norms;      // h_n = <u, P_n^2>

  int n_max() const { return static_cast<int>(polys.size()) - 1; }
};

std::vector<Poly> generate(const RecurrenceCoeffs& rc, int n_max);

// Gram-Schmidt on the Krylov basis x P_{n-1}; needs 2 n_max <= depth.
RecurrenceCoeffs recurrence_from_moments(const MomentFunctional& u, int n_max);

// Moments of the functional whose MOPS satisfies rc, through `depth`
// (at most 2 * rc.size() - 1).
MomentFunctional moments_from_recurrence(const RecurrenceCoeffs& rc, int depth);
int max_moment_depth(const RecurrenceCoeffs& rc);

Mops mops_from_moments(const MomentFunctional& u, int n_max);
Mops mops_from_recurrence(const RecurrenceCoeffs& rc, int n_max);

enum class FamilyKind { legendre, chebyshev_t, chebyshev_u, jacobi, laguerre, hermite };

struct FamilySpec {
  FamilyKind kind = FamilyKind::legendre;
  Rational alpha;  // jacobi, laguerre
  Rational beta;   // jacobi

  static FamilySpec legendre() { return {FamilyKind::legendre, 0, 0}; }
  static FamilySpec chebyshev_t() { return {FamilyKind::chebyshev_t, 0, 0}; }
  static FamilySpec chebyshev_u() { return {FamilyKind::chebyshev_u, 0, 0}; }
  static FamilySpec jacobi(Rational a, Rational b) { return {FamilyKind::jacobi, std::move(a), std::move(b)}; }
  static FamilySpec laguerre(Rational a) { return {FamilyKind::laguerre, std::move(a), 0}; }
  static FamilySpec hermite() { return {FamilyKind::hermite, 0, 0}; }

  std::string name() const;
};

FamilyKind parse_family_kind(const std::string& name);

struct FamilyData {
  MomentFunctional functional;
  RecurrenceCoeffs recurrence;
};

// Closed-form exact moments through K, and the recurrence extracted from
// them (floor(K/2) steps).
MomentFunctional family_moments(const FamilySpec& family, int K);
FamilyData classical_family(const FamilySpec& family, int K);

// Coefficients of x * seq[n] in the basis seq[0..n+1], for n = 0..size-2.
// Throws NotABasis unless every seq[n] is monic of degree n.
std::vector<std::vector<Rational>> favard_expand(std::span<const Poly> seq);

struct FavardResult {
  bool orthogonal = false;
  RecurrenceCoeffs recurrence;  // filled when orthogonal
  int violation = -1;           // first failing n
  std::string reason;
};

// Decides whether seq satisfies a three-term recurrence with nonzero gammas.
FavardResult favard_oracle(std::span<const Poly> seq);

}  // namespace opstruct
