#pragma once

#include <map>
#include <utility>
#include <vector>

#include "opstruct/mops.hpp"
#include "opstruct/relation.hpp"
#include "opstruct/report.hpp"

namespace opstruct {

// Candidate recurrence coefficients; gamma may contain zeros.
struct CandidateCoeffs {
  std::vector<Rational> betas;   // index n, n = 0..n_max-1
  std::vector<Rational> gammas;  // gammas[n-1] is gamma_n, n = 1..n_max-1

  const Rational& beta(int n) const { return betas.at(n); }
  const Rational& gamma(int n) const { return gammas.at(n - 1); }
  int size() const { return static_cast<int>(betas.size()); }
  // Throws NotRegular when some gamma vanishes.
  RecurrenceCoeffs as_recurrence() const { return RecurrenceCoeffs(betas, gammas); }
};

// beta*_n = beta_n + r_{1,n} - r_{1,n+1},
// gamma*_n = gamma_n + r_{1,n}(beta_{n-1} - beta*_n) + r_{2,n} - r_{2,n+1}.
using StarCoeffs = CandidateCoeffs;
// beta~_n = beta*_n + s_{1,n+1} - s_{1,n},
// gamma~_n = gamma*_n + s_{1,n}(beta*_n - beta~_{n-1}) + s_{2,n+1} - s_{2,n}.
using TildeCoeffs = CandidateCoeffs;

StarCoeffs star_coeffs(const RecurrenceCoeffs& rc, const StructureRelation& rel, int n_max);
TildeCoeffs tilde_coeffs(const StarCoeffs& star, const StructureRelation& rel, int n_max);

struct GridRange {
  int i = 0;
  int n_from = 0;
  int n_to = -1;  // empty when n_to < n_from
};

struct ConditionGrid {
  char family = 'A';
  std::map<std::pair<int, int>, Rational> values;  // (i, n) -> value
  std::vector<GridRange> ranges;

  // Entries with n >= n_from that do not vanish, in (i, n) order.
  std::vector<Datum> violations(int n_from = 0) const;
};

// A_{i,n} for 2 <= i <= N+1, i <= n <= n_max-1 (empty when N = 0).
ConditionGrid condition_values_A(const RecurrenceCoeffs& rc, const StructureRelation& rel, const StarCoeffs& star,
                                 int n_max);
// B_{i,n} for 2 <= i <= M+1, i <= n <= n_max-1 (empty when M = 0).
ConditionGrid condition_values_B(const StarCoeffs& star, const TildeCoeffs& tilde, const StructureRelation& rel,
                                 int n_max);

// Is R_n = P_n + sum r_{i,n} P_{n-i} a MOPS through degree n_max? Throws
// HypothesisFail when r_{N,n} = 0 for some N <= n <= n_max.
CheckReport check_R_orthogonal(const RecurrenceCoeffs& rc, const StructureRelation& rel, int n_max);
// Is Q (from R_n = Q_n + sum s_{i,n} Q_{n-i}, R a MOPS with coefficients
// star) a MOPS through degree n_max? Throws HypothesisFail when s_{M,n} = 0.
CheckReport check_Q_orthogonal(const StarCoeffs& star, const StructureRelation& rel, int n_max);

// Combined characterization of the orthogonality of Q given the MOPS P.
// Throws HypothesisFail when P is not a MOPS on the range, det A = 0, or
// r_{N,n} s_{M,n} = 0 for some N+M <= n <= n_max.
CheckReport theorem_main_check(const RelationInstance& inst, int n_max);

}  // namespace opstruct
