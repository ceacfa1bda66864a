#pragma once

#include <string>
#include <vector>

#include "opstruct/functional.hpp"
#include "opstruct/poly.hpp"
#include "opstruct/relation.hpp"
#include "opstruct/report.hpp"

namespace opstruct {

struct InitialConditions {
  Rational det_A;  // pairing route
  Rational r_N;    // r_{N,N+M} (1 when N = 0)
  Rational s_M;    // s_{M,N+M} (1 when M = 0)
  bool pass = false;
};

InitialConditions check_initial_conditions(const RelationInstance& inst);

// Cramer solution of <Psi v, P_{n-j}> = 0, j = 0..N-1, with the leading
// coefficient of Psi fixed to r_{N,N+M}. result[i] = lambda_i. Needs n >= N+M.
std::vector<Rational> solve_lambda(const RelationInstance& inst, int n);
// Mirror: <Phi u, Q_{n-j}> = 0 with leading coefficient s_{M,N+M}.
std::vector<Rational> solve_mu(const RelationInstance& inst, int n);

// Psi = r_{N,N+M} Q_bar_N + sum lambda_i Q_bar_i,
// Phi = s_{M,N+M} P_bar_M + sum mu_i P_bar_i.
Poly assemble_psi(const RelationInstance& inst, const std::vector<Rational>& lambda);
Poly assemble_phi(const RelationInstance& inst, const std::vector<Rational>& mu);

// Phi u = Psi v.
struct FunctionalRelation {
  Poly phi;
  Poly psi;
  std::vector<Rational> lambda;
  std::vector<Rational> mu;
  int verified_to = -1;  // moments k <= verified_to agree; -1 when unchecked or k = 0 fails
  std::string route;     // "general", "m_zero", "n_zero" or "trivial"
};

// Throws InitialConditionsFail unless the initial conditions hold, and
// SingularSystem from the Cramer solves.
FunctionalRelation build_functional_relation(const RelationInstance& inst);

// Largest k' <= K with <phi u, x^k> = <psi v, x^k> for all k <= k', or -1.
int agreement_horizon(const Poly& phi, const MomentFunctional& u, const Poly& psi, const MomentFunctional& v,
                      int K);
// Largest K usable by agreement_horizon for these degrees.
int max_identity_horizon(const Poly& phi, const MomentFunctional& u, const Poly& psi, const MomentFunctional& v);
bool verify_functional_identity(const FunctionalRelation& fr, const MomentFunctional& u, const MomentFunctional& v,
                                int K);

// lambda_{i,n}, mu_{i,n} across n, exact comparison against the values at
// n_from, plus back-substitution residuals of each Cramer solve.
CheckReport check_constancy(const RelationInstance& inst, int n_from, int n_to);

// r_{N,n} != 0, s_{M,n} != 0 for N+M <= n <= n_to, and the residual of
// s_{M,N+M} r_{N,n} h^u_{n-N} / h^u_M = r_{N,N+M} s_{M,n} h^v_{n-M} / h^v_N.
CheckReport check_nonvanishing(const RelationInstance& inst, int n_to);

// Dimension of {(Phi, Psi): deg Phi <= M, deg Psi <= N, <Phi u - Psi v, x^k> = 0, k <= K}.
int uniqueness_dimension(const MomentFunctional& u, const MomentFunctional& v, int N, int M, int K);

// M = 0: u = Psi_N v with Psi_N = sum_{n<=N} <u, Q_n> Q_bar_n. For N = 0 the
// mirrored expansion v = Phi_M u is built. Verified through the largest
// horizon both functionals allow.
FunctionalRelation solve_m_zero(const RelationInstance& inst);

}  // namespace opstruct
