#include "opstruct/inverse.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "opstruct/error.hpp"
#include "opstruct/matrix.hpp"

namespace opstruct {

InitialConditions check_initial_conditions(const RelationInstance& inst) {
  const int N = inst.N();
  const int M = inst.M();
  InitialConditions ic;
  ic.det_A = det(matrix_A(inst));
  ic.r_N = inst.relation().r(N, N + M);
  ic.s_M = inst.relation().s(M, N + M);
  ic.pass = !is_zero(ic.det_A) && !is_zero(ic.r_N) && !is_zero(ic.s_M);
  return ic;
}

namespace {

std::vector<Rational> cramer(const Matrix& b, int n, const Rational& lead, auto&& column_matrix, const char* name) {
  const int size = static_cast<int>(b.rows());
  const Rational d = det(b);
  if (is_zero(d)) {
    throw Error(ErrorKind::singular_system, std::string("det ") + name + "_" + std::to_string(n) + " = 0");
  }
  std::vector<Rational> out(size);
  for (int c = 0; c < size; ++c) {
    // Column c carries the unknown with index size-1-c.
    out[size - 1 - c] = -lead * det(column_matrix(c)) / d;
  }
  return out;
}

void check_solve_index(const RelationInstance& inst, int n) {
  if (n < inst.N() + inst.M() || n > inst.depth()) {
    throw Error(ErrorKind::index_out_of_range, "Cramer system at n = " + std::to_string(n) + " needs " +
                                                   std::to_string(inst.N() + inst.M()) + " <= n <= " +
                                                   std::to_string(inst.depth()));
  }
}

}  // namespace

std::vector<Rational> solve_lambda(const RelationInstance& inst, int n) {
  if (inst.N() == 0) return {};
  check_solve_index(inst, n);
  const Rational& lead = inst.relation().r(inst.N(), inst.N() + inst.M());
  return cramer(matrix_B(inst, n), n, lead, [&](int c) { return matrix_B_i(inst, n, c); }, "B");
}

std::vector<Rational> solve_mu(const RelationInstance& inst, int n) {
  if (inst.M() == 0) return {};
  check_solve_index(inst, n);
  const Rational& lead = inst.relation().s(inst.M(), inst.N() + inst.M());
  return cramer(matrix_Btilde(inst, n), n, lead, [&](int c) { return matrix_Btilde_i(inst, n, c); }, "Btilde");
}

Poly assemble_psi(const RelationInstance& inst, const std::vector<Rational>& lambda) {
  const int N = inst.N();
  Poly psi = inst.Q_bar(N) * inst.relation().r(N, N + inst.M());
  for (int i = 0; i < N; ++i) psi += inst.Q_bar(i) * lambda[i];
  return psi;
}

Poly assemble_phi(const RelationInstance& inst, const std::vector<Rational>& mu) {
  const int M = inst.M();
  Poly phi = inst.P_bar(M) * inst.relation().s(M, inst.N() + M);
  for (int i = 0; i < M; ++i) phi += inst.P_bar(i) * mu[i];
  return phi;
}

int max_identity_horizon(const Poly& phi, const MomentFunctional& u, const Poly& psi, const MomentFunctional& v) {
  return std::min(u.depth() - std::max(phi.degree(), 0), v.depth() - std::max(psi.degree(), 0));
}

int agreement_horizon(const Poly& phi, const MomentFunctional& u, const Poly& psi, const MomentFunctional& v,
                      int K) {
  if (K > max_identity_horizon(phi, u, psi, v)) {
    throw Error(ErrorKind::truncation_exceeded, "identity through x^" + std::to_string(K) + " needs moments through " +
                                                    std::to_string(K + std::max(phi.degree(), psi.degree())));
  }
  const MomentFunctional lhs = poly_mod(phi, u);
  const MomentFunctional rhs = poly_mod(psi, v);
  for (int k = 0; k <= K; ++k) {
    if (lhs.moment(k) != rhs.moment(k)) return k - 1;
  }
  return K;
}

bool verify_functional_identity(const FunctionalRelation& fr, const MomentFunctional& u, const MomentFunctional& v,
                                int K) {
  return agreement_horizon(fr.phi, u, fr.psi, v, K) == K;
}

namespace {

void verify_to_limit(FunctionalRelation& fr, const RelationInstance& inst) {
  const int K = max_identity_horizon(fr.phi, inst.u(), fr.psi, inst.v());
  fr.verified_to = K < 0 ? -1 : agreement_horizon(fr.phi, inst.u(), fr.psi, inst.v(), K);
}

}  // namespace

FunctionalRelation build_functional_relation(const RelationInstance& inst) {
  FunctionalRelation fr;
  const int N = inst.N();
  const int M = inst.M();
  if (N == 0 && M == 0) {
    fr.phi = Poly::constant(1);
    fr.psi = Poly::constant(1);
    fr.route = "trivial";
    verify_to_limit(fr, inst);
    return fr;
  }
  const InitialConditions ic = check_initial_conditions(inst);
  if (!ic.pass) {
    throw Error(ErrorKind::initial_conditions_fail, "det A = " + to_string(ic.det_A) + ", r_{N,N+M} = " +
                                                        to_string(ic.r_N) + ", s_{M,N+M} = " + to_string(ic.s_M));
  }
  fr.lambda = solve_lambda(inst, N + M);
  fr.mu = solve_mu(inst, N + M);
  fr.psi = assemble_psi(inst, fr.lambda);
  fr.phi = assemble_phi(inst, fr.mu);
  fr.route = "general";
  verify_to_limit(fr, inst);
  return fr;
}

CheckReport check_constancy(const RelationInstance& inst, int n_from, int n_to) {
  CheckReport rep;
  rep.check = "constancy";
  const int N = inst.N();
  const int M = inst.M();
  if (N == 0 && M == 0) {
    rep.status = Status::not_applicable;
    rep.note("N = M = 0: no unknown coefficients");
    return rep;
  }
  n_from = std::max(n_from, N + M);
  std::vector<Rational> lambda0;
  std::vector<Rational> mu0;
  for (int n = n_from; n <= n_to; ++n) {
    const auto lambda = solve_lambda(inst, n);
    const auto mu = solve_mu(inst, n);
    if (n == n_from) {
      lambda0 = lambda;
      mu0 = mu;
    }
    for (int i = 0; i < N; ++i) {
      rep.record({"lambda", i, n, lambda[i]});
      if (lambda[i] != lambda0[i]) rep.fail({"lambda", i, n, lambda[i] - lambda0[i]});
    }
    for (int i = 0; i < M; ++i) {
      rep.record({"mu", i, n, mu[i]});
      if (mu[i] != mu0[i]) rep.fail({"mu", i, n, mu[i] - mu0[i]});
    }
    // The solved coefficients must satisfy the systems they came from.
    if (N > 0) {
      const Poly psi = assemble_psi(inst, lambda);
      for (int j = 0; j < N; ++j) {
        Rational res = apply(inst.v(), poly_mul(psi, inst.P()[n - j]));
        if (!is_zero(res)) rep.fail({"cramer_residual_lambda", j, n, res});
      }
    }
    if (M > 0) {
      const Poly phi = assemble_phi(inst, mu);
      for (int j = 0; j < M; ++j) {
        Rational res = apply(inst.u(), poly_mul(phi, inst.Q()[n - j]));
        if (!is_zero(res)) rep.fail({"cramer_residual_mu", j, n, res});
      }
    }
  }
  return rep;
}

CheckReport check_nonvanishing(const RelationInstance& inst, int n_to) {
  CheckReport rep;
  rep.check = "nonvanishing";
  const int N = inst.N();
  const int M = inst.M();
  const auto& rel = inst.relation();
  if (N == 0) rep.note("N = 0: only s_{M,n} checked");
  if (M == 0) rep.note("M = 0: only r_{N,n} checked");
  const Rational& r_lead = rel.r(N, N + M);
  const Rational& s_lead = rel.s(M, N + M);
  for (int n = N + M; n <= n_to; ++n) {
    const Rational& r = rel.r(N, n);
    const Rational& s = rel.s(M, n);
    if (N > 0 && is_zero(r)) rep.fail({"r_N", N, n, r});
    if (M > 0 && is_zero(s)) rep.fail({"s_M", M, n, s});
    const Rational lhs = s_lead * r * inst.norm_u(n - N) / inst.norm_u(M);
    const Rational rhs = r_lead * s * inst.norm_v(n - M) / inst.norm_v(N);
    rep.record({"cross_lhs", -1, n, lhs});
    rep.record({"cross_rhs", -1, n, rhs});
    if (lhs != rhs) rep.fail({"cross_residual", -1, n, lhs - rhs});
  }
  return rep;
}

int uniqueness_dimension(const MomentFunctional& u, const MomentFunctional& v, int N, int M, int K) {
  if (K + M > u.depth() || K + N > v.depth()) {
    throw Error(ErrorKind::truncation_exceeded, "uniqueness at horizon " + std::to_string(K) + " needs moments of u through " +
                                                    std::to_string(K + M) + " and of v through " + std::to_string(K + N));
  }
  // Unknowns: phi_0..phi_M, then psi_0..psi_N.
  Matrix sys(K + 1, M + N + 2);
  for (int k = 0; k <= K; ++k) {
    for (int a = 0; a <= M; ++a) sys(k, a) = u.moment(a + k);
    for (int b = 0; b <= N; ++b) sys(k, M + 1 + b) = -v.moment(b + k);
  }
  return M + N + 2 - static_cast<int>(rank(sys));
}

FunctionalRelation solve_m_zero(const RelationInstance& inst) {
  const int N = inst.N();
  const int M = inst.M();
  FunctionalRelation fr;
  if (M == 0 && N >= 1) {
    const Rational& r = inst.relation().r(N, N);
    if (is_zero(r)) throw Error(ErrorKind::initial_conditions_fail, "r_{N,N} = 0");
    fr.phi = Poly::constant(1);
    for (int n = 0; n <= N; ++n) {
      const Rational c = apply(inst.u(), inst.Q()[n]);
      fr.psi += inst.Q_bar(n) * c;
      if (n < N) fr.lambda.push_back(c);
    }
    fr.route = "m_zero";
  } else if (N == 0 && M >= 1) {
    const Rational& s = inst.relation().s(M, M);
    if (is_zero(s)) throw Error(ErrorKind::initial_conditions_fail, "s_{M,M} = 0");
    fr.psi = Poly::constant(1);
    for (int n = 0; n <= M; ++n) {
      const Rational c = apply(inst.v(), inst.P()[n]);
      fr.phi += inst.P_bar(n) * c;
      if (n < M) fr.mu.push_back(c);
    }
    fr.route = "n_zero";
  } else {
    throw Error(ErrorKind::invalid_parameter, "solve_m_zero needs M = 0 or N = 0 (not both)");
  }
  verify_to_limit(fr, inst);
  return fr;
}

}  // namespace opstruct
