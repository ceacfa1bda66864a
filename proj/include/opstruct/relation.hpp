#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opstruct/functional.hpp"
#include "opstruct/matrix.hpp"
#include "opstruct/mops.hpp"
#include "opstruct/poly.hpp"
#include "opstruct/report.hpp"

namespace opstruct {

// P_n + sum_{i=1}^N r_{i,n} P_{n-i} = Q_n + sum_{i=1}^M s_{i,n} Q_{n-i}.
// Tables are dense: r_table()[i-1][n] for n = 0..depth(), with the
// entries i > n stored as explicit zeros.
class StructureRelation {
 public:
  StructureRelation() = default;
  StructureRelation(int N, int M, std::vector<std::vector<Rational>> r, std::vector<std::vector<Rational>> s);

  // N = M = 0: P_n = Q_n, no tables.
  static StructureRelation identity() { return {}; }

  int N() const { return N_; }
  int M() const { return M_; }
  // Largest n covered by every table (unbounded when N = M = 0).
  int depth() const;

  // r_{0,n} = 1 and s_{0,n} = 1 (the leading terms); zero for i outside
  // 0..N (resp. 0..M) or n < 0. Throws InsufficientCoefficients past depth().
  const Rational& r(int i, int n) const;
  const Rational& s(int i, int n) const;

  const std::vector<std::vector<Rational>>& r_table() const { return r_; }
  const std::vector<std::vector<Rational>>& s_table() const { return s_; }

  StructureRelation with_r(int i, int n, const Rational& value) const;
  StructureRelation with_s(int i, int n, const Rational& value) const;
  // Roles of the two sides exchanged.
  StructureRelation mirrored() const;

  friend bool operator==(const StructureRelation&, const StructureRelation&) = default;

 private:
  int N_ = 0;
  int M_ = 0;
  std::vector<std::vector<Rational>> r_;
  std::vector<std::vector<Rational>> s_;
};

std::vector<Poly> build_R(const std::vector<Poly>& P, const StructureRelation& rel);
// Q_n = R_n - sum s_{i,n} Q_{n-i}; unitriangular, always solvable.
std::vector<Poly> solve_Q(const std::vector<Poly>& R, const StructureRelation& rel);
// P_n = R_n - sum r_{i,n} P_{n-i}.
std::vector<Poly> solve_P(const std::vector<Poly>& R, const StructureRelation& rel);

enum class Anchor { P, Q };

// One side of an instance: a monic sequence, and its functional when known.
struct SequenceSide {
  std::vector<Poly> polys;
  std::optional<MomentFunctional> functional;
  // Recurrence of the longest prefix polys[0..orthogonal_through] that
  // satisfies a three-term recurrence with nonzero gammas.
  RecurrenceCoeffs recurrence;
  int orthogonal_through = 0;
  // How the functional was obtained: "anchor", "given" or "derived(prefix m)".
  std::string functional_origin;
};

// A relation together with both sequences. One side (the anchor) is a MOPS
// supplied by the caller; the other is computed from the relation. The
// computed side's functional is either supplied or derived from its
// longest orthogonal prefix.
class RelationInstance {
 public:
  static RelationInstance from_P(const Mops& P, StructureRelation rel, std::optional<MomentFunctional> v = {});
  static RelationInstance from_Q(const Mops& Q, StructureRelation rel, std::optional<MomentFunctional> u = {});

  const StructureRelation& relation() const { return rel_; }
  int N() const { return rel_.N(); }
  int M() const { return rel_.M(); }
  // Highest degree computed on every sequence.
  int depth() const { return static_cast<int>(R_.size()) - 1; }
  Anchor anchor() const { return anchor_; }

  const std::vector<Poly>& P() const { return P_.polys; }
  const std::vector<Poly>& Q() const { return Q_.polys; }
  const std::vector<Poly>& R() const { return R_; }
  const SequenceSide& p_side() const { return P_; }
  const SequenceSide& q_side() const { return Q_; }

  bool has_u() const { return P_.functional.has_value(); }
  bool has_v() const { return Q_.functional.has_value(); }
  const MomentFunctional& u() const;
  const MomentFunctional& v() const;

  // True when the whole computed side is a MOPS.
  bool p_orthogonal() const { return P_.orthogonal_through == depth(); }
  bool q_orthogonal() const { return Q_.orthogonal_through == depth(); }

  // <u, P_n^2> and <v, Q_n^2>, cached.
  const Rational& norm_u(int n) const;
  const Rational& norm_v(int n) const;
  Poly P_bar(int n) const;
  Poly Q_bar(int n) const;
  // <P_bar_a u, p> and <Q_bar_a v, p>.
  Rational pair_u(int a, const Poly& p) const;
  Rational pair_v(int a, const Poly& p) const;

 private:
  RelationInstance() = default;
  static void analyze_side(SequenceSide& side);
  void finish();

  StructureRelation rel_;
  Anchor anchor_ = Anchor::P;
  SequenceSide P_;
  SequenceSide Q_;
  std::vector<Poly> R_;
  mutable std::vector<std::optional<Rational>> norm_u_cache_;
  mutable std::vector<std::optional<Rational>> norm_v_cache_;
};

// (M+N)x(M+N) matrix of pairings <f_row, R_k>, rows P_bar_0 u..P_bar_{M-1} u
// then Q_bar_0 v..Q_bar_{N-1} v.
Matrix matrix_A(const RelationInstance& inst);
// The same matrix read off the relation coefficients through the dual bases
// of the simple sets (P_n), (Q_n); needs no functional.
Matrix matrix_A_from_coefficients(const StructureRelation& rel);
// Pairings <f_row, R_k> for M+N <= k <= k_to; all vanish when both sides
// are MOPS.
CheckReport matrix_A_tail(const RelationInstance& inst, int k_to);

// Row j, column l: <Q_bar_{N-1-l} v, P_{n-j}>, n >= N-1.
Matrix matrix_B(const RelationInstance& inst, int n);
// matrix_B with column i replaced by (<Q_bar_N v, P_{n-j}>)_j. Column i
// carries the unknown lambda_{N-1-i}.
Matrix matrix_B_i(const RelationInstance& inst, int n, int i);
// Row j, column l: <P_bar_{M-1-l} u, Q_{n-j}>, n >= M-1.
Matrix matrix_Btilde(const RelationInstance& inst, int n);
Matrix matrix_Btilde_i(const RelationInstance& inst, int n, int i);

// Residuals det B_n - (-1)^N r_{N,n} det B_{n-1} and
// det Btilde_n - (-1)^M s_{M,n} det Btilde_{n-1} for n in range, n >= N+M.
CheckReport check_lemma_dets(const RelationInstance& inst, int n_from, int n_to);

}  // namespace opstruct
