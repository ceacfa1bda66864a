#include <gtest/gtest.h>

#include "instances.hpp"
#include "opstruct/error.hpp"
#include "opstruct/matrix.hpp"
#include "opstruct/relation.hpp"

namespace {

using namespace opstruct;

Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

std::vector<std::vector<Rational>> constant_rows(int rows, int depth, std::vector<Rational> values) {
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(depth + 1));
  for (int i = 1; i <= rows; ++i) {
    for (int n = i; n <= depth; ++n) t[i - 1][n] = values[i - 1];
  }
  return t;
}

std::vector<Poly> family_polys(const FamilySpec& f, int n) {
  return generate(classical_family(f, 2 * n + 2).recurrence, n);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no opstruct::Error thrown";
  return ErrorKind::schema_error;
}

const oracle::Worked& tu() {
  static const oracle::Worked w = oracle::tu_instance();
  return w;
}
const oracle::Worked& tu_mirrored() {
  static const oracle::Worked w = oracle::tu_mirrored_instance();
  return w;
}
const oracle::Worked& christoffel() {
  static const oracle::Worked w = oracle::christoffel_instance();
  return w;
}
const oracle::Worked& christoffel_mirrored() {
  static const oracle::Worked w = oracle::christoffel_mirrored_instance();
  return w;
}
const oracle::Worked& degenerate() {
  static const oracle::Worked w = oracle::degenerate_instance();
  return w;
}

}  // namespace

TEST(StructureRelation, LookupConventions) {
  const StructureRelation rel(1, 2, constant_rows(1, 6, {5}), constant_rows(2, 6, {7, 9}));
  EXPECT_EQ(rel.depth(), 6);
  EXPECT_EQ(rel.r(0, 3), 1);
  EXPECT_EQ(rel.s(0, 0), 1);
  EXPECT_EQ(rel.r(1, 3), 5);
  EXPECT_EQ(rel.s(2, 2), 9);
  EXPECT_EQ(rel.s(2, 1), 0);   // i > n
  EXPECT_EQ(rel.r(2, 4), 0);   // i > N
  EXPECT_EQ(rel.r(1, -1), 0);  // n < 0
  EXPECT_EQ(kind_of([&] { rel.r(1, 7); }), ErrorKind::insufficient_coefficients);
}

TEST(StructureRelation, RejectsEntriesAboveTheDiagonal) {
  auto r = constant_rows(2, 4, {1, 1});
  r[1][1] = 3;  // r_{2,1}
  EXPECT_EQ(kind_of([&] { StructureRelation(2, 0, r, {}); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([&] { StructureRelation(2, 0, constant_rows(1, 4, {1}), {}); }), ErrorKind::invalid_parameter);
}

TEST(StructureRelation, MirroredSwapsTables) {
  const StructureRelation rel(1, 2, constant_rows(1, 5, {5}), constant_rows(2, 5, {7, 9}));
  const StructureRelation m = rel.mirrored();
  EXPECT_EQ(m.N(), 2);
  EXPECT_EQ(m.M(), 1);
  EXPECT_EQ(m.r(2, 4), 9);
  EXPECT_EQ(m.s(1, 4), 5);
  EXPECT_EQ(m.mirrored(), rel);
}

TEST(BuildR, EmptySumIsIdentity) {
  const auto legendre = family_polys(FamilySpec::legendre(), 5);
  EXPECT_EQ(build_R(legendre, StructureRelation::identity()), legendre);
}

TEST(BuildR, LegendrePlusPrevious) {
  const auto legendre = family_polys(FamilySpec::legendre(), 5);
  const StructureRelation rel(1, 0, constant_rows(1, 5, {1}), {});
  EXPECT_EQ(build_R(legendre, rel)[2], P({frac(-1, 3), 1, 1}));
}

TEST(BuildR, ChebyshevUToT) {
  const auto u = family_polys(FamilySpec::chebyshev_u(), 8);
  const StructureRelation rel(2, 0, constant_rows(2, 8, {0, frac(-1, 4)}), {});
  const auto R = build_R(u, rel);
  EXPECT_EQ(R[2], P({frac(-1, 2), 0, 1}));
  EXPECT_EQ(R, family_polys(FamilySpec::chebyshev_t(), 8));
}

TEST(SolveQ, EmptySumIsIdentity) {
  const auto legendre = family_polys(FamilySpec::legendre(), 4);
  EXPECT_EQ(solve_Q(legendre, StructureRelation::identity()), legendre);
}

TEST(SolveQ, ConstantCoefficientBackSubstitution) {
  const Rational c = frac(2, 3);
  std::vector<Poly> R;
  for (int n = 0; n <= 4; ++n) R.push_back(Poly::monomial(n));
  const auto Q = solve_Q(R, StructureRelation(0, 1, {}, constant_rows(1, 4, {c})));
  EXPECT_EQ(Q[1], P({-c, 1}));
  EXPECT_EQ(Q[2], P({c * c, -c, 1}));
}

TEST(SolveQ, ChebyshevTToU) {
  const auto t = family_polys(FamilySpec::chebyshev_t(), 10);
  const StructureRelation rel(0, 2, {}, constant_rows(2, 10, {0, frac(-1, 4)}));
  const auto Q = solve_Q(t, rel);
  EXPECT_EQ(Q[2], P({frac(-1, 4), 0, 1}));
  EXPECT_EQ(Q, oracle::mops_by_hankel(oracle::chebyshev_u_moments(20), 10));
}

TEST(SolveQ, RandomRelationsRoundTrip) {
  auto gen = oracle::rng(31);
  const auto P0 = family_polys(FamilySpec::hermite(), 9);
  for (int t = 0; t < 20; ++t) {
    const int N = static_cast<int>(gen() % 4);
    const int M = static_cast<int>(gen() % 4);
    std::vector<std::vector<Rational>> r(N, std::vector<Rational>(10)), s(M, std::vector<Rational>(10));
    for (int i = 1; i <= N; ++i) {
      for (int n = i; n <= 9; ++n) r[i - 1][n] = oracle::random_rational(gen, 4, 3);
    }
    for (int i = 1; i <= M; ++i) {
      for (int n = i; n <= 9; ++n) s[i - 1][n] = oracle::random_rational(gen, 4, 3);
    }
    const StructureRelation rel(N, M, r, s);
    const auto Q = solve_Q(build_R(P0, rel), rel);
    EXPECT_EQ(Q, oracle::q_from_relation(P0, rel, 9));
    EXPECT_EQ(build_R(Q, rel.mirrored()), build_R(P0, rel));
    EXPECT_EQ(solve_P(build_R(Q, rel.mirrored()), rel), P0);
  }
}

TEST(SolveQ, TablesTooShort) {
  const auto legendre = family_polys(FamilySpec::legendre(), 6);
  const StructureRelation rel(0, 1, {}, constant_rows(1, 4, {1}));
  EXPECT_EQ(kind_of([&] { solve_Q(legendre, rel); }), ErrorKind::insufficient_coefficients);
}

TEST(RelationInstance, SequencesMatchOracles) {
  EXPECT_EQ(tu().inst.Q(), tu().Q);
  EXPECT_EQ(christoffel().inst.Q(), christoffel().Q);
  EXPECT_EQ(christoffel_mirrored().inst.P(), christoffel_mirrored().P);
  EXPECT_EQ(tu_mirrored().inst.Q(), tu_mirrored().Q);
  EXPECT_TRUE(tu().inst.q_orthogonal());
  EXPECT_EQ(tu().inst.q_side().functional_origin, "given");
  EXPECT_EQ(christoffel_mirrored().inst.anchor(), Anchor::Q);
}

TEST(RelationInstance, DerivedFunctionalMatchesTrueOne) {
  const auto& w = christoffel();
  const RelationInstance inst =
      RelationInstance::from_P(oracle::mops_of(w.u, oracle::kDegree), w.rel);
  EXPECT_TRUE(inst.has_v());
  const auto& v = inst.v().moments();
  ASSERT_GE(static_cast<int>(v.size()), 2 * oracle::kDegree);
  for (std::size_t k = 0; k < v.size(); ++k) EXPECT_EQ(v[k], w.v[k]) << k;
}

TEST(RelationInstance, NonOrthogonalSideReportsPrefix) {
  const auto& w = tu();
  const RelationInstance inst =
      RelationInstance::from_P(oracle::mops_of(w.u, oracle::kDegree), w.rel.with_s(2, 7, 1));
  // Q_7 moves by a multiple of Q_5, which keeps x Q_6 a three-term
  // combination; the first broken recurrence is the one producing Q_8.
  EXPECT_EQ(inst.q_side().orthogonal_through, 7);
  EXPECT_FALSE(inst.q_orthogonal());
  EXPECT_EQ(inst.q_side().functional_origin, "derived(prefix 7)");
}

TEST(MatrixA, PairingRouteEqualsCoefficientRoute) {
  for (const auto* w : {&tu(), &tu_mirrored(), &christoffel(), &christoffel_mirrored(), &degenerate()}) {
    EXPECT_EQ(matrix_A(w->inst), matrix_A_from_coefficients(w->rel)) << w->name;
  }
}

TEST(MatrixA, Examples) {
  EXPECT_EQ(matrix_A(christoffel_mirrored().inst), (Matrix{{1}}));
  const Matrix a = matrix_A(christoffel().inst);
  EXPECT_EQ(a, (Matrix{{1}}));
  EXPECT_NE(det(a), 0);
  EXPECT_EQ(det(matrix_A(degenerate().inst)), 0);
}

TEST(MatrixA, TailVanishesWhenBothSidesOrthogonal) {
  EXPECT_EQ(matrix_A_tail(tu().inst, 12).status, Status::pass);
  EXPECT_EQ(matrix_A_tail(christoffel_mirrored().inst, 12).status, Status::pass);
}

TEST(MatrixB, OneByOneIsPairingWithV) {
  const auto& w = christoffel_mirrored();
  for (int n = 0; n <= 8; ++n) {
    const Matrix b = matrix_B(w.inst, n);
    ASSERT_EQ(b.rows(), 1u);
    EXPECT_EQ(b(0, 0), oracle::pair(w.v, w.P[n]));
  }
  // P_1 = x + 1/6 under the Legendre functional.
  EXPECT_EQ(w.P[1], P({frac(1, 6), 1}));
  EXPECT_EQ(matrix_B(w.inst, 1)(0, 0), frac(1, 6));
}

TEST(MatrixB, UnitDeterminantAtNMinusOne) {
  EXPECT_EQ(det(matrix_B(christoffel_mirrored().inst, 0)), 1);
  EXPECT_EQ(det(matrix_B(tu_mirrored().inst, 1)), 1);
}

TEST(MatrixB, IndexRange) {
  EXPECT_EQ(kind_of([] { matrix_B(tu_mirrored().inst, 0); }), ErrorKind::index_out_of_range);
  EXPECT_EQ(kind_of([] { matrix_B(tu_mirrored().inst, oracle::kDegree + 1); }), ErrorKind::index_out_of_range);
}

TEST(MatrixBtilde, OneByOneIsPairingWithU) {
  const auto& w = christoffel();
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(matrix_Btilde(w.inst, n)(0, 0), oracle::pair(w.u, w.Q[n]));
}

TEST(MatrixBtilde, ChebyshevChain) {
  const auto& w = tu();
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(det(matrix_Btilde(w.inst, n)), frac(-1, 4) * det(matrix_Btilde(w.inst, n - 1))) << n;
  }
  // n = M - 1: the last row pairs against Q_0 = 1.
  const Matrix b = matrix_Btilde(w.inst, 1);
  EXPECT_EQ(b.rows(), 2u);
  EXPECT_EQ(b(1, 0), oracle::pair(w.u, w.P[1]) / oracle::pair(w.u, w.P[1] * w.P[1]));
  EXPECT_EQ(b(1, 1), 1);
}

TEST(MatrixBi, ColumnCarriesTheLeadingPairing) {
  const auto& w = tu();
  const Matrix b = matrix_Btilde_i(w.inst, 5, 0);
  for (int j = 0; j < 2; ++j) {
    const Poly& p2 = w.P[2];
    EXPECT_EQ(b(j, 0), oracle::pair(w.u, p2 * w.Q[5 - j]) / oracle::pair(w.u, p2 * p2));
    EXPECT_EQ(b(j, 1), matrix_Btilde(w.inst, 5)(j, 1));
  }
}

TEST(LemmaDets, ChebyshevResidualsVanish) {
  const CheckReport rep = check_lemma_dets(tu().inst, 4, 10);
  EXPECT_EQ(rep.status, Status::pass);
  bool vacuous = false;
  for (const auto& note : rep.notes) vacuous |= note.find("part a vacuous") != std::string::npos;
  EXPECT_TRUE(vacuous);
}

TEST(LemmaDets, IdentityIsNotApplicable) {
  const auto legendre = oracle::legendre_moments(30);
  const RelationInstance inst =
      RelationInstance::from_P(oracle::mops_of(legendre, 12), StructureRelation::identity(), MomentFunctional(legendre));
  EXPECT_EQ(check_lemma_dets(inst, 0, 10).status, Status::not_applicable);
}

TEST(LemmaDets, PerturbedRelationReportsFirstFailingDegree) {
  // Changing r_{1,6} with P and v held fixed breaks the orthogonality of Q_6
  // with respect to v; the chain of part a breaks exactly there.
  const auto& w = christoffel_mirrored();
  const RelationInstance bad = RelationInstance::from_P(oracle::mops_of(w.u, oracle::kDegree),
                                                        w.rel.with_r(1, 6, w.rel.r(1, 6) + 1), MomentFunctional(w.v));
  const CheckReport rep = check_lemma_dets(bad, 1, 10);
  ASSERT_EQ(rep.status, Status::fail);
  ASSERT_FALSE(rep.witnesses.empty());
  EXPECT_EQ(rep.witnesses.front().name, "residual_a");
  EXPECT_EQ(rep.witnesses.front().n, 6);

  // Mirror: s_{1,6} with Q and u held fixed.
  const auto& c = christoffel();
  const RelationInstance bad_s = RelationInstance::from_Q(oracle::mops_of(c.v, oracle::kDegree),
                                                          c.rel.with_s(1, 6, c.rel.s(1, 6) + 1), MomentFunctional(c.u));
  const CheckReport rep_s = check_lemma_dets(bad_s, 1, 10);
  ASSERT_EQ(rep_s.status, Status::fail);
  EXPECT_EQ(rep_s.witnesses.front().name, "residual_b");
  EXPECT_EQ(rep_s.witnesses.front().n, 6);
}
