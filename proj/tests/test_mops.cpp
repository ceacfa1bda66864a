#include <gtest/gtest.h>

#include "opstruct/error.hpp"
#include "opstruct/mops.hpp"
#include "oracles.hpp"

namespace {

using namespace opstruct;

Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

std::vector<Rational> R(std::initializer_list<Rational> c) { return c; }

RecurrenceCoeffs random_recurrence(std::mt19937_64& gen, int steps) {
  std::vector<Rational> b, g;
  for (int n = 0; n < steps; ++n) {
    b.push_back(oracle::random_rational(gen, 5, 4));
    if (n > 0) g.push_back(oracle::random_nonzero_rational(gen, 5, 4));
  }
  return RecurrenceCoeffs(b, g);
}

}  // namespace

TEST(Generate, OneStepExamples) {
  EXPECT_EQ(generate(RecurrenceCoeffs(R({0, 0}), R({frac(1, 4)})), 2)[2], P({frac(-1, 4), 0, 1}));
  EXPECT_EQ(generate(RecurrenceCoeffs(R({0, 0}), R({frac(1, 3)})), 2)[2], P({frac(-1, 3), 0, 1}));
  const auto p0 = generate(RecurrenceCoeffs(R({5}), R({})), 0);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_EQ(p0[0], P({1}));
}

TEST(Generate, TooFewSteps) {
  EXPECT_THROW(generate(RecurrenceCoeffs(R({0}), R({})), 2), Error);
}

TEST(Recurrence, FavardGateRejectsZeroGamma) {
  try {
    RecurrenceCoeffs(R({0, 0, 0, 0}), R({1, 1, 0}));
    FAIL() << "expected NotRegular";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_regular);
    EXPECT_NE(std::string(e.what()).find("gamma_3"), std::string::npos);
  }
}

TEST(RecurrenceFromMoments, ClassicalExamples) {
  const auto leg = recurrence_from_moments(MomentFunctional(oracle::legendre_moments(6)), 3);
  EXPECT_EQ(leg.betas(), R({0, 0, 0}));
  EXPECT_EQ(leg.gammas(), R({frac(1, 3), frac(4, 15)}));
  const auto cheb = recurrence_from_moments(MomentFunctional(oracle::chebyshev_t_moments(6)), 3);
  EXPECT_EQ(cheb.gammas(), R({frac(1, 2), frac(1, 4)}));
  const auto herm = recurrence_from_moments(MomentFunctional(oracle::hermite_moments(6)), 3);
  EXPECT_EQ(herm.betas(), R({0, 0, 0}));
  EXPECT_EQ(herm.gammas(), R({frac(1, 2), 1}));
}

TEST(RecurrenceFromMoments, SingularFunctional) {
  try {
    recurrence_from_moments(MomentFunctional({1, 1, 1, 1, 1, 1, 1}), 3);
    FAIL() << "expected NotRegular";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_regular);
  }
}

TEST(RecurrenceFromMoments, MatchesHankelOracle) {
  for (const auto& mu : {oracle::laguerre_moments(frac(3, 2), 24), oracle::hermite_moments(24),
                         oracle::normalize(oracle::modified_moments(P({3, 1, 1}), oracle::legendre_moments(26)))}) {
    const auto expected = oracle::mops_by_hankel(mu, 10);
    const Mops mops = mops_from_moments(MomentFunctional(mu), 10);
    EXPECT_EQ(mops.polys, expected);
    EXPECT_EQ(generate(mops.recurrence, 10), expected);
  }
}

TEST(FamilyMoments, Examples) {
  EXPECT_EQ(family_moments(FamilySpec::legendre(), 4).moments(), R({1, 0, frac(1, 3), 0, frac(1, 5)}));
  EXPECT_EQ(family_moments(FamilySpec::laguerre(0), 3).moments(), R({1, 1, 2, 6}));
  EXPECT_EQ(family_moments(FamilySpec::chebyshev_u(), 4).moments(), R({1, 0, frac(1, 4), 0, frac(1, 8)}));
}

TEST(FamilyMoments, AgreeWithIntegrationOracles) {
  const int K = 40;
  EXPECT_EQ(family_moments(FamilySpec::legendre(), K).moments(), oracle::legendre_moments(K));
  EXPECT_EQ(family_moments(FamilySpec::chebyshev_t(), K).moments(), oracle::chebyshev_t_moments(K));
  EXPECT_EQ(family_moments(FamilySpec::chebyshev_u(), K).moments(), oracle::chebyshev_u_moments(K));
  EXPECT_EQ(family_moments(FamilySpec::hermite(), K).moments(), oracle::hermite_moments(K));
  EXPECT_EQ(family_moments(FamilySpec::laguerre(frac(2, 3)), K).moments(), oracle::laguerre_moments(frac(2, 3), K));
  // Jacobi specializations.
  EXPECT_EQ(family_moments(FamilySpec::jacobi(0, 0), K).moments(), oracle::legendre_moments(K));
  EXPECT_EQ(family_moments(FamilySpec::jacobi(frac(-1, 2), frac(-1, 2)), K).moments(), oracle::chebyshev_t_moments(K));
  EXPECT_EQ(family_moments(FamilySpec::jacobi(frac(1, 2), frac(1, 2)), K).moments(), oracle::chebyshev_u_moments(K));
}

TEST(FamilyMoments, InvalidParameters) {
  EXPECT_THROW(family_moments(FamilySpec::laguerre(-1), 4), Error);
  EXPECT_THROW(family_moments(FamilySpec::jacobi(-2, 0), 4), Error);
  EXPECT_THROW(parse_family_kind("gegenbauer"), Error);
}

TEST(JacobiFamily, OrthogonalUnderItsMoments) {
  const FamilyData data = classical_family(FamilySpec::jacobi(frac(1, 3), 2), 24);
  const auto polys = generate(data.recurrence, 12);
  const auto& mu = data.functional.moments();
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b < a; ++b) EXPECT_EQ(oracle::pair(mu, polys[a] * polys[b]), 0);
  }
}

TEST(MomentsFromRecurrence, RoundTripOnRandomRecurrences) {
  auto gen = oracle::rng(21);
  for (int t = 0; t < 20; ++t) {
    const RecurrenceCoeffs rc = random_recurrence(gen, 8);
    const MomentFunctional u = moments_from_recurrence(rc, max_moment_depth(rc));
    EXPECT_EQ(u.depth(), 15);
    EXPECT_EQ(recurrence_from_moments(u, 7), rc.truncated(7));
    const auto polys = generate(rc, 7);
    EXPECT_EQ(oracle::mops_by_hankel(u.moments(), 7), polys);
  }
}

TEST(MopsFromRecurrence, NormsAreGammaProducts) {
  auto gen = oracle::rng(22);
  const RecurrenceCoeffs rc = random_recurrence(gen, 9);
  const Mops m = mops_from_recurrence(rc, 8);
  Rational h = 1;
  for (int n = 0; n <= 8; ++n) {
    if (n > 0) h *= rc.gamma(n);
    EXPECT_EQ(m.norms[n], h);
    EXPECT_EQ(oracle::pair(m.functional.moments(), m.polys[n] * m.polys[n]), h);
  }
  EXPECT_THROW(mops_from_recurrence(rc, 9), Error);
}

TEST(FavardOracle, LegendrePrefix) {
  const FamilyData data = classical_family(FamilySpec::legendre(), 6);
  const auto polys = generate(data.recurrence, 3);
  const FavardResult res = favard_oracle(polys);
  EXPECT_TRUE(res.orthogonal);
  EXPECT_EQ(res.recurrence.gammas(), R({frac(1, 3), frac(4, 15)}));
  EXPECT_EQ(res.recurrence, recurrence_from_moments(data.functional, 3));
}

TEST(FavardOracle, GammaCollapse) {
  // P_3 := x P_2 makes gamma_2 vanish.
  const std::vector<Poly> seq{P({1}), P({0, 1}), P({frac(-1, 3), 0, 1}), P({0, frac(-1, 3), 0, 1})};
  const FavardResult res = favard_oracle(seq);
  EXPECT_FALSE(res.orthogonal);
  EXPECT_EQ(res.violation, 2);
}

TEST(FavardOracle, ExtraTermIsNotThreeTerm) {
  const std::vector<Poly> seq{P({1}), P({0, 1}), P({-1, 0, 1}), P({1, -2, 0, 1})};
  const FavardResult res = favard_oracle(seq);
  EXPECT_FALSE(res.orthogonal);
  EXPECT_EQ(res.violation, 2);
}

TEST(FavardOracle, TooShortToViolate) {
  const std::vector<Poly> seq{P({1}), P({0, 1})};
  const FavardResult res = favard_oracle(seq);
  EXPECT_TRUE(res.orthogonal);
  EXPECT_TRUE(res.recurrence.gammas().empty());
}

TEST(FavardOracle, RejectsNonMonic) {
  const std::vector<Poly> seq{P({1}), P({0, 2})};
  try {
    favard_oracle(seq);
    FAIL() << "expected NotABasis";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_basis);
  }
}

TEST(FavardOracle, AgreesWithDivisionOracleOnRandomSequences) {
  auto gen = oracle::rng(23);
  for (int t = 0; t < 60; ++t) {
    auto seq = generate(random_recurrence(gen, 7), 7);
    if (t % 2 == 0) {
      // Perturb one coefficient below the leading term.
      const int n = 1 + static_cast<int>(gen() % 7);
      std::vector<Rational> c = seq[n].coeffs();
      c[gen() % n] += oracle::random_nonzero_rational(gen, 3, 2);
      seq[n] = Poly(c);
    }
    EXPECT_EQ(favard_oracle(seq).orthogonal, oracle::satisfies_ttrr(seq)) << t;
  }
}

TEST(FavardExpand, ExpansionReconstructsXTimesP) {
  const auto seq = generate(classical_family(FamilySpec::hermite(), 12).recurrence, 5);
  const auto ex = favard_expand(seq);
  ASSERT_EQ(ex.size(), 5u);
  for (std::size_t n = 0; n < ex.size(); ++n) {
    Poly sum;
    for (std::size_t k = 0; k < ex[n].size(); ++k) sum += seq[k] * ex[n][k];
    EXPECT_EQ(sum, seq[n] * Poly::x());
  }
}
