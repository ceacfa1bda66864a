#pragma once

// Worked instances built from the oracles, and the seeded sweep corpus.

#include <random>
#include <string>
#include <vector>

#include "opstruct/relation.hpp"
#include "oracles.hpp"

namespace oracle {

using opstruct::MomentFunctional;
using opstruct::Mops;
using opstruct::RelationInstance;
using opstruct::StructureRelation;

// Degree reached by the worked instances and their moment depth.
inline constexpr int kDegree = 20;
inline constexpr int kMoments = 2 * kDegree + 8;

struct Worked {
  std::string name;
  std::vector<Poly> P;  // oracle sequences, P_0..P_kDegree
  std::vector<Poly> Q;
  std::vector<Rational> u;  // oracle moments
  std::vector<Rational> v;
  StructureRelation rel;
  RelationInstance inst;
};

StructureRelation relation_from_fit(const Fit& fit);
Mops mops_of(const std::vector<Rational>& moments, int degree);

// P = Chebyshev T, Q = Chebyshev U; N = 0, M = 2 (anchor P, v given).
Worked tu_instance();
// P = U, Q = T; N = 2, M = 0 (anchor P, v given).
Worked tu_mirrored_instance();
// P = Legendre, Q = kernel polynomials at c = 2; N = 0, M = 1.
Worked christoffel_instance();
// P = kernel polynomials, Q = Legendre; N = 1, M = 0 (anchor Q, u given).
Worked christoffel_mirrored_instance();
// P = Q = Legendre with r = s = 1; N = M = 1.
Worked degenerate_instance();

struct SweepCase {
  std::string label;
  StructureRelation rel;
  Mops P;
  bool perturbed = false;
};

// Valid constructions and single-entry perturbations of each, n_max = 10,
// N, M <= 3. Every case satisfies the hypotheses det A != 0 and
// r_{N,n} s_{M,n} != 0 for N+M <= n <= 10.
std::vector<SweepCase> sweep_corpus(std::mt19937_64& gen, int valid_count);

// Q from P by the relation, recomputed here by forward substitution.
std::vector<Poly> q_from_relation(const std::vector<Poly>& P, const StructureRelation& rel, int n_max);

}  // namespace oracle
