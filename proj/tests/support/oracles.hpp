#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination, Gram-Schmidt or family code, so agreement with the
// library is evidence rather than tautology.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "opstruct/poly.hpp"
#include "opstruct/rational.hpp"

namespace oracle {

using opstruct::Poly;
using opstruct::Rational;

// Seed from OPSTRUCT_SEED (decimal), else a fixed default.
std::uint64_t seed();
std::mt19937_64 rng(std::uint64_t salt = 0);
// Uniform rational p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(std::mt19937_64& gen, int max_num, int max_den);
Rational random_nonzero_rational(std::mt19937_64& gen, int max_num, int max_den);

// Moments by direct integration recursions (integration by parts):
// (1/2) int_{-1}^{1} x^k dx.
std::vector<Rational> legendre_moments(int K);
// (1/pi) int x^k (1-x^2)^{-1/2} dx, Wallis recursion I_{2k} = (2k-1)/(2k) I_{2k-2}.
std::vector<Rational> chebyshev_t_moments(int K);
// (2/pi) int x^k (1-x^2)^{1/2} dx, I_{2k} = (2k-1)/(2k+2) I_{2k-2}.
std::vector<Rational> chebyshev_u_moments(int K);
// pi^{-1/2} int x^k e^{-x^2} dx, I_{2k} = (2k-1)/2 I_{2k-2}.
std::vector<Rational> hermite_moments(int K);
// int_0^inf x^{k+alpha} e^{-x} dx / Gamma(alpha+1) = (alpha+k) I_{k-1}.
std::vector<Rational> laguerre_moments(const Rational& alpha, int K);

// Moments of phi*u, k = 0..K - deg phi, by direct summation.
std::vector<Rational> modified_moments(const Poly& phi, const std::vector<Rational>& mu);
// Divide a moment sequence by its first entry.
std::vector<Rational> normalize(std::vector<Rational> mu);

// Plain Gaussian elimination on an augmented system; nullopt when
// inconsistent. Free variables take the values in `free_values` (cycled),
// or zero when it is empty.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                  const std::vector<Rational>& free_values = {});
Rational det_cofactor(const std::vector<std::vector<Rational>>& a);

// Monic orthogonal polynomials of a moment sequence by solving the Hankel
// normal equations degree by degree.
std::vector<Poly> mops_by_hankel(const std::vector<Rational>& mu, int n_max);
Rational pair(const std::vector<Rational>& mu, const Poly& p);

// Kernel polynomials for the Christoffel transform by (x - c):
// Q_n = (P_{n+1} - P_{n+1}(c)/P_n(c) P_n) / (x - c).
std::vector<Poly> kernel_polynomials(const std::vector<Poly>& P, const Rational& c);
// Exact division by (x - c); the remainder must vanish.
Poly divide_linear(const Poly& p, const Rational& c);

// Coefficients (r_{1..N,n}, s_{1..M,n}) with
// P_n + sum r P_{n-i} = Q_n + sum s Q_{n-i}, for each n <= n_max. When the
// system at n is underdetermined the free unknowns are drawn from `gen`;
// nullopt when some n has no solution.
struct Fit {
  std::vector<std::vector<Rational>> r;  // r[i-1][n]
  std::vector<std::vector<Rational>> s;
};
std::optional<Fit> fit_relation(const std::vector<Poly>& P, const std::vector<Poly>& Q, int N, int M, int n_max,
                                std::mt19937_64* gen = nullptr);

// Three-term recurrence test by explicit division: x Q_n - Q_{n+1} must be
// a combination of Q_n and Q_{n-1} with a nonzero Q_{n-1} coefficient.
bool satisfies_ttrr(const std::vector<Poly>& Q);

}  // namespace oracle
