#include "opstruct/mops.hpp"

#include <algorithm>
#include <utility>

#include "opstruct/error.hpp"

namespace opstruct {

RecurrenceCoeffs::RecurrenceCoeffs(std::vector<Rational> betas, std::vector<Rational> gammas)
    : betas_(std::move(betas)), gammas_(std::move(gammas)) {
  if (!betas_.empty() && gammas_.size() + 1 < betas_.size()) {
    throw Error(ErrorKind::insufficient_coefficients,
                "need gamma_1..gamma_" + std::to_string(betas_.size() - 1) + " for " +
                    std::to_string(betas_.size()) + " betas");
  }
  gammas_.resize(betas_.empty() ? 0 : betas_.size() - 1);
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    if (is_zero(gammas_[i])) {
      throw Error(ErrorKind::not_regular, "gamma_" + std::to_string(i + 1) + " = 0 violates the Favard condition");
    }
  }
}

const Rational& RecurrenceCoeffs::beta(int n) const {
  if (n < 0 || n >= size()) throw Error(ErrorKind::insufficient_coefficients, "beta_" + std::to_string(n));
  return betas_[static_cast<std::size_t>(n)];
}

const Rational& RecurrenceCoeffs::gamma(int n) const {
  if (n < 1 || n > static_cast<int>(gammas_.size())) {
    throw Error(ErrorKind::insufficient_coefficients, "gamma_" + std::to_string(n));
  }
  return gammas_[static_cast<std::size_t>(n - 1)];
}

RecurrenceCoeffs RecurrenceCoeffs::truncated(int n) const {
  if (n > size()) throw Error(ErrorKind::insufficient_coefficients, "cannot truncate to " + std::to_string(n));
  std::vector<Rational> b(betas_.begin(), betas_.begin() + n);
  std::vector<Rational> g(gammas_.begin(), gammas_.begin() + (n > 0 ? n - 1 : 0));
  return RecurrenceCoeffs(std::move(b), std::move(g));
}

std::vector<Poly> generate(const RecurrenceCoeffs& rc, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::invalid_parameter, "negative n_max");
  if (rc.size() < n_max) {
    throw Error(ErrorKind::insufficient_coefficients,
                "recurrence has " + std::to_string(rc.size()) + " steps, need " + std::to_string(n_max));
  }
  std::vector<Poly> p;
  p.reserve(static_cast<std::size_t>(n_max) + 1);
  p.push_back(Poly::constant(1));
  for (int n = 0; n < n_max; ++n) {
    Poly next = (Poly::x() - Poly::constant(rc.beta(n))) * p[n];
    if (n >= 1) next -= p[n - 1] * rc.gamma(n);
    p.push_back(std::move(next));
  }
  return p;
}

namespace {

// Orthogonal polynomials P_0..P_count-1 of u with their norms; the last
// norm is left unchecked so callers decide how far regularity must hold.
void gram_schmidt(const MomentFunctional& u, int count, std::vector<Poly>& polys, std::vector<Rational>& norms) {
  polys.clear();
  norms.clear();
  for (int n = 0; n < count; ++n) {
    Poly p = n == 0 ? Poly::constant(1) : Poly::x() * polys[n - 1];
    const Poly krylov = p;
    for (int k = 0; k < n; ++k) {
      const Rational proj = apply(u, krylov * polys[k]) / norms[k];
      p -= polys[k] * proj;
    }
    Rational h = apply(u, p * p);
    if (is_zero(h) && n + 1 < count) {
      throw Error(ErrorKind::not_regular, "<u, P_" + std::to_string(n) + "^2> = 0 (Hankel determinant " +
                                              std::to_string(n) + " vanishes)");
    }
    polys.push_back(std::move(p));
    norms.push_back(std::move(h));
  }
}

}  // namespace

RecurrenceCoeffs recurrence_from_moments(const MomentFunctional& u, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::invalid_parameter, "negative n_max");
  if (2 * n_max - 1 > u.depth()) {
    throw Error(ErrorKind::truncation_exceeded, "recurrence through " + std::to_string(n_max) +
                                                    " steps needs depth " + std::to_string(2 * n_max - 1));
  }
  if (n_max == 0) return {};
  std::vector<Poly> polys;
  std::vector<Rational> norms;
  gram_schmidt(u, n_max, polys, norms);
  if (is_zero(norms.back())) {
    throw Error(ErrorKind::not_regular, "<u, P_" + std::to_string(n_max - 1) + "^2> = 0");
  }
  std::vector<Rational> betas;
  std::vector<Rational> gammas;
  for (int n = 0; n < n_max; ++n) {
    betas.push_back(apply(u, Poly::x() * polys[n] * polys[n]) / norms[n]);
    if (n >= 1) gammas.push_back(norms[n] / norms[n - 1]);
  }
  return RecurrenceCoeffs(std::move(betas), std::move(gammas));
}

int max_moment_depth(const RecurrenceCoeffs& rc) { return rc.size() == 0 ? 0 : 2 * rc.size() - 1; }

MomentFunctional moments_from_recurrence(const RecurrenceCoeffs& rc, int depth) {
  if (depth < 0) throw Error(ErrorKind::invalid_parameter, "negative depth");
  if (depth > max_moment_depth(rc)) {
    throw Error(ErrorKind::insufficient_coefficients, "moments through " + std::to_string(depth) + " need " +
                                                          std::to_string((depth + 1) / 2) + " recurrence steps");
  }
  // x^t expanded in the orthogonal basis: coefficient vector v_t. Only
  // components that can still return to index 0 are tracked.
  std::vector<Rational> moments{Rational(1)};
  std::vector<Rational> v{Rational(1)};
  for (int t = 0; t < depth; ++t) {
    const int keep = std::min(t + 1, depth - t - 1);
    std::vector<Rational> next(static_cast<std::size_t>(keep) + 1);
    for (int j = 0; j <= keep; ++j) {
      Rational acc;
      if (j >= 1 && j - 1 < static_cast<int>(v.size())) acc += v[j - 1];
      if (j < static_cast<int>(v.size()) && !is_zero(v[j])) acc += rc.beta(j) * v[j];
      if (j + 1 < static_cast<int>(v.size()) && !is_zero(v[j + 1])) acc += rc.gamma(j + 1) * v[j + 1];
      next[j] = std::move(acc);
    }
    v = std::move(next);
    moments.push_back(v[0]);
  }
  return MomentFunctional(std::move(moments));
}

Mops mops_from_moments(const MomentFunctional& u, int n_max) {
  if (2 * n_max > u.depth()) {
    throw Error(ErrorKind::truncation_exceeded,
                "MOPS through degree " + std::to_string(n_max) + " needs depth " + std::to_string(2 * n_max));
  }
  Mops out;
  gram_schmidt(u, n_max + 1, out.polys, out.norms);
  if (is_zero(out.norms.back())) {
    throw Error(ErrorKind::not_regular, "<u, P_" + std::to_string(n_max) + "^2> = 0");
  }
  out.functional = u;
  std::vector<Rational> betas;
  std::vector<Rational> gammas;
  for (int n = 0; n < n_max; ++n) {
    betas.push_back(apply(u, Poly::x() * out.polys[n] * out.polys[n]) / out.norms[n]);
    if (n >= 1) gammas.push_back(out.norms[n] / out.norms[n - 1]);
  }
  out.recurrence = RecurrenceCoeffs(std::move(betas), std::move(gammas));
  return out;
}

Mops mops_from_recurrence(const RecurrenceCoeffs& rc, int n_max) {
  // h_{n_max} needs gamma_{n_max}, one step beyond what generate() uses.
  if (n_max + 1 > rc.size()) {
    throw Error(ErrorKind::insufficient_coefficients, "MOPS with norms through degree " + std::to_string(n_max) +
                                                          " needs " + std::to_string(n_max + 1) + " steps");
  }
  Mops out;
  out.recurrence = rc.truncated(n_max);
  out.polys = generate(rc, n_max);
  out.functional = moments_from_recurrence(rc, max_moment_depth(rc));
  Rational h = 1;
  out.norms.push_back(h);
  for (int n = 1; n <= n_max; ++n) {
    h *= rc.gamma(n);
    out.norms.push_back(h);
  }
  return out;
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::legendre: return "legendre";
    case FamilyKind::chebyshev_t: return "chebyshev_T";
    case FamilyKind::chebyshev_u: return "chebyshev_U";
    case FamilyKind::jacobi: return "jacobi(" + to_string(alpha) + "," + to_string(beta) + ")";
    case FamilyKind::laguerre: return "laguerre(" + to_string(alpha) + ")";
    case FamilyKind::hermite: return "hermite";
  }
  return "unknown";
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "legendre") return FamilyKind::legendre;
  if (name == "chebyshev_T" || name == "chebyshev_t") return FamilyKind::chebyshev_t;
  if (name == "chebyshev_U" || name == "chebyshev_u") return FamilyKind::chebyshev_u;
  if (name == "jacobi") return FamilyKind::jacobi;
  if (name == "laguerre") return FamilyKind::laguerre;
  if (name == "hermite") return FamilyKind::hermite;
  throw Error(ErrorKind::invalid_parameter, "unknown family '" + name + "'");
}

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::vector<Rational> even_moments(int K, auto&& even_term) {
  std::vector<Rational> m(static_cast<std::size_t>(K) + 1);
  for (int k = 0; 2 * k <= K; ++k) m[2 * k] = even_term(k);
  return m;
}

}  // namespace

MomentFunctional family_moments(const FamilySpec& family, int K) {
  if (K < 0) throw Error(ErrorKind::invalid_parameter, "negative moment depth");
  switch (family.kind) {
    case FamilyKind::legendre:
      return MomentFunctional(even_moments(K, [](int k) { return frac(1, 2 * k + 1); }));
    case FamilyKind::chebyshev_t:
      return MomentFunctional(even_moments(K, [](int k) {
        Rational r(binomial(2 * k, k), mpz_class(1) << (2 * k));
        r.canonicalize();
        return r;
      }));
    case FamilyKind::chebyshev_u:
      return MomentFunctional(even_moments(K, [](int k) {
        Rational r(binomial(2 * k, k), (mpz_class(1) << (2 * k)) * (k + 1));
        r.canonicalize();
        return r;
      }));
    case FamilyKind::hermite:
      return MomentFunctional(even_moments(K, [](int k) {
        Rational r = 1;
        for (int j = 1; j <= k; ++j) r *= frac(2 * j - 1, 2);
        return r;
      }));
    case FamilyKind::laguerre: {
      if (family.alpha <= -1) throw Error(ErrorKind::invalid_parameter, "laguerre needs alpha > -1");
      std::vector<Rational> m{Rational(1)};
      for (int k = 1; k <= K; ++k) m.push_back(m.back() * (family.alpha + k));
      return MomentFunctional(std::move(m));
    }
    case FamilyKind::jacobi: {
      if (family.alpha <= -1 || family.beta <= -1) {
        throw Error(ErrorKind::invalid_parameter, "jacobi needs alpha, beta > -1");
      }
      // t = (1+x)/2 is Beta(beta+1, alpha+1) distributed; x = 2t - 1.
      std::vector<Rational> t_moments{Rational(1)};
      for (int j = 1; j <= K; ++j) {
        t_moments.push_back(t_moments.back() * (family.beta + j) / (family.alpha + family.beta + 1 + j));
      }
      std::vector<Rational> m(static_cast<std::size_t>(K) + 1);
      for (int k = 0; k <= K; ++k) {
        Rational acc;
        for (int j = 0; j <= k; ++j) {
          Rational term(binomial(k, j) * (mpz_class(1) << j));
          term *= t_moments[j];
          if ((k - j) % 2 == 1) acc -= term;
          else acc += term;
        }
        m[k] = std::move(acc);
      }
      return MomentFunctional(std::move(m));
    }
  }
  throw Error(ErrorKind::invalid_parameter, "unknown family");
}

FamilyData classical_family(const FamilySpec& family, int K) {
  FamilyData out;
  out.functional = family_moments(family, K);
  out.recurrence = recurrence_from_moments(out.functional, K / 2);
  return out;
}

std::vector<std::vector<Rational>> favard_expand(std::span<const Poly> seq) {
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (seq[n].degree() != static_cast<int>(n) || !seq[n].is_monic()) {
      throw Error(ErrorKind::not_a_basis, "element " + std::to_string(n) + " is not monic of degree " +
                                              std::to_string(n));
    }
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    Poly rest = Poly::x() * seq[n];
    std::vector<Rational> c(n + 2);
    for (int k = static_cast<int>(n) + 1; k >= 0; --k) {
      c[k] = rest.coeff(k);
      if (!is_zero(c[k])) rest -= seq[k] * c[k];
    }
    out.push_back(std::move(c));
  }
  return out;
}

FavardResult favard_oracle(std::span<const Poly> seq) {
  const auto expansions = favard_expand(seq);
  FavardResult res;
  std::vector<Rational> betas;
  std::vector<Rational> gammas;
  for (std::size_t n = 0; n < expansions.size(); ++n) {
    const auto& c = expansions[n];
    betas.push_back(c[n]);
    if (n == 0) continue;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (!is_zero(c[k])) {
        res.violation = static_cast<int>(n);
        res.reason = "x*P_" + std::to_string(n) + " has coefficient " + to_string(c[k]) + " on P_" +
                     std::to_string(k);
        return res;
      }
    }
    if (is_zero(c[n - 1])) {
      res.violation = static_cast<int>(n);
      res.reason = "gamma_" + std::to_string(n) + " = 0";
      return res;
    }
    gammas.push_back(c[n - 1]);
  }
  res.orthogonal = true;
  res.recurrence = RecurrenceCoeffs(std::move(betas), std::move(gammas));
  return res;
}

}  // namespace opstruct
