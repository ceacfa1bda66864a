#include "oracles.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace oracle {

std::uint64_t seed() {
  if (const char* env = std::getenv("OPSTRUCT_SEED"); env != nullptr && *env != '\0') {
    return std::stoull(env);
  }
  return 20240531;
}

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

Rational random_rational(std::mt19937_64& gen, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(gen), den(gen));
  q.canonicalize();
  return q;
}

Rational random_nonzero_rational(std::mt19937_64& gen, int max_num, int max_den) {
  for (;;) {
    Rational q = random_rational(gen, max_num, max_den);
    if (sgn(q) != 0) return q;
  }
}

namespace {

// Even moments from I_0 = 1 and I_{2k} = f(k) I_{2k-2}; odd moments vanish.
template <class F>
std::vector<Rational> symmetric_moments(int K, F ratio) {
  std::vector<Rational> mu(K + 1);
  Rational even = 1;
  for (int k = 0; k <= K; ++k) {
    if (k % 2 == 1) continue;
    if (k > 0) even *= ratio(k / 2);
    mu[k] = even;
  }
  return mu;
}

}  // namespace

std::vector<Rational> legendre_moments(int K) {
  std::vector<Rational> mu(K + 1);
  for (int k = 0; k <= K; k += 2) mu[k] = opstruct::frac(1, k + 1);
  return mu;
}

std::vector<Rational> chebyshev_t_moments(int K) {
  return symmetric_moments(K, [](int k) { return opstruct::frac(2 * k - 1, 2 * k); });
}

std::vector<Rational> chebyshev_u_moments(int K) {
  return symmetric_moments(K, [](int k) { return opstruct::frac(2 * k - 1, 2 * k + 2); });
}

std::vector<Rational> hermite_moments(int K) {
  return symmetric_moments(K, [](int k) { return opstruct::frac(2 * k - 1, 2); });
}

std::vector<Rational> laguerre_moments(const Rational& alpha, int K) {
  std::vector<Rational> mu(K + 1);
  mu[0] = 1;
  for (int k = 1; k <= K; ++k) mu[k] = (alpha + k) * mu[k - 1];
  return mu;
}

std::vector<Rational> modified_moments(const Poly& phi, const std::vector<Rational>& mu) {
  const int K = static_cast<int>(mu.size()) - 1 - phi.degree();
  std::vector<Rational> out(std::max(K + 1, 0));
  for (int k = 0; k <= K; ++k) {
    for (int j = 0; j <= phi.degree(); ++j) out[k] += phi.coeff(j) * mu[k + j];
  }
  return out;
}

std::vector<Rational> normalize(std::vector<Rational> mu) {
  const Rational m0 = mu.at(0);
  if (sgn(m0) == 0) throw std::invalid_argument("normalize: zero total mass");
  for (auto& m : mu) m /= m0;
  return mu;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                  const std::vector<Rational>& free_values) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || sgn(a[q][c]) == 0) continue;
      const Rational f = a[q][c];
      for (std::size_t k = 0; k < cols; ++k) a[q][k] -= f * a[r][k];
      b[q] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    if (sgn(b[q]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::size_t next_free = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    x[c] = free_values.empty() ? Rational(0) : free_values[next_free++ % free_values.size()];
  }
  for (std::size_t q = 0; q < pivot_col.size(); ++q) {
    Rational v = b[q];
    for (std::size_t c = 0; c < cols; ++c) {
      if (!is_pivot[c]) v -= a[q][c] * x[c];
    }
    x[pivot_col[q]] = v;
  }
  return x;
}

Rational det_cofactor(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(a[0][c]) == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = a[0][c] * det_cofactor(minor);
    total += c % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

Rational pair(const std::vector<Rational>& mu, const Poly& p) {
  if (p.degree() >= static_cast<int>(mu.size())) throw std::out_of_range("pair: moments too short");
  Rational s = 0;
  for (int k = 0; k <= p.degree(); ++k) s += p.coeff(k) * mu[k];
  return s;
}

std::vector<Poly> mops_by_hankel(const std::vector<Rational>& mu, int n_max) {
  if (2 * n_max > static_cast<int>(mu.size()) - 1) throw std::out_of_range("mops_by_hankel: moments too short");
  std::vector<Poly> out{Poly::constant(1)};
  for (int n = 1; n <= n_max; ++n) {
    // sum_j c_j mu_{i+j} = -mu_{i+n}, i < n.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = mu[i + j];
      b[i] = -mu[i + n];
    }
    auto c = solve_linear(a, b);
    if (!c) throw std::domain_error("mops_by_hankel: singular Hankel matrix");
    c->push_back(1);
    out.emplace_back(*c);
  }
  // Nonzero norms h_0..h_{n_max} make every Hankel system above nonsingular,
  // so the solutions were unique.
  for (int n = 0; n <= n_max; ++n) {
    if (sgn(pair(mu, out[n] * out[n])) == 0) throw std::domain_error("mops_by_hankel: zero norm");
  }
  return out;
}

Poly divide_linear(const Poly& p, const Rational& c) {
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("divide_linear: degree < 1");
  std::vector<Rational> q(d);
  Rational carry = 0;
  for (int k = d; k >= 1; --k) {
    carry = p.coeff(k) + carry * c;
    q[k - 1] = carry;
  }
  if (sgn(p.coeff(0) + carry * c) != 0) throw std::domain_error("divide_linear: nonzero remainder");
  return Poly(q);
}

std::vector<Poly> kernel_polynomials(const std::vector<Poly>& P, const Rational& c) {
  std::vector<Poly> out;
  for (std::size_t n = 0; n + 1 < P.size(); ++n) {
    const Rational pn = P[n](c);
    if (sgn(pn) == 0) throw std::domain_error("kernel_polynomials: P_n(c) = 0");
    out.push_back(divide_linear(P[n + 1] - P[n] * (P[n + 1](c) / pn), c));
  }
  return out;
}

std::optional<Fit> fit_relation(const std::vector<Poly>& P, const std::vector<Poly>& Q, int N, int M, int n_max,
                                std::mt19937_64* gen) {
  Fit fit;
  fit.r.assign(N, std::vector<Rational>(n_max + 1));
  fit.s.assign(M, std::vector<Rational>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    // Unknowns: r_{i,n} (i <= min(N,n)), then s_{i,n}. Equations: the
    // coefficients of x^0..x^{n-1} of sum s Q_{n-i} - sum r P_{n-i} = P_n - Q_n.
    const int nr = std::min(N, n);
    const int ns = std::min(M, n);
    const Poly rhs = P[n] - Q[n];
    std::vector<std::vector<Rational>> a(std::max(n, 1), std::vector<Rational>(nr + ns));
    std::vector<Rational> b(std::max(n, 1));
    for (int k = 0; k < n; ++k) {
      for (int i = 1; i <= nr; ++i) a[k][i - 1] = -P[n - i].coeff(k);
      for (int i = 1; i <= ns; ++i) a[k][nr + i - 1] = Q[n - i].coeff(k);
      b[k] = rhs.coeff(k);
    }
    if (n == 0) {
      if (!rhs.is_zero()) return std::nullopt;
      continue;
    }
    std::vector<Rational> free_values;
    if (gen != nullptr) {
      for (int k = 0; k < nr + ns; ++k) free_values.push_back(random_nonzero_rational(*gen, 5, 4));
    }
    auto x = solve_linear(a, b, free_values);
    if (!x) return std::nullopt;
    for (int i = 1; i <= nr; ++i) fit.r[i - 1][n] = (*x)[i - 1];
    for (int i = 1; i <= ns; ++i) fit.s[i - 1][n] = (*x)[nr + i - 1];
  }
  return fit;
}

bool satisfies_ttrr(const std::vector<Poly>& Q) {
  for (std::size_t n = 0; n + 1 < Q.size(); ++n) {
    if (Q[n].degree() != static_cast<int>(n) || !Q[n].is_monic()) return false;
    Poly e = Q[n] * Poly::x() - Q[n + 1];
    if (e.degree() > static_cast<int>(n)) return false;
    e -= Q[n] * e.coeff(static_cast<int>(n));
    if (n == 0) {
      if (!e.is_zero()) return false;
      continue;
    }
    if (e.is_zero()) return false;  // gamma_n = 0
    if (e.degree() != static_cast<int>(n) - 1) return false;
    if (!(e == Q[n - 1] * e.leading())) return false;
  }
  return true;
}

}  // namespace oracle
