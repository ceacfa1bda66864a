#include "opstruct/functional.hpp"

#include <string>
#include <utility>

#include "opstruct/error.hpp"
#include "opstruct/matrix.hpp"

namespace opstruct {

MomentFunctional::MomentFunctional(std::vector<Rational> moments) : moments_(std::move(moments)) {
  if (moments_.empty()) throw Error(ErrorKind::invalid_parameter, "functional needs at least mu_0");
}

const Rational& MomentFunctional::moment(int k) const {
  if (k < 0 || k > depth()) {
    throw Error(ErrorKind::truncation_exceeded,
                "moment " + std::to_string(k) + " beyond depth " + std::to_string(depth()));
  }
  return moments_[static_cast<std::size_t>(k)];
}

bool RegularityCertificate::regular() const { return first_singular() < 0; }

int RegularityCertificate::first_singular() const {
  for (std::size_t m = 0; m < hankel_dets.size(); ++m)
    if (is_zero(hankel_dets[m])) return static_cast<int>(m);
  return -1;
}

Rational apply(const MomentFunctional& u, const Poly& p) {
  if (p.degree() > u.depth()) {
    throw Error(ErrorKind::truncation_exceeded, "degree " + std::to_string(p.degree()) +
                                                    " exceeds functional depth " + std::to_string(u.depth()));
  }
  Rational acc;
  for (int k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * u.moment(k);
  return acc;
}

MomentFunctional poly_mod(const Poly& phi, const MomentFunctional& u) {
  const int d = phi.degree() < 0 ? 0 : phi.degree();
  const int depth = u.depth() - d;
  if (depth < 0) {
    throw Error(ErrorKind::truncation_exceeded, "modifier degree " + std::to_string(d) +
                                                    " exceeds functional depth " + std::to_string(u.depth()));
  }
  std::vector<Rational> out(static_cast<std::size_t>(depth) + 1);
  for (int k = 0; k <= depth; ++k)
    for (int j = 0; j <= phi.degree(); ++j) out[k] += phi.coeff(j) * u.moment(j + k);
  return MomentFunctional(std::move(out));
}

Poly normalized(const Poly& p, const MomentFunctional& u) {
  const Rational norm = apply(u, p * p);
  if (is_zero(norm)) throw Error(ErrorKind::zero_norm, "<u, p^2> = 0 for p = " + p.to_string());
  return p * Rational(1 / norm);
}

RegularityCertificate hankel_regular(const MomentFunctional& u, int n) {
  if (2 * n > u.depth()) {
    throw Error(ErrorKind::truncation_exceeded, "Hankel order " + std::to_string(n) +
                                                    " needs depth " + std::to_string(2 * n));
  }
  RegularityCertificate cert;
  cert.n_checked = n;
  for (int m = 0; m <= n; ++m) {
    const auto size = static_cast<std::size_t>(m) + 1;
    Matrix h(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) h(i, j) = u.moment(static_cast<int>(i + j));
    cert.hankel_dets.push_back(det(h));
  }
  return cert;
}

}  // namespace opstruct
