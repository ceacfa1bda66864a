#include "opstruct/relation.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "opstruct/error.hpp"

namespace opstruct {

namespace {

const Rational& zero_value() {
  static const Rational z(0);
  return z;
}

const Rational& one_value() {
  static const Rational o(1);
  return o;
}

void validate_table(const std::vector<std::vector<Rational>>& table, int rows, const char* name) {
  if (static_cast<int>(table.size()) != rows) {
    throw Error(ErrorKind::invalid_parameter, std::string(name) + " table needs " + std::to_string(rows) + " rows");
  }
  for (int i = 1; i <= rows; ++i) {
    const auto& row = table[i - 1];
    for (int n = 0; n < std::min<int>(i, static_cast<int>(row.size())); ++n) {
      if (!opstruct::is_zero(row[n])) {
        throw Error(ErrorKind::invalid_parameter, std::string(name) + "_{" + std::to_string(i) + "," +
                                                      std::to_string(n) + "} must vanish (index exceeds degree)");
      }
    }
  }
}

int table_depth(const std::vector<std::vector<Rational>>& table) {
  int d = std::numeric_limits<int>::max();
  for (const auto& row : table) d = std::min(d, static_cast<int>(row.size()) - 1);
  return d;
}

const Rational& lookup(const std::vector<std::vector<Rational>>& table, int top, int depth, int i, int n,
                       const char* name) {
  if (i == 0) return n >= 0 ? one_value() : zero_value();
  if (i < 0 || i > top || n < 0 || i > n) return zero_value();
  if (n > depth) {
    throw Error(ErrorKind::insufficient_coefficients,
                std::string(name) + "_{" + std::to_string(i) + "," + std::to_string(n) + "} is past the table depth " +
                    std::to_string(depth));
  }
  return table[i - 1][n];
}

std::vector<Poly> combine(const std::vector<Poly>& base, const StructureRelation& rel, bool use_r) {
  const int last = static_cast<int>(base.size()) - 1;
  if (last > rel.depth()) {
    throw Error(ErrorKind::insufficient_coefficients, "relation tables reach n = " + std::to_string(rel.depth()) +
                                                          ", sequence needs " + std::to_string(last));
  }
  const int top = use_r ? rel.N() : rel.M();
  std::vector<Poly> out;
  out.reserve(base.size());
  for (int n = 0; n <= last; ++n) {
    Poly p = base[n];
    for (int i = 1; i <= std::min(top, n); ++i) {
      const Rational& c = use_r ? rel.r(i, n) : rel.s(i, n);
      if (!opstruct::is_zero(c)) p += base[n - i] * c;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poly> back_substitute(const std::vector<Poly>& R, const StructureRelation& rel, bool use_r) {
  const int last = static_cast<int>(R.size()) - 1;
  if (last > rel.depth()) {
    throw Error(ErrorKind::insufficient_coefficients, "relation tables reach n = " + std::to_string(rel.depth()) +
                                                          ", sequence needs " + std::to_string(last));
  }
  const int top = use_r ? rel.N() : rel.M();
  std::vector<Poly> out;
  out.reserve(R.size());
  for (int n = 0; n <= last; ++n) {
    Poly p = R[n];
    for (int i = 1; i <= std::min(top, n); ++i) {
      const Rational& c = use_r ? rel.r(i, n) : rel.s(i, n);
      if (!opstruct::is_zero(c)) p -= out[n - i] * c;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

StructureRelation::StructureRelation(int N, int M, std::vector<std::vector<Rational>> r,
                                     std::vector<std::vector<Rational>> s)
    : N_(N), M_(M), r_(std::move(r)), s_(std::move(s)) {
  if (N < 0 || M < 0) throw Error(ErrorKind::invalid_parameter, "N and M must be nonnegative");
  validate_table(r_, N_, "r");
  validate_table(s_, M_, "s");
}

int StructureRelation::depth() const { return std::min(table_depth(r_), table_depth(s_)); }

const Rational& StructureRelation::r(int i, int n) const { return lookup(r_, N_, depth(), i, n, "r"); }
const Rational& StructureRelation::s(int i, int n) const { return lookup(s_, M_, depth(), i, n, "s"); }

StructureRelation StructureRelation::with_r(int i, int n, const Rational& value) const {
  if (i < 1 || i > N_ || n < 0 || n >= static_cast<int>(r_[i - 1].size())) {
    throw Error(ErrorKind::index_out_of_range, "r_{" + std::to_string(i) + "," + std::to_string(n) + "}");
  }
  auto r = r_;
  r[i - 1][n] = value;
  return StructureRelation(N_, M_, std::move(r), s_);
}

StructureRelation StructureRelation::with_s(int i, int n, const Rational& value) const {
  if (i < 1 || i > M_ || n < 0 || n >= static_cast<int>(s_[i - 1].size())) {
    throw Error(ErrorKind::index_out_of_range, "s_{" + std::to_string(i) + "," + std::to_string(n) + "}");
  }
  auto s = s_;
  s[i - 1][n] = value;
  return StructureRelation(N_, M_, r_, std::move(s));
}

StructureRelation StructureRelation::mirrored() const { return StructureRelation(M_, N_, s_, r_); }

std::vector<Poly> build_R(const std::vector<Poly>& P, const StructureRelation& rel) { return combine(P, rel, true); }

std::vector<Poly> solve_Q(const std::vector<Poly>& R, const StructureRelation& rel) {
  return back_substitute(R, rel, false);
}

std::vector<Poly> solve_P(const std::vector<Poly>& R, const StructureRelation& rel) {
  return back_substitute(R, rel, true);
}

void RelationInstance::analyze_side(SequenceSide& side) {
  const FavardResult full = favard_oracle(side.polys);
  if (full.orthogonal) {
    side.recurrence = full.recurrence;
    side.orthogonal_through = static_cast<int>(side.polys.size()) - 1;
  } else {
    // seq[0..violation] still satisfies the recurrence.
    const std::span<const Poly> prefix(side.polys.data(), full.violation + 1);
    side.recurrence = favard_oracle(prefix).recurrence;
    side.orthogonal_through = full.violation;
  }
  if (side.functional) return;
  const RecurrenceCoeffs& rc = side.recurrence;
  side.functional = rc.size() == 0 ? MomentFunctional({Rational(1)})
                                   : moments_from_recurrence(rc, max_moment_depth(rc));
  side.functional_origin = "derived(prefix " + std::to_string(side.orthogonal_through) + ")";
}

void RelationInstance::finish() {
  analyze_side(P_);
  analyze_side(Q_);
  norm_u_cache_.assign(R_.size(), std::nullopt);
  norm_v_cache_.assign(R_.size(), std::nullopt);
}

RelationInstance RelationInstance::from_P(const Mops& P, StructureRelation rel, std::optional<MomentFunctional> v) {
  RelationInstance inst;
  inst.anchor_ = Anchor::P;
  const int L = std::min(P.n_max(), rel.depth());
  inst.rel_ = std::move(rel);
  inst.P_.polys.assign(P.polys.begin(), P.polys.begin() + L + 1);
  inst.P_.functional = P.functional;
  inst.P_.functional_origin = "anchor";
  inst.R_ = build_R(inst.P_.polys, inst.rel_);
  inst.Q_.polys = solve_Q(inst.R_, inst.rel_);
  if (v) {
    inst.Q_.functional = std::move(v);
    inst.Q_.functional_origin = "given";
  }
  inst.finish();
  return inst;
}

RelationInstance RelationInstance::from_Q(const Mops& Q, StructureRelation rel, std::optional<MomentFunctional> u) {
  RelationInstance inst;
  inst.anchor_ = Anchor::Q;
  const int L = std::min(Q.n_max(), rel.depth());
  inst.rel_ = std::move(rel);
  inst.Q_.polys.assign(Q.polys.begin(), Q.polys.begin() + L + 1);
  inst.Q_.functional = Q.functional;
  inst.Q_.functional_origin = "anchor";
  // R_n = Q_n + sum s_{i,n} Q_{n-i}, then P_n = R_n - sum r_{i,n} P_{n-i}.
  inst.R_ = build_R(inst.Q_.polys, inst.rel_.mirrored());
  inst.P_.polys = solve_P(inst.R_, inst.rel_);
  if (u) {
    inst.P_.functional = std::move(u);
    inst.P_.functional_origin = "given";
  }
  inst.finish();
  return inst;
}

const MomentFunctional& RelationInstance::u() const {
  if (!P_.functional) throw Error(ErrorKind::missing_functional, "no functional for the P side");
  return *P_.functional;
}

const MomentFunctional& RelationInstance::v() const {
  if (!Q_.functional) throw Error(ErrorKind::missing_functional, "no functional for the Q side");
  return *Q_.functional;
}

const Rational& RelationInstance::norm_u(int n) const {
  if (n < 0 || n > depth()) throw Error(ErrorKind::index_out_of_range, "P_" + std::to_string(n));
  auto& slot = norm_u_cache_[n];
  if (!slot) slot = apply(u(), poly_mul(P_.polys[n], P_.polys[n]));
  return *slot;
}

const Rational& RelationInstance::norm_v(int n) const {
  if (n < 0 || n > depth()) throw Error(ErrorKind::index_out_of_range, "Q_" + std::to_string(n));
  auto& slot = norm_v_cache_[n];
  if (!slot) slot = apply(v(), poly_mul(Q_.polys[n], Q_.polys[n]));
  return *slot;
}

Poly RelationInstance::P_bar(int n) const {
  const Rational& h = norm_u(n);
  if (opstruct::is_zero(h)) throw Error(ErrorKind::zero_norm, "<u, P_" + std::to_string(n) + "^2> = 0");
  return P_.polys[n] * Rational(1 / h);
}

Poly RelationInstance::Q_bar(int n) const {
  const Rational& h = norm_v(n);
  if (opstruct::is_zero(h)) throw Error(ErrorKind::zero_norm, "<v, Q_" + std::to_string(n) + "^2> = 0");
  return Q_.polys[n] * Rational(1 / h);
}

Rational RelationInstance::pair_u(int a, const Poly& p) const {
  const Rational& h = norm_u(a);
  if (opstruct::is_zero(h)) throw Error(ErrorKind::zero_norm, "<u, P_" + std::to_string(a) + "^2> = 0");
  return apply(u(), poly_mul(P_.polys[a], p)) / h;
}

Rational RelationInstance::pair_v(int a, const Poly& p) const {
  const Rational& h = norm_v(a);
  if (opstruct::is_zero(h)) throw Error(ErrorKind::zero_norm, "<v, Q_" + std::to_string(a) + "^2> = 0");
  return apply(v(), poly_mul(Q_.polys[a], p)) / h;
}

namespace {

Rational pairing_row(const RelationInstance& inst, int row, int k) {
  const int M = inst.M();
  return row < M ? inst.pair_u(row, inst.R()[k]) : inst.pair_v(row - M, inst.R()[k]);
}

}  // namespace

Matrix matrix_A(const RelationInstance& inst) {
  const int size = inst.N() + inst.M();
  if (size - 1 > inst.depth()) throw Error(ErrorKind::index_out_of_range, "matrix A needs R_0..R_{N+M-1}");
  Matrix a(size, size);
  for (int row = 0; row < size; ++row) {
    for (int k = 0; k < size; ++k) a(row, k) = pairing_row(inst, row, k);
  }
  return a;
}

Matrix matrix_A_from_coefficients(const StructureRelation& rel) {
  // <P_bar_j u, R_k> is the coefficient of P_j in R_k, i.e. r_{k-j,k}.
  const int M = rel.M();
  const int size = rel.N() + M;
  Matrix a(size, size);
  for (int row = 0; row < size; ++row) {
    for (int k = 0; k < size; ++k) {
      a(row, k) = row < M ? rel.r(k - row, k) : rel.s(k - (row - M), k);
    }
  }
  return a;
}

CheckReport matrix_A_tail(const RelationInstance& inst, int k_to) {
  CheckReport rep;
  rep.check = "matrix_A_tail";
  const int N = inst.N();
  const int M = inst.M();
  int cap = std::min(k_to, inst.depth());
  if (M > 0) cap = std::min(cap, inst.u().depth() - (M - 1));
  if (N > 0) cap = std::min(cap, inst.v().depth() - (N - 1));
  if (cap < k_to) rep.note("pairings checked through k = " + std::to_string(cap) + " (functional depth)");
  rep.horizon = cap;
  for (int k = N + M; k <= cap; ++k) {
    for (int row = 0; row < N + M; ++row) {
      Rational value = pairing_row(inst, row, k);
      if (!opstruct::is_zero(value)) {
        rep.fail({row < M ? "<P_bar_" + std::to_string(row) + " u, R_k>" : "<Q_bar_" + std::to_string(row - M) + " v, R_k>",
                  row, k, std::move(value)});
      }
    }
  }
  return rep;
}

namespace {

void check_b_index(int n, int size, int depth, const char* name) {
  if (n < size - 1 || n > depth) {
    throw Error(ErrorKind::index_out_of_range, std::string(name) + "_" + std::to_string(n) + " needs " +
                                                   std::to_string(size - 1) + " <= n <= " + std::to_string(depth));
  }
}

}  // namespace

Matrix matrix_B(const RelationInstance& inst, int n) {
  const int N = inst.N();
  check_b_index(n, N, inst.depth(), "B");
  Matrix b(N, N);
  for (int j = 0; j < N; ++j) {
    for (int l = 0; l < N; ++l) b(j, l) = inst.pair_v(N - 1 - l, inst.P()[n - j]);
  }
  return b;
}

Matrix matrix_B_i(const RelationInstance& inst, int n, int i) {
  const int N = inst.N();
  if (i < 0 || i >= N) throw Error(ErrorKind::index_out_of_range, "column " + std::to_string(i));
  Matrix b = matrix_B(inst, n);
  std::vector<Rational> col(N);
  for (int j = 0; j < N; ++j) col[j] = inst.pair_v(N, inst.P()[n - j]);
  return b.with_column(i, col);
}

Matrix matrix_Btilde(const RelationInstance& inst, int n) {
  const int M = inst.M();
  check_b_index(n, M, inst.depth(), "Btilde");
  Matrix b(M, M);
  for (int j = 0; j < M; ++j) {
    for (int l = 0; l < M; ++l) b(j, l) = inst.pair_u(M - 1 - l, inst.Q()[n - j]);
  }
  return b;
}

Matrix matrix_Btilde_i(const RelationInstance& inst, int n, int i) {
  const int M = inst.M();
  if (i < 0 || i >= M) throw Error(ErrorKind::index_out_of_range, "column " + std::to_string(i));
  Matrix b = matrix_Btilde(inst, n);
  std::vector<Rational> col(M);
  for (int j = 0; j < M; ++j) col[j] = inst.pair_u(M, inst.Q()[n - j]);
  return b.with_column(i, col);
}

CheckReport check_lemma_dets(const RelationInstance& inst, int n_from, int n_to) {
  CheckReport rep;
  rep.check = "lemma_dets";
  const int N = inst.N();
  const int M = inst.M();
  const int start = std::max(n_from, std::max(N + M, 1));
  if (N == 0 && M == 0) {
    rep.status = Status::not_applicable;
    rep.note("N = M = 0: both determinant chains are empty");
    return rep;
  }
  auto chain = [&](int size, const char* name, auto&& build, auto&& coeff, bool hyp_ok, const char* hyp) {
    if (size == 0) {
      rep.note(std::string("part ") + name + " vacuous (empty matrix)");
      return;
    }
    if (!hyp_ok) rep.note(std::string("part ") + name + " hypothesis not met: " + hyp);
    const Rational sign = (size % 2 == 0) ? 1 : -1;
    Rational prev = det(build(start - 1));
    for (int n = start; n <= n_to; ++n) {
      Rational cur = det(build(n));
      Rational residual = cur - sign * coeff(n) * prev;
      rep.record({std::string("det_") + name, -1, n, cur});
      if (!opstruct::is_zero(residual)) rep.fail({std::string("residual_") + name, -1, n, residual});
      prev = std::move(cur);
    }
  };
  chain(
      N, "a", [&](int n) { return matrix_B(inst, n); }, [&](int n) { return inst.relation().r(N, n); },
      inst.q_orthogonal(), "Q is not a MOPS with respect to v on the computed range");
  chain(
      M, "b", [&](int n) { return matrix_Btilde(inst, n); }, [&](int n) { return inst.relation().s(M, n); },
      inst.p_orthogonal(), "P is not a MOPS with respect to u on the computed range");
  return rep;
}

}  // namespace opstruct
