#include "opstruct/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "opstruct/error.hpp"
#include "opstruct/matrix.hpp"

namespace opstruct {

const CheckReport* PipelineReport::find(const std::string& check) const {
  for (const auto& c : checks) {
    if (c.check == check) return &c;
  }
  return nullptr;
}

int PipelineReport::exit_code() const {
  for (const auto& c : checks) {
    if (c.status == Status::fail || c.status == Status::hypothesis_fail || c.status == Status::error) return 1;
  }
  return 0;
}

namespace {

CheckReport guarded(const std::string& name, const std::function<CheckReport()>& body) {
  try {
    CheckReport rep = body();
    rep.check = name;
    return rep;
  } catch (const Error& e) {
    CheckReport rep;
    rep.check = name;
    rep.status = e.kind() == ErrorKind::hypothesis_fail ? Status::hypothesis_fail : Status::error;
    rep.note(e.what());
    return rep;
  }
}

CheckReport skipped(const std::string& name, const std::string& why) {
  CheckReport rep;
  rep.check = name;
  rep.status = Status::skipped;
  rep.note("prerequisite not met: " + why);
  return rep;
}

class Runner {
 public:
  Runner(const RelationInstance& inst, const PipelineConfig& cfg, PipelineReport& out)
      : inst_(inst), cfg_(cfg), out_(out), selected_(cfg.checks.begin(), cfg.checks.end()) {}

  bool selected(const std::string& name) const { return selected_.count(name) > 0; }

  // Runs a check (always, since later checks may depend on it) and keeps it
  // in the report when selected.
  const CheckReport& run(const std::string& name, const std::function<CheckReport()>& body) {
    const auto start = std::chrono::steady_clock::now();
    results_[name] = body();
    const auto stop = std::chrono::steady_clock::now();
    if (selected(name)) {
      out_.checks.push_back(results_[name]);
      if (cfg_.timing) out_.timing_ms[name] = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return results_[name];
  }

  bool passed(const std::string& name) const {
    auto it = results_.find(name);
    return it != results_.end() && it->second.status == Status::pass;
  }

 private:
  const RelationInstance& inst_;
  const PipelineConfig& cfg_;
  PipelineReport& out_;
  std::set<std::string> selected_;
  std::map<std::string, CheckReport> results_;
};

CheckReport regularity(const RelationInstance& inst, int n_max) {
  CheckReport rep;
  rep.horizon = n_max;
  auto side = [&](const SequenceSide& s, const char* seq, const char* fn) {
    rep.record({std::string(seq) + "_orthogonal_through", -1, -1, s.orthogonal_through});
    if (s.orthogonal_through < n_max) {
      rep.fail({std::string(seq) + "_orthogonal_through", -1, s.orthogonal_through, s.orthogonal_through});
      rep.note(std::string(seq) + " satisfies a three-term recurrence only through degree " +
               std::to_string(s.orthogonal_through));
    }
    if (!s.functional) {
      rep.fail({std::string("missing_") + fn, -1, -1, 0});
      return;
    }
    const int depth = s.functional->depth();
    const int n_reg = std::min(n_max, depth / 2);
    if (n_reg < n_max) {
      rep.note(std::string(fn) + " is known through x^" + std::to_string(depth) + "; Hankel determinants checked through " +
               std::to_string(n_reg));
    }
    const RegularityCertificate cert = hankel_regular(*s.functional, n_reg);
    if (!cert.regular()) {
      rep.fail({std::string("hankel_") + fn, -1, cert.first_singular(), 0});
    }
  };
  side(inst.p_side(), "P", "u");
  side(inst.q_side(), "Q", "v");
  return rep;
}

}  // namespace

PipelineReport run_pipeline(const RelationInstance& inst, const PipelineConfig& cfg) {
  PipelineReport out;
  const int N = inst.N();
  const int M = inst.M();
  const int n_max = cfg.n_max;
  const int K = cfg.K(N, M);
  out.N = N;
  out.M = M;
  out.n_max = n_max;
  out.K = K;
  out.anchor = inst.anchor() == Anchor::P ? "P" : "Q";
  out.u_origin = inst.p_side().functional_origin;
  out.v_origin = inst.q_side().functional_origin;
  out.p_orthogonal_through = inst.p_side().orthogonal_through;
  out.q_orthogonal_through = inst.q_side().orthogonal_through;
  if (cfg.checks.empty()) return out;

  const auto& rel = inst.relation();
  const bool trivial = N == 0 && M == 0;
  Runner runner(inst, cfg, out);

  // Largest n for which pairings <Q_bar_N v, P_n> and <P_bar_M u, Q_n> fit
  // in the known moments.
  auto pairing_limit = [&]() {
    return std::min({n_max, inst.v().depth() - N, inst.u().depth() - M});
  };

  runner.run("regularity", [&] { return guarded("regularity", [&] { return regularity(inst, n_max); }); });
  const bool sides_ok = runner.passed("regularity");
  const std::string sides_why = "regularity (both sequences MOPS through n_max with regular functionals)";

  runner.run("initial", [&] {
    if (trivial) {
      CheckReport rep;
      rep.status = Status::not_applicable;
      rep.note("N = M = 0: the relation forces P = Q");
      return rep;
    }
    if (!sides_ok) return skipped("initial", sides_why);
    return guarded("initial", [&] {
      CheckReport rep;
      const InitialConditions ic = check_initial_conditions(inst);
      out.initial = ic;
      rep.record({"det_A", -1, -1, ic.det_A});
      rep.record({"r_N", N, N + M, ic.r_N});
      rep.record({"s_M", M, N + M, ic.s_M});
      if (is_zero(ic.det_A)) rep.fail({"det_A", -1, -1, ic.det_A});
      if (is_zero(ic.r_N)) rep.fail({"r_N", N, N + M, ic.r_N});
      if (is_zero(ic.s_M)) rep.fail({"s_M", M, N + M, ic.s_M});
      const Rational det_coeff = det(matrix_A_from_coefficients(rel));
      if (det_coeff != ic.det_A) rep.fail({"det_A_coefficient_route", -1, -1, det_coeff});
      rep.absorb(matrix_A_tail(inst, n_max));
      return rep;
    });
  });
  const bool initial_ok = trivial || runner.passed("initial");
  const std::string initial_why = "initial conditions (det A, r_{N,N+M}, s_{M,N+M} nonzero)";

  runner.run("lemma_dets", [&] {
    if (!sides_ok) return skipped("lemma_dets", sides_why);
    return guarded("lemma_dets", [&] {
      const int n_to = pairing_limit();
      CheckReport rep = check_lemma_dets(inst, N + M, n_to);
      rep.horizon = n_to;
      return rep;
    });
  });

  runner.run("inverse", [&] {
    if (!sides_ok) return skipped("inverse", sides_why);
    if (!initial_ok) return skipped("inverse", initial_why);
    return guarded("inverse", [&] {
      CheckReport rep;
      FunctionalRelation fr = build_functional_relation(inst);
      const int limit = max_identity_horizon(fr.phi, inst.u(), fr.psi, inst.v());
      const int K_used = std::min(K, limit);
      fr.verified_to = agreement_horizon(fr.phi, inst.u(), fr.psi, inst.v(), K_used);
      rep.horizon = K_used;
      if (K_used < K) rep.fail({"moment_horizon", -1, -1, K_used});
      if (fr.verified_to != K_used) rep.fail({"identity_violation", -1, fr.verified_to + 1, 0});
      rep.record({"verified_to", -1, -1, fr.verified_to});
      if (fr.phi.degree() != M) rep.fail({"deg_phi", -1, -1, fr.phi.degree()});
      if (fr.psi.degree() != N) rep.fail({"deg_psi", -1, -1, fr.psi.degree()});
      if ((N == 0) != (M == 0)) {
        const FunctionalRelation direct = solve_m_zero(inst);
        rep.note("cross-checked against the direct expansion (" + direct.route + ")");
        if (direct.phi != fr.phi || direct.psi != fr.psi) rep.fail({"route_mismatch", -1, -1, 0});
      }
      for (int k = 0; k <= fr.phi.degree(); ++k) rep.record({"phi", k, -1, fr.phi.coeff(k)});
      for (int k = 0; k <= fr.psi.degree(); ++k) rep.record({"psi", k, -1, fr.psi.coeff(k)});
      out.relation = std::move(fr);
      return rep;
    });
  });
  const bool inverse_ok = runner.passed("inverse");

  runner.run("constancy", [&] {
    if (!inverse_ok) return skipped("constancy", "inverse");
    return guarded("constancy", [&] {
      const int n_to = pairing_limit();
      CheckReport rep = check_constancy(inst, N + M, n_to);
      rep.horizon = n_to;
      return rep;
    });
  });

  runner.run("nonvanishing", [&] {
    if (!sides_ok) return skipped("nonvanishing", sides_why);
    if (!initial_ok) return skipped("nonvanishing", initial_why);
    return guarded("nonvanishing", [&] {
      CheckReport rep = check_nonvanishing(inst, n_max);
      rep.horizon = n_max;
      return rep;
    });
  });

  runner.run("uniqueness", [&] {
    if (!sides_ok) return skipped("uniqueness", sides_why);
    return guarded("uniqueness", [&] {
      CheckReport rep;
      const int K_used = std::min({K, inst.u().depth() - M, inst.v().depth() - N});
      if (K_used < K) rep.note("horizon reduced to " + std::to_string(K_used) + " by the known moments");
      const int dim = uniqueness_dimension(inst.u(), inst.v(), N, M, K_used);
      rep.horizon = K_used;
      rep.record({"dimension", -1, -1, dim});
      rep.note("certified only through x^" + std::to_string(K_used));
      // Initial conditions hold exactly when the relation is unique.
      if ((dim == 1) != initial_ok) rep.fail({"dimension", -1, -1, dim});
      if (!initial_ok) rep.note("initial conditions fail; a solution space of dimension >= 2 is expected");
      return rep;
    });
  });

  const bool p_mops = inst.p_side().orthogonal_through >= n_max;
  const std::string p_why = "P is a MOPS through n_max";
  auto p_rc = [&] { return inst.p_side().recurrence.truncated(n_max); };

  runner.run("prop31", [&] {
    if (!p_mops) return skipped("prop31", p_why);
    return guarded("prop31", [&] {
      CheckReport rep = check_R_orthogonal(p_rc(), rel, n_max);
      if (N > 0) out.grids["prop31"] = {condition_values_A(p_rc(), rel, star_coeffs(p_rc(), rel, n_max), n_max)};
      return rep;
    });
  });
  const bool r_mops = N == 0 || runner.passed("prop31");

  runner.run("prop32", [&] {
    if (!p_mops) return skipped("prop32", p_why);
    if (!r_mops) return skipped("prop32", "R is a MOPS (prop31)");
    return guarded("prop32", [&] {
      const StarCoeffs star = star_coeffs(p_rc(), rel, n_max);
      CheckReport rep = check_Q_orthogonal(star, rel, n_max);
      if (M > 0) out.grids["prop32"] = {condition_values_B(star, tilde_coeffs(star, rel, n_max), rel, n_max)};
      return rep;
    });
  });

  runner.run("thm33", [&] {
    if (!p_mops) return skipped("thm33", p_why);
    return guarded("thm33", [&] {
      CheckReport rep = theorem_main_check(inst, n_max);
      if (N > 0 && M > 0) {
        const StarCoeffs star = star_coeffs(p_rc(), rel, n_max);
        std::vector<ConditionGrid> grids{condition_values_A(p_rc(), rel, star, n_max),
                                         condition_values_B(star, tilde_coeffs(star, rel, n_max), rel, n_max)};
        // Only the range past the initial block enters the verdict.
        for (auto& g : grids) {
          std::erase_if(g.values, [&](const auto& kv) { return kv.first.second < N + M + 1; });
          for (auto& range : g.ranges) range.n_from = std::max(range.n_from, N + M + 1);
        }
        out.grids["thm33"] = std::move(grids);
      }
      return rep;
    });
  });

  return out;
}

}  // namespace opstruct
