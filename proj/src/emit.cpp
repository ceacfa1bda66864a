#include "opstruct/emit.hpp"

#include <sstream>

#include <json.hpp>

namespace opstruct {

using nlohmann::json;

namespace {

json datum_json(const Datum& d) {
  json j{{"name", d.name}, {"value", to_string(d.value)}};
  if (d.i >= 0) j["i"] = d.i;
  if (d.n >= 0) j["n"] = d.n;
  return j;
}

json rationals_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

json poly_json(const Poly& p) { return rationals_json(p.coeffs()); }

json check_json(const CheckReport& c) {
  json j;
  j["status"] = std::string(to_string(c.status));
  j["values"] = json::array();
  for (const auto& d : c.values) j["values"].push_back(datum_json(d));
  j["witnesses"] = json::array();
  for (const auto& d : c.witnesses) j["witnesses"].push_back(datum_json(d));
  j["notes"] = c.notes;
  if (c.horizon >= 0) j["horizon"] = c.horizon;
  return j;
}

json grid_to_json(const ConditionGrid& grid) {
  json j;
  j["family"] = std::string(1, grid.family);
  j["violations"] = json::array();
  for (const auto& d : grid.violations()) j["violations"].push_back({{"i", d.i}, {"n", d.n}, {"value", to_string(d.value)}});
  j["checked_ranges"] = json::array();
  for (const auto& r : grid.ranges) j["checked_ranges"].push_back({{"i", r.i}, {"n_from", r.n_from}, {"n_to", r.n_to}});
  return j;
}

json report_json(const PipelineReport& r) {
  json j;
  j["instance"] = {{"N", r.N},
                   {"M", r.M},
                   {"n_max", r.n_max},
                   {"horizon", r.K},
                   {"anchor", r.anchor},
                   {"functionals", {{"u", r.u_origin}, {"v", r.v_origin}}},
                   {"orthogonal_through", {{"P", r.p_orthogonal_through}, {"Q", r.q_orthogonal_through}}}};
  j["checks"] = json::object();
  for (const auto& c : r.checks) j["checks"][c.check] = check_json(c);
  if (r.initial) {
    j["initial"] = {{"detA", to_string(r.initial->det_A)},
                    {"r_N", to_string(r.initial->r_N)},
                    {"s_M", to_string(r.initial->s_M)},
                    {"pass", r.initial->pass}};
  }
  if (r.relation) {
    const auto& fr = *r.relation;
    json inv{{"phi", poly_json(fr.phi)},
             {"psi", poly_json(fr.psi)},
             {"phi_text", fr.phi.to_string()},
             {"psi_text", fr.psi.to_string()},
             {"lambda", rationals_json(fr.lambda)},
             {"mu", rationals_json(fr.mu)},
             {"verified_to", fr.verified_to},
             {"route", fr.route}};
    if (r.initial) inv["detA"] = to_string(r.initial->det_A);
    if (const CheckReport* c = r.find("constancy"); c != nullptr && c->status != Status::skipped) {
      inv["constancy"] = c->passed();
    }
    j["inverse"] = std::move(inv);
  }
  if (!r.grids.empty()) {
    j["grids"] = json::object();
    for (const auto& [name, grids] : r.grids) {
      json arr = json::array();
      for (const auto& g : grids) arr.push_back(grid_to_json(g));
      j["grids"][name] = std::move(arr);
    }
  }
  if (!r.timing_ms.empty()) j["timing_ms"] = r.timing_ms;
  j["exit_code"] = r.exit_code();
  return j;
}

}  // namespace

std::string emit_json(const PipelineReport& report) { return report_json(report).dump(2) + "\n"; }

std::string grid_json(const ConditionGrid& grid) { return grid_to_json(grid).dump(2) + "\n"; }

std::string emit_error_json(const Error& error) {
  json j{{"error", {{"kind", std::string(to_string(error.kind()))}, {"message", error.what()}}}, {"exit_code", 2}};
  return j.dump(2) + "\n";
}

std::string emit_text(const PipelineReport& r) {
  std::ostringstream os;
  os << "instance: N=" << r.N << " M=" << r.M << " n_max=" << r.n_max << " K=" << r.K << " anchor=" << r.anchor
     << "\n";
  os << "functionals: u " << r.u_origin << ", v " << r.v_origin << "\n";
  os << "orthogonal through: P " << r.p_orthogonal_through << ", Q " << r.q_orthogonal_through << "\n";
  for (const auto& c : r.checks) {
    os << c.check << ": " << to_string(c.status);
    if (c.horizon >= 0) os << " (horizon " << c.horizon << ")";
    os << "\n";
    for (const auto& w : c.witnesses) {
      os << "  witness " << w.name;
      if (w.i >= 0) os << " i=" << w.i;
      if (w.n >= 0) os << " n=" << w.n;
      os << " value=" << to_string(w.value) << "\n";
    }
    for (const auto& note : c.notes) os << "  note: " << note << "\n";
  }
  if (r.initial) os << "det A = " << to_string(r.initial->det_A) << "\n";
  if (r.relation) {
    os << "Phi = " << r.relation->phi.to_string() << "\n";
    os << "Psi = " << r.relation->psi.to_string() << "\n";
    os << "identity verified through x^" << r.relation->verified_to << "\n";
  }
  for (const auto& [name, ms] : r.timing_ms) os << "time " << name << ": " << ms << " ms\n";
  os << "exit code " << r.exit_code() << "\n";
  return os.str();
}

}  // namespace opstruct
