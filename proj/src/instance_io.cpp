#include "opstruct/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "opstruct/error.hpp"

namespace opstruct {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::schema_error, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) == keys.end()) {
      schema_fail(path, "unexpected field \"" + key + "\"");
    }
  }
}

Rational rational_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) schema_fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.kind(), "at " + path + ": " + e.message());
  }
}

std::vector<Rational> rationals_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(rational_at(j[k], path + "/" + std::to_string(k)));
  return out;
}

int int_at(const json& j, const std::string& path, int min_value) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  const long v = j.get<long>();
  if (v < min_value || v > 100000) schema_fail(path, "integer out of range");
  return static_cast<int>(v);
}

SourceSpec parse_source(const json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected a source object");
  const json& type = field(j, path, "type");
  if (!type.is_string()) schema_fail(path + "/type", "expected a string");
  const std::string kind = type.get<std::string>();
  SourceSpec src;
  if (kind == "recurrence") {
    only_keys(j, path, {"type", "beta", "gamma"});
    src.kind = SourceSpec::Kind::recurrence;
    auto betas = rationals_at(field(j, path, "beta"), path + "/beta");
    auto gammas = rationals_at(field(j, path, "gamma"), path + "/gamma");
    if (betas.empty()) schema_fail(path + "/beta", "needs at least one coefficient");
    // Favard gate: RecurrenceCoeffs rejects any vanishing gamma, by name.
    src.recurrence = RecurrenceCoeffs(std::move(betas), std::move(gammas));
  } else if (kind == "moments") {
    only_keys(j, path, {"type", "moments"});
    src.kind = SourceSpec::Kind::moments;
    auto moments = rationals_at(field(j, path, "moments"), path + "/moments");
    if (moments.empty()) schema_fail(path + "/moments", "needs at least one moment");
    src.moments = MomentFunctional(std::move(moments));
  } else if (kind == "family") {
    only_keys(j, path, {"type", "name", "alpha", "beta"});
    src.kind = SourceSpec::Kind::family;
    const json& name = field(j, path, "name");
    if (!name.is_string()) schema_fail(path + "/name", "expected a string");
    try {
      src.family.kind = parse_family_kind(name.get<std::string>());
    } catch (const Error& e) {
      schema_fail(path + "/name", e.what());
    }
    if (j.contains("alpha")) src.family.alpha = rational_at(j["alpha"], path + "/alpha");
    if (j.contains("beta")) src.family.beta = rational_at(j["beta"], path + "/beta");
  } else {
    schema_fail(path + "/type", "unknown source type \"" + kind + "\"");
  }
  return src;
}

std::vector<std::vector<Rational>> parse_table(const json& j, const std::string& path, int rows) {
  if (!j.is_object()) schema_fail(path, "expected an object keyed by i = \"1\"..");
  std::vector<std::vector<Rational>> table;
  for (int i = 1; i <= rows; ++i) {
    const std::string key = std::to_string(i);
    if (!j.contains(key)) schema_fail(path, "missing row \"" + key + "\"");
    table.push_back(rationals_at(j[key], path + "/" + key));
  }
  if (static_cast<int>(j.size()) != rows) schema_fail(path, "expected exactly " + std::to_string(rows) + " rows");
  return table;
}

StructureRelation parse_relation(const json& j, const std::string& path) {
  only_keys(j, path, {"N", "M", "r", "s"});
  const int N = int_at(field(j, path, "N"), path + "/N", 0);
  const int M = int_at(field(j, path, "M"), path + "/M", 0);
  auto r = N > 0 ? parse_table(field(j, path, "r"), path + "/r", N) : std::vector<std::vector<Rational>>{};
  auto s = M > 0 ? parse_table(field(j, path, "s"), path + "/s", M) : std::vector<std::vector<Rational>>{};
  try {
    return StructureRelation(N, M, std::move(r), std::move(s));
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
}

PipelineConfig parse_config(const json& j, const std::string& path) {
  only_keys(j, path, {"n_max", "horizon", "checks"});
  PipelineConfig cfg;
  cfg.checks = all_checks();
  if (j.contains("n_max")) cfg.n_max = int_at(j["n_max"], path + "/n_max", 0);
  if (j.contains("horizon")) cfg.horizon = int_at(j["horizon"], path + "/horizon", 0);
  if (j.contains("checks")) {
    const json& c = j["checks"];
    if (!c.is_array()) schema_fail(path + "/checks", "expected an array of check names");
    cfg.checks.clear();
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::string p = path + "/checks/" + std::to_string(k);
      if (!c[k].is_string()) schema_fail(p, "expected a string");
      const std::string name = c[k].get<std::string>();
      const auto& known = all_checks();
      if (std::find(known.begin(), known.end(), name) == known.end()) schema_fail(p, "unknown check \"" + name + "\"");
      cfg.checks.push_back(name);
    }
  }
  return cfg;
}

}  // namespace

std::string SourceSpec::describe() const {
  switch (kind) {
    case Kind::recurrence: return "recurrence(" + std::to_string(recurrence.size()) + " steps)";
    case Kind::moments: return "moments(depth " + std::to_string(moments.depth()) + ")";
    case Kind::family: return "family(" + family.name() + ")";
  }
  return "unknown";
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"regularity", "initial",     "lemma_dets", "inverse", "constancy",
                                              "nonvanishing", "uniqueness", "prop31",     "prop32",  "thm33"};
  return names;
}

InstanceSpec parse_instance(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::schema_error, std::string("at /: malformed JSON: ") + e.what());
  }
  only_keys(doc, "", {"P", "Q", "anchor", "relation", "config"});
  InstanceSpec spec;
  if (doc.contains("P")) spec.P = parse_source(doc["P"], "/P");
  if (doc.contains("Q")) spec.Q = parse_source(doc["Q"], "/Q");
  if (doc.contains("anchor")) {
    const json& a = doc["anchor"];
    if (a == "P") {
      spec.anchor = Anchor::P;
    } else if (a == "Q") {
      spec.anchor = Anchor::Q;
    } else {
      schema_fail("/anchor", "expected \"P\" or \"Q\"");
    }
  }
  if (spec.anchor == Anchor::P && !spec.P) schema_fail("/P", "anchor \"P\" needs a P source");
  if (spec.anchor == Anchor::Q && !spec.Q) schema_fail("/Q", "anchor \"Q\" needs a Q source");
  spec.relation = parse_relation(field(doc, "", "relation"), "/relation");
  spec.config = doc.contains("config") ? parse_config(doc["config"], "/config") : parse_config(json::object(), "/config");
  return spec;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::schema_error, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

namespace {

// Degree the anchor sequence is built to: enough for a derived functional
// on the other side to reach the moment horizon.
int target_degree(const InstanceSpec& spec, const PipelineConfig& config) {
  const int N = spec.relation.N();
  const int M = spec.relation.M();
  const int wanted = std::max(config.n_max + 1, config.K(N, M) / 2 + N + M + 2);
  return std::min(spec.relation.depth(), wanted);
}

}  // namespace

int source_depth(const InstanceSpec& spec, const PipelineConfig& config) {
  const int N = spec.relation.N();
  const int M = spec.relation.M();
  return std::max(2 * (target_degree(spec, config) + 1), config.K(N, M) + N + M + 2);
}

Mops mops_from_source(const SourceSpec& src, int degree, int depth) {
  switch (src.kind) {
    case SourceSpec::Kind::recurrence:
      return mops_from_recurrence(src.recurrence, std::min(degree, src.recurrence.size() - 1));
    case SourceSpec::Kind::moments: {
      const int d = std::min(degree, src.moments.depth() / 2);
      const RegularityCertificate cert = hankel_regular(src.moments, d);
      if (!cert.regular()) {
        throw Error(ErrorKind::not_regular,
                    "Hankel determinant Delta_" + std::to_string(cert.first_singular()) + " of the moments vanishes");
      }
      return mops_from_moments(src.moments, d);
    }
    case SourceSpec::Kind::family:
      return mops_from_moments(family_moments(src.family, depth), degree);
  }
  throw Error(ErrorKind::invalid_parameter, "unknown source");
}

MomentFunctional functional_from_source(const SourceSpec& src, int depth) {
  switch (src.kind) {
    case SourceSpec::Kind::recurrence: return moments_from_recurrence(src.recurrence, max_moment_depth(src.recurrence));
    case SourceSpec::Kind::moments: return src.moments;
    case SourceSpec::Kind::family: return family_moments(src.family, depth);
  }
  throw Error(ErrorKind::invalid_parameter, "unknown source");
}

RelationInstance build_instance(const InstanceSpec& spec, const PipelineConfig& config) {
  const int N = spec.relation.N();
  const int M = spec.relation.M();
  if (config.n_max < N + M + 2) {
    throw Error(ErrorKind::invalid_parameter, "n_max = " + std::to_string(config.n_max) + " must be at least N+M+2 = " +
                                                  std::to_string(N + M + 2));
  }
  if (config.K(N, M) < 2 * config.n_max) {
    throw Error(ErrorKind::invalid_parameter, "horizon K = " + std::to_string(config.K(N, M)) +
                                                  " must be at least 2 n_max = " + std::to_string(2 * config.n_max));
  }
  if (spec.relation.depth() < config.n_max) {
    throw Error(ErrorKind::insufficient_coefficients, "relation tables reach n = " +
                                                          std::to_string(spec.relation.depth()) + " < n_max = " +
                                                          std::to_string(config.n_max));
  }
  const int degree = target_degree(spec, config);
  const int depth = source_depth(spec, config);
  const SourceSpec& anchor_src = spec.anchor == Anchor::P ? *spec.P : *spec.Q;
  const Mops anchor = mops_from_source(anchor_src, degree, depth);
  // The other source, when present, only contributes its functional.
  const std::optional<SourceSpec>& other_src = spec.anchor == Anchor::P ? spec.Q : spec.P;
  std::optional<MomentFunctional> other;
  if (other_src) other = functional_from_source(*other_src, depth);
  RelationInstance inst = spec.anchor == Anchor::P ? RelationInstance::from_P(anchor, spec.relation, other)
                                                   : RelationInstance::from_Q(anchor, spec.relation, other);
  if (inst.depth() < config.n_max) {
    throw Error(ErrorKind::insufficient_coefficients, "anchor sequence reaches degree " + std::to_string(inst.depth()) +
                                                          " < n_max = " + std::to_string(config.n_max));
  }
  return inst;
}

}  // namespace opstruct
