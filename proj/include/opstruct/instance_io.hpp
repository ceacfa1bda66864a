#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opstruct/functional.hpp"
#include "opstruct/mops.hpp"
#include "opstruct/relation.hpp"

namespace opstruct {

// Where a MOPS or functional comes from.
struct SourceSpec {
  enum class Kind { recurrence, moments, family };
  Kind kind = Kind::family;
  RecurrenceCoeffs recurrence;
  MomentFunctional moments;
  FamilySpec family;

  std::string describe() const;
};

struct PipelineConfig {
  int n_max = 12;
  std::optional<int> horizon;     // K; default 2 n_max + N + M + 2
  std::vector<std::string> checks;  // empty selection means metadata only
  bool timing = false;

  int K(int N, int M) const { return horizon.value_or(2 * n_max + N + M + 2); }
};

const std::vector<std::string>& all_checks();

// Parsed document, before any sequence is built.
struct InstanceSpec {
  std::optional<SourceSpec> P;
  std::optional<SourceSpec> Q;
  Anchor anchor = Anchor::P;
  StructureRelation relation;
  PipelineConfig config;
};

// Throws SchemaError (with a JSON path), InvalidRational, and NotRegular
// from the Favard gate on recurrence sources.
InstanceSpec parse_instance(std::string_view document);
InstanceSpec load_instance(const std::string& path);

// Builds the anchor MOPS and the instance. Checks the config invariants
// and the relation depth against n_max (InsufficientCoefficients).
RelationInstance build_instance(const InstanceSpec& spec, const PipelineConfig& config);

// Moment depth used for family and other closed-form sources.
int source_depth(const InstanceSpec& spec, const PipelineConfig& config);

// The anchor MOPS through degree `degree` from a source.
Mops mops_from_source(const SourceSpec& src, int degree, int depth);
// The functional of a source, through at least `depth` where the source allows.
MomentFunctional functional_from_source(const SourceSpec& src, int depth);

}  // namespace opstruct
