#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opstruct/instance_io.hpp"
#include "opstruct/inverse.hpp"
#include "opstruct/ortho.hpp"
#include "opstruct/relation.hpp"
#include "opstruct/report.hpp"

namespace opstruct {

struct PipelineReport {
  // Instance metadata.
  int N = 0;
  int M = 0;
  int n_max = 0;
  int K = 0;
  std::string anchor;
  std::string u_origin;
  std::string v_origin;
  int p_orthogonal_through = 0;
  int q_orthogonal_through = 0;

  std::vector<CheckReport> checks;  // in execution order
  std::optional<InitialConditions> initial;
  std::optional<FunctionalRelation> relation;
  std::map<std::string, std::vector<ConditionGrid>> grids;  // per check
  std::map<std::string, double> timing_ms;                  // filled when config.timing

  const CheckReport* find(const std::string& check) const;
  // 0 when every check passed (or was not applicable / skipped), 1 otherwise.
  int exit_code() const;
};

PipelineReport run_pipeline(const RelationInstance& inst, const PipelineConfig& cfg);

}  // namespace opstruct
