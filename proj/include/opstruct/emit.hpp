#pragma once

#include <string>

#include "opstruct/error.hpp"
#include "opstruct/pipeline.hpp"

namespace opstruct {

// Canonical JSON: sorted keys, rationals as "p/q", two-space indent.
std::string emit_json(const PipelineReport& report);
std::string emit_text(const PipelineReport& report);
std::string emit_error_json(const Error& error);

std::string grid_json(const ConditionGrid& grid);

}  // namespace opstruct
