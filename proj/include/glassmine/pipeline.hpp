// Stage orchestration: wiring between modules, stage reports, input checks.
#pragma once

#include <string>
#include <vector>

#include "glassmine/config.hpp"

namespace glassmine {

const std::vector<std::string>& stage_names();  // pipeline order, without "all"

// Runs one stage or "all". Returns 0 on success, 2 on stage failure. Each
// completed stage appends a JSON line to <out_dir>/run_report.jsonl; the file
// is truncated when truncate_report is set.
int run_stage(const std::string& stage, const PipelineConfig& cfg, bool truncate_report = true);

}  // namespace glassmine
