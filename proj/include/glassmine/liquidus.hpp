// Liquidus-temperature standardization: pattern matching, °C/°F/K and
// measurement-condition normalization, plausibility filtering.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "glassmine/curation.hpp"
#include "glassmine/filter_core.hpp"

namespace glassmine {

struct LiquidusConfig {
    double min_c = 450.0;
    double max_c = 1900.0;
    // converted (°F/K-sourced) values are rounded to this many decimals
    int convert_decimals = 2;
};

// Temperature conversions and their inverses.
double f_to_c(double f);
double c_to_f(double c);
double k_to_c(double k);
double c_to_k(double c);

// Candidate labels matching the liquidus patterns ("liquidus", "tliq", and
// standalone-token "tl").
std::vector<size_t> match_tliq_columns(const std::vector<std::string>& labels);

// Exactly one candidate within [min_c, max_c] passes; its value is returned.
std::optional<double> plausibility_pick(const std::vector<double>& candidates_c,
                                        const LiquidusConfig& cfg);

struct LiquidusReport {
    size_t rows_in = 0;
    size_t rows_out = 0;      // input rows that produced at least one output row
    size_t output_rows = 0;   // may exceed rows_out when conditions coexist
    size_t drop_no_candidate = 0;
    size_t drop_plausibility = 0;
    size_t generic_superseded = 0;
    size_t queued_labels = 0;
};

// Runs the liquidus flow over a filtered dataset, writing liquidus.csv
// (oxides + Tliq(°C) + condition + patent_id + unit). Air/Platinum
// measurements coexisting on one input row become separate tagged rows.
LiquidusReport run_liquidus(const std::string& filtered_csv, const CurationDictionary& dict,
                            const CompoundLexicon& lexicon, const FilterConfig& filter_cfg,
                            const LiquidusConfig& cfg, const std::filesystem::path& out_dir,
                            const std::filesystem::path& queue_path);

}  // namespace glassmine
