// Refractive-index / Abbe standardization: plausibility filter, blacklist,
// merged-marker routing, wavelength standardization, generic resolution.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "glassmine/curation.hpp"
#include "glassmine/filter_core.hpp"

namespace glassmine {

struct OpticsConfig {
    // plausible n domain: every non-zero value in (lower, upper]
    double lower = 1.0;
    double upper = 5.0;
};

// Column subset whose non-zero domain lies inside (1, 5]; νd/abbe-mentioning
// columns are preserved regardless.
// `columns` holds each candidate property column's non-zero values.
bool plausible_n_column(const std::vector<double>& non_zero_values, const OpticsConfig& cfg);

// Merged refractive marker over a row's plausible-n values: one non-zero
// candidate -> that value; two or more -> ambiguous (-1); none -> 0.
double merged_refractive_marker(const std::vector<double>& candidate_values);
inline constexpr double kAmbiguousMarker = -1.0;

struct OpticsReport {
    size_t rows_in = 0;
    size_t rows_out = 0;         // standardized dataset
    size_t rows_simple = 0;      // simple-n subset
    size_t drop_no_candidate = 0;
    size_t drop_unresolved = 0;
    size_t ambiguous_rows = 0;   // excluded from the simple-n subset
    size_t queued_labels = 0;
};

// Runs the optics flow over a filtered dataset. Writes
// optics_standardized.csv (oxides + nD..nC + "Abbe Number" + patent_id +
// unit), optics_simple_n.csv (oxides + "Merged Refractive Index" + "Abbe
// Number" + patent_id + unit), and appends unresolved (patent, label) pairs to
// the curation queue.
OpticsReport run_optics(const std::string& filtered_csv, const CurationDictionary& dict,
                        const CompoundLexicon& lexicon, const FilterConfig& filter_cfg,
                        const OpticsConfig& cfg, const std::filesystem::path& out_dir,
                        const std::filesystem::path& queue_path);

}  // namespace glassmine
