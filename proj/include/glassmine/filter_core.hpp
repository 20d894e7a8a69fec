// Initial filtering: numeric coercion, sum-column removal, closure and
// property-presence criteria, chunked part-based processing.
#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "glassmine/csv.hpp"
#include "glassmine/lexicon.hpp"
#include "glassmine/tabular.hpp"

namespace glassmine {

struct FilterConfig {
    double closure_target = 100.0;
    double closure_tolerance = 0.5;
    size_t chunk_size = 10000;
    // Broad property detection against normalized labels; long patterns match
    // as substrings, short ones as standalone tokens.
    std::vector<std::string> property_patterns = {"refractive", "abbe", "liquidus", "tliq",
                                                  "tl",         "liq",  "nd",       "ng",
                                                  "nf",         "nh",   "nc",       "vd",
                                                  "n",          "cte"};
};

// Total numeric coercion: hyphen variants and anything unparseable (including
// missing) become 0. Always finite.
double coerce_numeric(std::string_view cell);

// Label contains '+' alongside >= 2 lexicon compounds.
bool is_sum_column_label(std::string_view normalized_label, const CompoundLexicon& lexicon);

// Removes compound-sum columns from a table.
ColumnarTable drop_sum_columns(const ColumnarTable& table, const CompoundLexicon& lexicon);

// |sum(values) - target| <= tolerance
bool closure_pass(const std::vector<double>& oxide_values, const FilterConfig& cfg);

// Any non-zero property value.
bool property_presence(const std::vector<double>& property_values);

// Row-index intersection of the two views.
std::set<size_t> intersect_views(const std::set<size_t>& composition_pass,
                                 const std::set<size_t>& property_pass);

// Relevant-column partition of a consolidated header.
struct ColumnRoles {
    std::vector<size_t> oxide_cols;
    std::vector<size_t> property_cols;
    std::vector<size_t> sum_cols;
    int id_col = -1;
    std::vector<std::string> labels;  // the input header
};
ColumnRoles classify_columns(const CsvRow& header, const CompoundLexicon& lexicon,
                             const FilterConfig& cfg);

// property column label -> patent ids with at least one non-zero value
using ContributionsReport = std::map<std::string, std::vector<std::string>>;

struct FilterRunReport {
    size_t rows_in = 0;
    size_t rows_out = 0;
    size_t drop_closure = 0;
    size_t drop_no_property = 0;
    size_t parts_written = 0;
    size_t parts_reused = 0;
};

// Chunked filtering of the consolidated CSV. Parts land in out_dir/parts as
// part_<n>.csv (existing parts are reused, making reruns restartable), the
// merge is a header-union aligned append into out_dir/filtered.csv, all-zero
// numeric columns are removed post-merge, and the contributions report is
// written to out_dir/contributions_by_patent.csv. unit_by_patent maps the
// lowercase publication prefix to the document unit label.
FilterRunReport run_chunked(const std::string& input_csv, const FilterConfig& cfg,
                            const CompoundLexicon& lexicon,
                            const std::unordered_map<std::string, std::string>& unit_by_patent,
                            const std::filesystem::path& out_dir);

// Removes numeric (oxide/property) columns whose every value coerces to zero;
// id/unit columns are always kept. Rewrites in place.
void remove_all_zero_columns(const std::string& csv_path, const CompoundLexicon& lexicon,
                             const FilterConfig& cfg);

// Re-derives the contributions report from a filtered dataset.
ContributionsReport contributions_from(const std::string& filtered_csv,
                                       const CompoundLexicon& lexicon, const FilterConfig& cfg);

}  // namespace glassmine
