// Dedup keys, reference subtraction, subset reports, and plot-data exports.
#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "glassmine/lexicon.hpp"

namespace glassmine {

// In-memory dataset view used by the comparison statistics.
struct CompareDataset {
    std::string label;                         // source tag for exports
    std::vector<std::string> oxide_formulas;   // canonical, parallel to columns
    std::vector<std::vector<double>> oxides;   // per row, parallel to formulas
    std::vector<double> tliq;                  // 0 = absent
    std::vector<double> nd;                    // nD column
    std::vector<bool> has_n;                   // any standardized n present
    std::vector<double> abbe;
    std::vector<std::string> patent_ids;       // empty strings when absent
    size_t rows() const { return oxides.size(); }
};

// Loads a dataset CSV: oxide columns are recognized by exact lexicon alias
// match (reference schema's canonical formulas included); property columns by
// the standardized names Tliq(°C), nD, nG, nF, nH, nC, Abbe Number.
CompareDataset load_compare_dataset(const std::string& csv_path, const CompoundLexicon& lexicon,
                                    const std::string& label);

// Stacks several dataset views under the union of their oxide columns.
CompareDataset merge_datasets(const std::vector<CompareDataset>& parts, const std::string& label);

// Canonical composition key: oxides sorted lexicographically as
// "formula:value" at the given precision, zero components omitted.
std::string dedup_key(const std::vector<std::string>& formulas,
                      const std::vector<double>& values, int precision);

std::unordered_set<std::string> key_set(const CompareDataset& ds, int precision);

// Row indices of A whose key is not present in B.
std::vector<size_t> subtract(const CompareDataset& a, const CompareDataset& b, int precision);

struct SubsetCell {
    size_t count = 0;
    double pct = 0.0;  // relative to the combined deduplicated reference
};

struct SubsetReport {
    // row label -> cells for {Total, Tliq, n, Abbe}
    std::vector<std::pair<std::string, std::array<SubsetCell, 4>>> rows;
    std::string to_csv() const;
};

SubsetReport subset_report(const CompareDataset& patents, const CompareDataset& ref_a,
                           const CompareDataset& ref_b, int precision);

// oxide -> occurrences/total occurrences, sorted descending (ties by formula).
std::vector<std::pair<std::string, double>> oxide_relative_frequency(const CompareDataset& ds);

// count/(N * bin_width) per bin; values outside the edges are not counted and
// N is the counted total, so sum(density*width) == 1. Edges must be strictly
// increasing; throws otherwise or when nothing falls inside.
std::vector<double> histogram_density(const std::vector<double>& values,
                                      const std::vector<double>& bin_edges);

// Uniform bin edges spanning the pooled values of several datasets.
std::vector<double> uniform_edges(const std::vector<double>& pooled, size_t bins);

// Publication year histogram from record date strings (first 4-digit group).
std::map<int, size_t> patents_per_year(const std::vector<std::string>& publication_dates);

// Plot-data exports (long format, one source tag column).
void export_abbe_diagram(const std::vector<CompareDataset>& datasets, const std::string& path);
void export_oxide_freq(const std::vector<CompareDataset>& datasets, size_t top_n,
                       const std::string& path);
void export_histogram(const std::vector<CompareDataset>& datasets, const std::string& property,
                      size_t bins, const std::string& path);
void export_violin(const std::vector<CompareDataset>& datasets,
                   const std::vector<std::string>& oxides, const std::string& property,
                   const std::string& path);
void export_years(const std::map<int, size_t>& counts, const std::string& path);

}  // namespace glassmine
