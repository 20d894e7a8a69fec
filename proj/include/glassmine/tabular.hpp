// Table-section HTML -> candidate ColumnarTables: unit labeling, block
// segmentation, header heuristics, relevance filtering.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glassmine/lexicon.hpp"
#include "glassmine/record.hpp"

namespace glassmine {

// Composition-basis evidence aggregated over all tables of one patent.
enum class UnitLabel { Mol, Mass, Both, None };

std::string to_string(UnitLabel u);
std::optional<UnitLabel> unit_label_from_string(std::string_view s);

struct ColumnarTable {
    std::vector<std::string> labels;             // normalized; duplicates allowed
    std::vector<std::vector<std::string>> rows;  // each row has labels.size() cells
    PatentId source_id;
};

struct HeuristicConfig {
    std::vector<std::string> property_keywords = {"refractive", "abbe", "liquidus", "cte", "nd"};
    size_t max_columns = 64;
    size_t max_label_len = 120;
};

// Document-level unit evidence: terms containing "mol" vs mass variants
// ("wt%", "weight %", "mass%").
UnitLabel detect_unit_label(const std::vector<std::string>& fragments);

// Top-level <table> elements of one table-section fragment, document order.
// ok=false when the markup is unbalanced and the fragment must be skipped.
struct BlockSplit {
    std::vector<std::string> blocks;
    bool ok = true;
};
BlockSplit split_blocks(const std::string& fragment);

enum class HeaderReject { TooFewCompounds, NoPropertyKeyword, WidthExceeded };

struct HeaderDetection {
    bool accepted = false;
    size_t header_index = 0;
    HeaderReject reject = HeaderReject::TooFewCompounds;
};

// Accepts the first row carrying >= 2 lexicon compounds, provided the header
// region (rows up to and including it) mentions a property keyword and the
// width limits hold.
HeaderDetection detect_header(const std::vector<std::vector<std::string>>& grid,
                              const CompoundLexicon& lexicon, const HeuristicConfig& config);

// Normalized labels from the header row; all subsequent rows padded/truncated
// to the label count ("" marks missing).
ColumnarTable block_to_table(const std::vector<std::vector<std::string>>& grid,
                             size_t header_index, const PatentId& id);

// Keep a record iff any fragment mentions at least one lexicon compound.
bool filter_relevant(const PatentRecord& record, const CompoundLexicon& lexicon);

// Block CSV materialization: duplicate labels get positional ".1"/".2"
// suffixes and a patent_id column is appended.
std::vector<std::string> csv_labels_for(const ColumnarTable& table);
void write_block_csv(const ColumnarTable& table, const std::string& path);

}  // namespace glassmine
