#include "glassmine/tabular.hpp"

#include <map>

#include "glassmine/csv.hpp"
#include "glassmine/html.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

std::string to_string(UnitLabel u) {
    switch (u) {
        case UnitLabel::Mol: return "mol";
        case UnitLabel::Mass: return "mass";
        case UnitLabel::Both: return "both";
        case UnitLabel::None: return "none";
    }
    return "none";
}

std::optional<UnitLabel> unit_label_from_string(std::string_view s) {
    if (s == "mol") return UnitLabel::Mol;
    if (s == "mass") return UnitLabel::Mass;
    if (s == "both") return UnitLabel::Both;
    if (s == "none") return UnitLabel::None;
    return std::nullopt;
}

UnitLabel detect_unit_label(const std::vector<std::string>& fragments) {
    bool mol = false;
    bool mass = false;
    for (const auto& fragment : fragments) {
        std::string text = normalize_text(html::strip_tags(fragment));
        if (text.find("mol") != std::string::npos) mol = true;
        if (text.find("wt%") != std::string::npos || text.find("wt %") != std::string::npos ||
            text.find("weight %") != std::string::npos ||
            text.find("weight%") != std::string::npos ||
            text.find("mass%") != std::string::npos || text.find("mass %") != std::string::npos)
            mass = true;
    }
    if (mol && mass) return UnitLabel::Both;
    if (mol) return UnitLabel::Mol;
    if (mass) return UnitLabel::Mass;
    return UnitLabel::None;
}

BlockSplit split_blocks(const std::string& fragment) {
    auto found = html::find_elements(fragment, "table");
    BlockSplit out;
    out.ok = found.ok;
    if (found.ok) out.blocks = std::move(found.slices);
    return out;
}

HeaderDetection detect_header(const std::vector<std::vector<std::string>>& grid,
                              const CompoundLexicon& lexicon, const HeuristicConfig& config) {
    HeaderDetection result;

    // (i) start row: first row with >= 2 distinct compounds
    size_t header_index = grid.size();
    for (size_t i = 0; i < grid.size(); ++i) {
        std::string joined;
        for (const auto& cell : grid[i]) {
            joined += normalize_text(cell);
            joined += ' ';
        }
        if (lexicon.compounds_in(joined).size() >= 2) {
            header_index = i;
            break;
        }
    }
    if (header_index == grid.size()) {
        result.reject = HeaderReject::TooFewCompounds;
        return result;
    }

    // (iii) technical limits on the header row
    const auto& header = grid[header_index];
    if (header.size() > config.max_columns) {
        result.reject = HeaderReject::WidthExceeded;
        return result;
    }
    for (const auto& cell : header) {
        if (normalize_text(cell).size() > config.max_label_len) {
            result.reject = HeaderReject::WidthExceeded;
            return result;
        }
    }

    // (ii) property keyword somewhere in the header region (caption rows
    // above the compound row included)
    bool keyword = false;
    for (size_t i = 0; i <= header_index && !keyword; ++i) {
        for (const auto& cell : grid[i]) {
            if (matches_any_pattern(normalize_text(cell), config.property_keywords)) {
                keyword = true;
                break;
            }
        }
    }
    if (!keyword) {
        result.reject = HeaderReject::NoPropertyKeyword;
        return result;
    }

    result.accepted = true;
    result.header_index = header_index;
    return result;
}

ColumnarTable block_to_table(const std::vector<std::vector<std::string>>& grid,
                             size_t header_index, const PatentId& id) {
    ColumnarTable table;
    table.source_id = id;
    for (const auto& cell : grid[header_index]) table.labels.push_back(normalize_text(cell));
    const size_t width = table.labels.size();
    for (size_t i = header_index + 1; i < grid.size(); ++i) {
        std::vector<std::string> row;
        row.reserve(width);
        for (size_t c = 0; c < width; ++c)
            row.push_back(c < grid[i].size() ? normalize_text(grid[i][c]) : "");
        table.rows.push_back(std::move(row));
    }
    return table;
}

bool filter_relevant(const PatentRecord& record, const CompoundLexicon& lexicon) {
    for (const auto& fragment : record.html_tables) {
        std::string text = normalize_text(html::strip_tags(fragment));
        if (lexicon.mentions_compound(text)) return true;
    }
    return false;
}

std::vector<std::string> csv_labels_for(const ColumnarTable& table) {
    std::vector<std::string> labels;
    labels.reserve(table.labels.size() + 1);
    std::map<std::string, int> seen;
    for (const auto& label : table.labels) {
        int n = seen[label]++;
        labels.push_back(n == 0 ? label : label + "." + std::to_string(n));
    }
    labels.push_back("patent_id");
    return labels;
}

void write_block_csv(const ColumnarTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write block CSV: " + path);
    CsvWriter writer(out);
    writer.write_row(csv_labels_for(table));
    const std::string id = table.source_id.render();
    for (const auto& row : table.rows) {
        CsvRow csv_row = row;
        csv_row.push_back(id);
        writer.write_row(csv_row);
    }
}

}  // namespace glassmine
