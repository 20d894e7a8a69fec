#include "glassmine/filter_core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "glassmine/consolidate.hpp"
#include "glassmine/record.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

double coerce_numeric(std::string_view cell) {
    std::string t = trim(cell);
    if (t.empty()) return 0.0;
    // hyphen family used for "zero / not measured"
    if (t == "-" || t == "‐" || t == "‑" || t == "–" || t == "—" ||
        t == "−")
        return 0.0;
    double value = 0.0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) return 0.0;
    if (!std::isfinite(value)) return 0.0;
    return value;
}

bool is_sum_column_label(std::string_view normalized_label, const CompoundLexicon& lexicon) {
    if (normalized_label.find('+') == std::string_view::npos) return false;
    return lexicon.compounds_in(normalized_label).size() >= 2;
}

ColumnarTable drop_sum_columns(const ColumnarTable& table, const CompoundLexicon& lexicon) {
    std::vector<size_t> keep;
    for (size_t i = 0; i < table.labels.size(); ++i)
        if (!is_sum_column_label(table.labels[i], lexicon)) keep.push_back(i);
    ColumnarTable out;
    out.source_id = table.source_id;
    for (size_t i : keep) out.labels.push_back(table.labels[i]);
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        cells.reserve(keep.size());
        for (size_t i : keep) cells.push_back(i < row.size() ? row[i] : "");
        out.rows.push_back(std::move(cells));
    }
    return out;
}

bool closure_pass(const std::vector<double>& oxide_values, const FilterConfig& cfg) {
    double sum = 0.0;
    for (double v : oxide_values) sum += v;
    return std::fabs(sum - cfg.closure_target) <= cfg.closure_tolerance;
}

bool property_presence(const std::vector<double>& property_values) {
    for (double v : property_values)
        if (v != 0.0) return true;
    return false;
}

std::set<size_t> intersect_views(const std::set<size_t>& composition_pass,
                                 const std::set<size_t>& property_pass) {
    std::set<size_t> out;
    std::set_intersection(composition_pass.begin(), composition_pass.end(),
                          property_pass.begin(), property_pass.end(),
                          std::inserter(out, out.begin()));
    return out;
}

ColumnRoles classify_columns(const CsvRow& header, const CompoundLexicon& lexicon,
                             const FilterConfig& cfg) {
    ColumnRoles roles;
    roles.labels = header;
    for (size_t i = 0; i < header.size(); ++i) {
        const std::string& label = header[i];
        if (label == "patent_id") {
            roles.id_col = static_cast<int>(i);
            continue;
        }
        if (label == "unit") continue;
        if (is_sum_column_label(label, lexicon)) {
            roles.sum_cols.push_back(i);
            continue;
        }
        if (lexicon.canonical_for_label(label)) {
            roles.oxide_cols.push_back(i);
            continue;
        }
        if (matches_any_pattern(label, cfg.property_patterns)) roles.property_cols.push_back(i);
    }
    return roles;
}

namespace {

std::string part_path(const std::filesystem::path& parts_dir, size_t n) {
    return (parts_dir / ("part_" + std::to_string(n) + ".csv")).string();
}

struct ChunkFilter {
    const ColumnRoles& roles;
    const FilterConfig& cfg;
    const std::unordered_map<std::string, std::string>& unit_by_patent;

    // Returns the output row (coerced values + patent_id + unit) or empty.
    bool filter_row(const CsvRow& row, CsvRow& out, FilterRunReport& report) const {
        std::vector<double> oxides;
        oxides.reserve(roles.oxide_cols.size());
        for (size_t c : roles.oxide_cols)
            oxides.push_back(c < row.size() ? coerce_numeric(row[c]) : 0.0);
        std::vector<double> props;
        props.reserve(roles.property_cols.size());
        for (size_t c : roles.property_cols)
            props.push_back(c < row.size() ? coerce_numeric(row[c]) : 0.0);

        if (!closure_pass(oxides, cfg)) {
            ++report.drop_closure;
            return false;
        }
        if (!property_presence(props)) {
            ++report.drop_no_property;
            return false;
        }

        out.clear();
        for (double v : oxides) out.push_back(format_number(v));
        for (double v : props) out.push_back(format_number(v));
        std::string id = roles.id_col >= 0 && static_cast<size_t>(roles.id_col) < row.size()
                             ? row[static_cast<size_t>(roles.id_col)]
                             : "";
        std::string unit = "none";
        auto it = unit_by_patent.find(patent_prefix(id));
        if (it != unit_by_patent.end()) unit = it->second;
        out.push_back(id);
        out.push_back(unit);
        return true;
    }
};

}  // namespace

FilterRunReport run_chunked(const std::string& input_csv, const FilterConfig& cfg,
                            const CompoundLexicon& lexicon,
                            const std::unordered_map<std::string, std::string>& unit_by_patent,
                            const std::filesystem::path& out_dir) {
    if (cfg.chunk_size == 0) throw std::runtime_error("chunk_size must be >= 1");
    std::ifstream in(input_csv, std::ios::binary);
    if (!in) throw std::runtime_error("consolidated input not found: " + input_csv);
    CsvReader reader(in);
    CsvRow header;
    if (!reader.next(header)) throw std::runtime_error("empty consolidated input: " + input_csv);

    ColumnRoles roles = classify_columns(header, lexicon, cfg);

    CsvRow out_header;
    for (size_t c : roles.oxide_cols) out_header.push_back(header[c]);
    for (size_t c : roles.property_cols) out_header.push_back(header[c]);
    out_header.push_back("patent_id");
    out_header.push_back("unit");

    auto parts_dir = out_dir / "parts";
    std::filesystem::create_directories(parts_dir);

    FilterRunReport report;
    ChunkFilter chunk_filter{roles, cfg, unit_by_patent};

    std::vector<std::string> part_files;
    CsvRow row;
    CsvRow out_row;
    bool more = true;
    size_t part_no = 0;
    while (more) {
        ++part_no;
        std::string path = part_path(parts_dir, part_no);
        bool reuse = std::filesystem::exists(path);
        std::ofstream part_out;
        std::string tmp = path + ".tmp";
        if (!reuse) {
            part_out.open(tmp, std::ios::binary);
            if (!part_out) throw std::runtime_error("cannot write part file: " + tmp);
            CsvWriter(part_out).write_row(out_header);
        }
        size_t in_chunk = 0;
        size_t kept = 0;
        while (in_chunk < cfg.chunk_size && (more = reader.next(row))) {
            ++in_chunk;
            ++report.rows_in;
            // reused parts still get counted so drop accounting stays exact
            if (chunk_filter.filter_row(row, out_row, report)) {
                ++kept;
                ++report.rows_out;
                if (!reuse) CsvWriter(part_out).write_row(out_row);
            }
        }
        if (in_chunk == 0) {
            // no data left; drop the empty trailing part
            if (!reuse) {
                part_out.close();
                std::filesystem::remove(tmp);
            }
            break;
        }
        if (!reuse) {
            part_out.close();
            if (!part_out) throw std::runtime_error("part write failed: " + tmp);
            std::filesystem::rename(tmp, path);
            ++report.parts_written;
        } else {
            ++report.parts_reused;
        }
        part_files.push_back(path);
    }

    if (part_files.empty()) {
        // header-only output keeps downstream stages total
        write_csv_file((out_dir / "filtered.csv").string(), out_header, {});
        write_csv_file((out_dir / "contributions_by_patent.csv").string(),
                       {"property_label", "patent_id"}, {});
        return report;
    }

    // merge parts via header union + aligned append
    UnionResult u = union_headers(part_files);
    std::string merged = (out_dir / "filtered.csv").string();
    {
        std::ofstream out(merged, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write merged output: " + merged);
        CsvWriter(out).write_row(u.schema);
        for (const auto& path : part_files) append_aligned(out, path, u.schema);
    }

    // all-zero numeric columns removed post-merge
    remove_all_zero_columns(merged, lexicon, cfg);

    ContributionsReport contributions = contributions_from(merged, lexicon, cfg);
    std::vector<CsvRow> contrib_rows;
    for (const auto& [label, patents] : contributions)
        for (const auto& p : patents) contrib_rows.push_back({label, p});
    write_csv_file((out_dir / "contributions_by_patent.csv").string(),
                   {"property_label", "patent_id"}, contrib_rows);

    return report;
}

void remove_all_zero_columns(const std::string& csv_path, const CompoundLexicon& lexicon,
                             const FilterConfig& cfg) {
    std::vector<char> keep;
    CsvRow header;
    {
        std::ifstream in(csv_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open for zero-column pruning: " + csv_path);
        CsvReader reader(in);
        if (!reader.next(header)) return;
        ColumnRoles roles = classify_columns(header, lexicon, cfg);
        std::vector<char> numeric(header.size(), 0);
        for (size_t c : roles.oxide_cols) numeric[c] = 1;
        for (size_t c : roles.property_cols) numeric[c] = 1;
        keep.assign(header.size(), 0);
        for (size_t i = 0; i < header.size(); ++i)
            if (!numeric[i]) keep[i] = 1;  // id/unit always kept
        CsvRow row;
        while (reader.next(row)) {
            for (size_t i = 0; i < header.size(); ++i) {
                if (keep[i] || i >= row.size()) continue;
                if (coerce_numeric(row[i]) != 0.0) keep[i] = 1;
            }
        }
    }
    bool all = true;
    for (char k : keep)
        if (!k) all = false;
    if (all) return;
    std::string tmp = csv_path + ".tmp";
    {
        std::ifstream in(csv_path, std::ios::binary);
        std::ofstream out(tmp, std::ios::binary);
        CsvReader reader(in);
        CsvWriter writer(out);
        CsvRow row;
        while (reader.next(row)) {
            CsvRow pruned;
            for (size_t i = 0; i < row.size(); ++i)
                if (i < keep.size() && keep[i]) pruned.push_back(row[i]);
            writer.write_row(pruned);
        }
    }
    std::filesystem::rename(tmp, csv_path);
}

ContributionsReport contributions_from(const std::string& filtered_csv,
                                       const CompoundLexicon& lexicon, const FilterConfig& cfg) {
    std::ifstream in(filtered_csv, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open filtered dataset: " + filtered_csv);
    CsvReader reader(in);
    CsvRow header;
    if (!reader.next(header)) return {};
    ColumnRoles roles = classify_columns(header, lexicon, cfg);
    std::map<std::string, std::set<std::string>> sets;
    CsvRow row;
    while (reader.next(row)) {
        std::string id = roles.id_col >= 0 && static_cast<size_t>(roles.id_col) < row.size()
                             ? row[static_cast<size_t>(roles.id_col)]
                             : "";
        for (size_t c : roles.property_cols) {
            if (c < row.size() && coerce_numeric(row[c]) != 0.0) sets[header[c]].insert(id);
        }
    }
    ContributionsReport report;
    for (auto& [label, ids] : sets) report[label] = {ids.begin(), ids.end()};
    return report;
}

}  // namespace glassmine
