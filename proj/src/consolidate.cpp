#include "glassmine/consolidate.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace glassmine {

UnionResult union_headers(const std::vector<std::string>& paths) {
    UnionResult result;
    std::unordered_set<std::string> seen;
    bool any_valid = false;
    for (const auto& path : paths) {
        auto header = read_csv_header(path);
        if (!header) {
            result.warnings.push_back("unreadable header: " + path);
            continue;
        }
        any_valid = true;
        for (const auto& label : *header) {
            if (seen.insert(label).second) result.schema.push_back(label);
        }
    }
    if (!any_valid) throw std::runtime_error("no valid header among input files");
    return result;
}

size_t append_aligned(std::ostream& sink, const std::string& path, const SchemaUnion& schema,
                      size_t* rows_read) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open CSV for append: " + path);
    CsvReader reader(in);
    CsvRow header;
    if (!reader.next(header)) return 0;

    // first occurrence wins for repeated labels (suffixing upstream keeps
    // them unique in practice)
    std::unordered_map<std::string, size_t> file_index;
    for (size_t i = 0; i < header.size(); ++i) file_index.emplace(header[i], i);

    std::vector<int> source_for;  // schema position -> file column or -1
    source_for.reserve(schema.size());
    for (const auto& label : schema) {
        auto it = file_index.find(label);
        source_for.push_back(it == file_index.end() ? -1 : static_cast<int>(it->second));
    }

    CsvWriter writer(sink);
    CsvRow row;
    CsvRow aligned(schema.size());
    size_t appended = 0;
    size_t row_index = 0;
    while (reader.next(row)) {
        ++row_index;
        if (rows_read) *rows_read = row_index;
        bool empty = true;
        for (const auto& cell : row)
            if (!cell.empty()) { empty = false; break; }
        if (empty) continue;
        for (size_t j = 0; j < schema.size(); ++j) {
            int src = source_for[j];
            aligned[j] = (src >= 0 && static_cast<size_t>(src) < row.size())
                             ? row[static_cast<size_t>(src)]
                             : "";
        }
        writer.write_row(aligned);
        if (!sink) throw std::runtime_error("row write failed: " + path + " row " +
                                            std::to_string(row_index));
        ++appended;
    }
    return appended;
}

ConsolidateReport consolidate_files(const std::vector<std::string>& paths,
                                    const std::string& out_path) {
    UnionResult u = union_headers(paths);
    ConsolidateReport report;
    report.warnings = u.warnings;
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write consolidated file: " + out_path);
        CsvWriter writer(out);
        writer.write_row(u.schema);
        for (const auto& path : paths) {
            if (!read_csv_header(path)) continue;  // warned during union
            size_t rows_read = 0;
            size_t appended = append_aligned(out, path, u.schema, &rows_read);
            report.rows_out += appended;
            report.rows_in += rows_read;
        }
    }
    report.empty_rows_dropped = report.rows_in - report.rows_out;
    prune_empty_columns(out_path);
    return report;
}

void prune_empty_columns(const std::string& path) {
    std::vector<char> keep;
    CsvRow header;
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open for pruning: " + path);
        CsvReader reader(in);
        if (!reader.next(header)) return;
        keep.assign(header.size(), 0);
        CsvRow row;
        while (reader.next(row)) {
            for (size_t i = 0; i < row.size() && i < keep.size(); ++i)
                if (!row[i].empty()) keep[i] = 1;
        }
    }
    bool all_kept = true;
    for (char k : keep)
        if (!k) all_kept = false;
    if (all_kept) return;

    std::filesystem::path tmp = std::filesystem::path(path).concat(".tmp");
    {
        std::ifstream in(path, std::ios::binary);
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write pruned file: " + tmp.string());
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
    std::filesystem::rename(tmp, path);
}

}  // namespace glassmine
