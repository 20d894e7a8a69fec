#include "glassmine/optics.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "glassmine/io_util.hpp"
#include "glassmine/record.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

bool plausible_n_column(const std::vector<double>& non_zero_values, const OpticsConfig& cfg) {
    for (double v : non_zero_values)
        if (!(v > cfg.lower && v <= cfg.upper)) return false;
    return true;
}

double merged_refractive_marker(const std::vector<double>& candidate_values) {
    double value = 0.0;
    int count = 0;
    for (double v : candidate_values) {
        if (v == 0.0) continue;
        ++count;
        value = v;
    }
    if (count == 0) return 0.0;
    if (count > 1) return kAmbiguousMarker;
    return value;
}

namespace {

enum class NColumnKind { Resolved, UnresolvedExplicit, Generic, Abbe, Blacklisted };

struct NColumn {
    size_t col = 0;
    NColumnKind kind = NColumnKind::Generic;
    std::string target;  // for Resolved
};

}  // namespace

OpticsReport run_optics(const std::string& filtered_csv, const CurationDictionary& dict,
                        const CompoundLexicon& lexicon, const FilterConfig& filter_cfg,
                        const OpticsConfig& cfg, const std::filesystem::path& out_dir,
                        const std::filesystem::path& queue_path) {
    OpticsReport report;
    CsvRow header;
    {
        std::ifstream probe(filtered_csv, std::ios::binary);
        if (!probe) throw std::runtime_error("filtered dataset not found: " + filtered_csv);
        CsvReader reader(probe);
        if (!reader.next(header)) throw std::runtime_error("empty filtered dataset");
    }
    ColumnRoles roles = classify_columns(header, lexicon, filter_cfg);
    int unit_col = -1;
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == "unit") unit_col = static_cast<int>(i);

    // pass 1: per-property-column non-zero domain check, O(columns) memory
    std::vector<char> domain_ok(roles.property_cols.size(), 1);
    {
        std::ifstream in(filtered_csv, std::ios::binary);
        CsvReader reader(in);
        CsvRow row;
        reader.next(row);  // header
        while (reader.next(row)) {
            for (size_t k = 0; k < roles.property_cols.size(); ++k) {
                size_t c = roles.property_cols[k];
                double v = c < row.size() ? coerce_numeric(row[c]) : 0.0;
                if (v != 0.0 && !(v > cfg.lower && v <= cfg.upper)) domain_ok[k] = 0;
            }
        }
    }

    // candidate columns: plausible-n domain, or νd/abbe mentions (kept for
    // Abbe consolidation regardless of domain)
    std::vector<NColumn> candidates;
    for (size_t k = 0; k < roles.property_cols.size(); ++k) {
        size_t c = roles.property_cols[k];
        const std::string& label = header[c];
        bool abbe_ish = mentions_abbe(label);
        bool in_domain = domain_ok[k] != 0;
        if (!abbe_ish && !in_domain) continue;  // non-n property (e.g. Tliq): other flow

        LabelResolution res = classify_label(label, dict, has_wavelength_marker(label));
        NColumn col;
        col.col = c;
        if (res.cls == ColumnClass::FalsePositive) {
            col.kind = NColumnKind::Blacklisted;
        } else if (res.cls == ColumnClass::ExplicitUnit && !res.target.empty()) {
            if (res.target == kAbbeTarget) {
                col.kind = NColumnKind::Abbe;
            } else {
                col.kind = NColumnKind::Resolved;
                col.target = res.target;
            }
        } else if (abbe_ish) {
            // νd columns gather under the standardized Abbe field
            col.kind = NColumnKind::Abbe;
        } else if (res.cls == ColumnClass::ExplicitUnit) {
            col.kind = NColumnKind::UnresolvedExplicit;
        } else {
            col.kind = NColumnKind::Generic;
        }
        candidates.push_back(col);
    }

    const auto& targets = n_targets();
    CsvRow std_header;
    for (size_t c : roles.oxide_cols) std_header.push_back(header[c]);
    for (const auto& t : targets) std_header.push_back(t);
    std_header.push_back(kAbbeTarget);
    std_header.push_back("patent_id");
    std_header.push_back("unit");

    CsvRow simple_header;
    for (size_t c : roles.oxide_cols) simple_header.push_back(header[c]);
    simple_header.push_back("Merged Refractive Index");
    simple_header.push_back(kAbbeTarget);
    simple_header.push_back("patent_id");
    simple_header.push_back("unit");

    std::ofstream std_out(out_dir / "optics_standardized.csv", std::ios::binary);
    std::ofstream simple_out(out_dir / "optics_simple_n.csv", std::ios::binary);
    if (!std_out || !simple_out)
        throw std::runtime_error("cannot write optics outputs in " + out_dir.string());
    CsvWriter std_writer(std_out);
    CsvWriter simple_writer(simple_out);
    std_writer.write_row(std_header);
    simple_writer.write_row(simple_header);

    std::set<std::string> queue;  // "patent\tlabel"

    std::ifstream in(filtered_csv, std::ios::binary);
    CsvReader reader(in);
    CsvRow row;
    reader.next(row);  // header
    while (reader.next(row)) {
        ++report.rows_in;
        auto cell = [&](size_t c) { return c < row.size() ? row[c] : std::string(); };
        std::string id = roles.id_col >= 0 ? cell(static_cast<size_t>(roles.id_col)) : "";
        std::string unit = unit_col >= 0 ? cell(static_cast<size_t>(unit_col)) : "none";
        std::string pub_upper = PatentId{patent_prefix(id), 0}.publication_upper();

        // gather per-kind non-zero values
        std::map<std::string, double> slots;  // target -> value
        double abbe_value = 0.0;
        std::vector<double> n_candidate_values;
        std::vector<std::pair<size_t, double>> generics;  // col, value
        bool any_unresolved = false;
        for (const auto& c : candidates) {
            double v = coerce_numeric(cell(c.col));
            if (v == 0.0) continue;
            switch (c.kind) {
                case NColumnKind::Blacklisted:
                    break;  // suppressed entirely
                case NColumnKind::Abbe:
                    if (abbe_value == 0.0) abbe_value = v;
                    break;
                case NColumnKind::Resolved:
                    n_candidate_values.push_back(v);
                    if (slots.find(c.target) == slots.end()) slots[c.target] = v;
                    break;
                case NColumnKind::UnresolvedExplicit:
                    n_candidate_values.push_back(v);
                    any_unresolved = true;
                    queue.insert(id + "\t" + header[c.col]);
                    break;
                case NColumnKind::Generic:
                    n_candidate_values.push_back(v);
                    generics.emplace_back(c.col, v);
                    break;
            }
        }

        // single generic value + curated patent -> standardized column
        if (generics.size() == 1) {
            auto it = dict.patent_wavelength_map.find(pub_upper);
            if (it != dict.patent_wavelength_map.end()) {
                if (slots.find(it->second) == slots.end()) slots[it->second] = generics[0].second;
            } else {
                queue.insert(id + "\t" + header[generics[0].first]);
            }
        } else if (generics.size() > 1) {
            for (const auto& [col, v] : generics) queue.insert(id + "\t" + header[col]);
        }

        bool has_standardized = !slots.empty();
        if (has_standardized) {
            CsvRow out;
            for (size_t c : roles.oxide_cols) out.push_back(cell(c));
            for (const auto& t : targets) {
                auto it = slots.find(t);
                out.push_back(it == slots.end() ? "0" : format_number(it->second));
            }
            out.push_back(abbe_value == 0.0 ? "0" : format_number(abbe_value));
            out.push_back(id);
            out.push_back(unit);
            std_writer.write_row(out);
            ++report.rows_out;
        } else if (n_candidate_values.empty()) {
            ++report.drop_no_candidate;
        } else {
            ++report.drop_unresolved;
            (void)any_unresolved;
        }

        // simple-n subset: exactly one refractive-index value in the row
        double marker = merged_refractive_marker(n_candidate_values);
        if (marker == kAmbiguousMarker) {
            ++report.ambiguous_rows;
        } else if (marker != 0.0) {
            CsvRow out;
            for (size_t c : roles.oxide_cols) out.push_back(cell(c));
            out.push_back(format_number(marker));
            out.push_back(abbe_value == 0.0 ? "0" : format_number(abbe_value));
            out.push_back(id);
            out.push_back(unit);
            simple_writer.write_row(out);
            ++report.rows_simple;
        }
    }

    if (!queue.empty()) {
        std::ofstream q(queue_path, std::ios::binary | std::ios::app);
        for (const auto& line : queue) q << line << '\n';
        report.queued_labels = queue.size();
    }
    return report;
}

}  // namespace glassmine
