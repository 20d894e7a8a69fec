#include "glassmine/liquidus.hpp"

#include <array>
#include <fstream>
#include <map>
#include <set>

#include "glassmine/record.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

double f_to_c(double f) { return (f - 32.0) * 5.0 / 9.0; }
double c_to_f(double c) { return c * 9.0 / 5.0 + 32.0; }
double k_to_c(double k) { return k - 273.15; }
double c_to_k(double c) { return c + 273.15; }

std::vector<size_t> match_tliq_columns(const std::vector<std::string>& labels) {
    // "liquidus"/"tliq" as substrings (captures "tliquidus °c"); "tl"/"liq"
    // only as standalone tokens
    static const std::vector<std::string> patterns = {"liquidus", "tliq", "tl", "liq"};
    std::vector<size_t> out;
    for (size_t i = 0; i < labels.size(); ++i)
        if (matches_any_pattern(labels[i], patterns)) out.push_back(i);
    return out;
}

std::optional<double> plausibility_pick(const std::vector<double>& candidates_c,
                                        const LiquidusConfig& cfg) {
    std::optional<double> pick;
    for (double v : candidates_c) {
        if (v < cfg.min_c || v > cfg.max_c) continue;
        if (pick) return std::nullopt;  // two in-range candidates: ambiguous
        pick = v;
    }
    return pick;
}

namespace {

enum class TliqKind { Resolved, UnresolvedExplicit, Generic };

struct TliqColumn {
    size_t col = 0;
    TliqKind kind = TliqKind::Generic;
    std::string target;
};

struct Candidate {
    double celsius;
    bool converted;  // °F/K-sourced
};

// condition bucket + conversion for a standardized target
struct TargetInfo {
    std::string condition;  // "", "air", "platinum"
    char unit;              // 'c', 'f', 'k'
};

TargetInfo target_info(const std::string& target) {
    if (target == "Tliq Air(°C)") return {"air", 'c'};
    if (target == "Tliq Platinum(°C)") return {"platinum", 'c'};
    if (target == "Tliq(°F)") return {"", 'f'};
    if (target == "Tliq(K)") return {"", 'k'};
    return {"", 'c'};
}

}  // namespace

LiquidusReport run_liquidus(const std::string& filtered_csv, const CurationDictionary& dict,
                            const CompoundLexicon& lexicon, const FilterConfig& filter_cfg,
                            const LiquidusConfig& cfg, const std::filesystem::path& out_dir,
                            const std::filesystem::path& queue_path) {
    LiquidusReport report;
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

    // label-level resolution of tliq candidates among property columns
    std::vector<std::string> property_labels;
    for (size_t c : roles.property_cols) property_labels.push_back(header[c]);
    std::vector<TliqColumn> columns;
    for (size_t k : match_tliq_columns(property_labels)) {
        size_t c = roles.property_cols[k];
        const std::string& label = header[c];
        LabelResolution res = classify_label(label, dict, has_temperature_marker(label));
        if (res.cls == ColumnClass::FalsePositive) continue;
        TliqColumn col;
        col.col = c;
        if (res.cls == ColumnClass::ExplicitUnit && !res.target.empty()) {
            col.kind = TliqKind::Resolved;
            col.target = res.target;
        } else if (res.cls == ColumnClass::ExplicitUnit) {
            col.kind = TliqKind::UnresolvedExplicit;
        } else {
            col.kind = TliqKind::Generic;
        }
        columns.push_back(col);
    }

    CsvRow out_header;
    for (size_t c : roles.oxide_cols) out_header.push_back(header[c]);
    out_header.push_back("Tliq(°C)");
    out_header.push_back("condition");
    out_header.push_back("patent_id");
    out_header.push_back("unit");

    std::ofstream out(out_dir / "liquidus.csv", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write liquidus output in " + out_dir.string());
    CsvWriter writer(out);
    writer.write_row(out_header);

    std::set<std::string> queue;

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

        std::map<std::string, std::vector<Candidate>> buckets;  // condition -> candidates
        std::vector<std::pair<size_t, double>> generics;
        bool any_explicit = false;
        bool any_candidate = false;
        for (const auto& col : columns) {
            double v = coerce_numeric(cell(col.col));
            if (v == 0.0) continue;
            any_candidate = true;
            switch (col.kind) {
                case TliqKind::Resolved: {
                    TargetInfo info = target_info(col.target);
                    Candidate cand{};
                    if (info.unit == 'f') {
                        cand = {round_decimals(f_to_c(v), cfg.convert_decimals), true};
                    } else if (info.unit == 'k') {
                        cand = {round_decimals(k_to_c(v), cfg.convert_decimals), true};
                    } else {
                        cand = {v, false};
                    }
                    buckets[info.condition].push_back(cand);
                    any_explicit = true;
                    break;
                }
                case TliqKind::UnresolvedExplicit:
                    queue.insert(id + "\t" + header[col.col]);
                    break;
                case TliqKind::Generic:
                    generics.emplace_back(col.col, v);
                    break;
            }
        }

        if (!generics.empty()) {
            if (any_explicit) {
                // explicit declarations win; superseded generics are reported
                report.generic_superseded += generics.size();
            } else if (generics.size() == 1) {
                auto it = dict.patent_unit_map.find(pub_upper);
                if (it != dict.patent_unit_map.end()) {
                    TargetInfo info = target_info(it->second);
                    double v = generics[0].second;
                    Candidate cand{};
                    if (info.unit == 'f') {
                        cand = {round_decimals(f_to_c(v), cfg.convert_decimals), true};
                    } else if (info.unit == 'k') {
                        cand = {round_decimals(k_to_c(v), cfg.convert_decimals), true};
                    } else {
                        cand = {v, false};
                    }
                    buckets[info.condition].push_back(cand);
                } else {
                    queue.insert(id + "\t" + header[generics[0].first]);
                }
            } else {
                for (const auto& [col, v] : generics) queue.insert(id + "\t" + header[col]);
            }
        }

        if (!any_candidate) {
            ++report.drop_no_candidate;
            continue;
        }

        size_t emitted = 0;
        for (const auto& [condition, candidates] : buckets) {
            std::vector<double> values;
            values.reserve(candidates.size());
            for (const auto& c : candidates) values.push_back(c.celsius);
            auto pick = plausibility_pick(values, cfg);
            if (!pick) continue;
            CsvRow out_row;
            for (size_t c : roles.oxide_cols) out_row.push_back(cell(c));
            out_row.push_back(format_number(*pick));
            out_row.push_back(condition);
            out_row.push_back(id);
            out_row.push_back(unit);
            writer.write_row(out_row);
            ++emitted;
        }
        if (emitted > 0) {
            ++report.rows_out;
            report.output_rows += emitted;
        } else {
            ++report.drop_plausibility;
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
