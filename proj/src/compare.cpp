#include "glassmine/compare.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "glassmine/csv.hpp"
#include "glassmine/filter_core.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

CompareDataset load_compare_dataset(const std::string& csv_path, const CompoundLexicon& lexicon,
                                    const std::string& label) {
    CompareDataset ds;
    ds.label = label;
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dataset: " + csv_path);
    CsvReader reader(in);
    CsvRow header;
    if (!reader.next(header)) return ds;

    std::vector<size_t> oxide_cols;
    int tliq_col = -1, nd_col = -1, abbe_col = -1, id_col = -1;
    std::vector<size_t> n_cols;
    for (size_t i = 0; i < header.size(); ++i) {
        const std::string& h = header[i];
        if (h == "Tliq(°C)") {
            tliq_col = static_cast<int>(i);
        } else if (h == "nD") {
            nd_col = static_cast<int>(i);
            n_cols.push_back(i);
        } else if (h == "nG" || h == "nF" || h == "nH" || h == "nC") {
            n_cols.push_back(i);
        } else if (h == "Abbe Number") {
            abbe_col = static_cast<int>(i);
        } else if (h == "patent_id") {
            id_col = static_cast<int>(i);
        } else if (auto formula = lexicon.canonical_for_label(normalize_text(h))) {
            oxide_cols.push_back(i);
            ds.oxide_formulas.push_back(*formula);
        }
    }

    CsvRow row;
    while (reader.next(row)) {
        auto cell = [&](int c) {
            return c >= 0 && static_cast<size_t>(c) < row.size() ? row[static_cast<size_t>(c)]
                                                                 : std::string();
        };
        std::vector<double> oxides;
        oxides.reserve(oxide_cols.size());
        for (size_t c : oxide_cols) oxides.push_back(c < row.size() ? coerce_numeric(row[c]) : 0.0);
        ds.oxides.push_back(std::move(oxides));
        ds.tliq.push_back(coerce_numeric(cell(tliq_col)));
        ds.nd.push_back(coerce_numeric(cell(nd_col)));
        bool any_n = false;
        for (size_t c : n_cols)
            if (c < row.size() && coerce_numeric(row[c]) != 0.0) any_n = true;
        ds.has_n.push_back(any_n);
        ds.abbe.push_back(coerce_numeric(cell(abbe_col)));
        ds.patent_ids.push_back(cell(id_col));
    }
    return ds;
}

CompareDataset merge_datasets(const std::vector<CompareDataset>& parts,
                              const std::string& label) {
    CompareDataset out;
    out.label = label;
    for (const auto& part : parts)
        for (const auto& f : part.oxide_formulas)
            if (std::find(out.oxide_formulas.begin(), out.oxide_formulas.end(), f) ==
                out.oxide_formulas.end())
                out.oxide_formulas.push_back(f);
    for (const auto& part : parts) {
        std::vector<size_t> remap(part.oxide_formulas.size());
        for (size_t i = 0; i < part.oxide_formulas.size(); ++i)
            remap[i] = static_cast<size_t>(
                std::find(out.oxide_formulas.begin(), out.oxide_formulas.end(),
                          part.oxide_formulas[i]) -
                out.oxide_formulas.begin());
        for (size_t r = 0; r < part.rows(); ++r) {
            std::vector<double> row(out.oxide_formulas.size(), 0.0);
            for (size_t i = 0; i < part.oxide_formulas.size(); ++i)
                row[remap[i]] = part.oxides[r][i];
            out.oxides.push_back(std::move(row));
            out.tliq.push_back(part.tliq[r]);
            out.nd.push_back(part.nd[r]);
            out.has_n.push_back(part.has_n[r]);
            out.abbe.push_back(part.abbe[r]);
            out.patent_ids.push_back(part.patent_ids[r]);
        }
    }
    return out;
}

std::string dedup_key(const std::vector<std::string>& formulas,
                      const std::vector<double>& values, int precision) {
    std::vector<std::pair<std::string, double>> parts;
    for (size_t i = 0; i < formulas.size() && i < values.size(); ++i) {
        double rounded = round_decimals(values[i], precision);
        if (rounded == 0.0) continue;
        parts.emplace_back(formulas[i], rounded);
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string key;
    for (const auto& [formula, value] : parts) {
        if (!key.empty()) key.push_back(';');
        key += formula;
        key.push_back(':');
        key += format_number(value);
    }
    return key;
}

std::unordered_set<std::string> key_set(const CompareDataset& ds, int precision) {
    std::unordered_set<std::string> keys;
    keys.reserve(ds.rows());
    for (const auto& row : ds.oxides) keys.insert(dedup_key(ds.oxide_formulas, row, precision));
    return keys;
}

std::vector<size_t> subtract(const CompareDataset& a, const CompareDataset& b, int precision) {
    auto b_keys = key_set(b, precision);
    std::vector<size_t> out;
    for (size_t i = 0; i < a.rows(); ++i)
        if (!b_keys.count(dedup_key(a.oxide_formulas, a.oxides[i], precision))) out.push_back(i);
    return out;
}

namespace {

enum PropertyIndex { kTotal = 0, kTliq = 1, kN = 2, kAbbe = 3 };

bool row_has(const CompareDataset& ds, size_t row, int which) {
    switch (which) {
        case kTotal: return true;
        case kTliq: return ds.tliq[row] != 0.0;
        case kN: return ds.has_n[row] || ds.nd[row] != 0.0;
        case kAbbe: return ds.abbe[row] != 0.0;
        default: return false;
    }
}

std::unordered_set<std::string> keys_with(const CompareDataset& ds, int which, int precision) {
    std::unordered_set<std::string> keys;
    for (size_t i = 0; i < ds.rows(); ++i)
        if (row_has(ds, i, which)) keys.insert(dedup_key(ds.oxide_formulas, ds.oxides[i], precision));
    return keys;
}

}  // namespace

SubsetReport subset_report(const CompareDataset& patents, const CompareDataset& ref_a,
                           const CompareDataset& ref_b, int precision) {
    SubsetReport report;
    std::array<size_t, 4> combined{};
    std::array<std::unordered_set<std::string>, 4> a_keys, b_keys, union_keys;
    for (int p = 0; p < 4; ++p) {
        a_keys[p] = keys_with(ref_a, p, precision);
        b_keys[p] = keys_with(ref_b, p, precision);
        union_keys[p] = a_keys[p];
        union_keys[p].insert(b_keys[p].begin(), b_keys[p].end());
        combined[p] = union_keys[p].size();
    }

    auto pct = [&](size_t count, int p) {
        return combined[p] == 0 ? 0.0 : 100.0 * static_cast<double>(count) /
                                            static_cast<double>(combined[p]);
    };
    auto make_row = [&](const std::string& name, const std::array<size_t, 4>& counts) {
        std::array<SubsetCell, 4> cells;
        for (int p = 0; p < 4; ++p) cells[p] = {counts[p], pct(counts[p], p)};
        report.rows.emplace_back(name, cells);
    };

    make_row(ref_a.label + "+" + ref_b.label, combined);
    std::array<size_t, 4> a_counts{}, b_counts{};
    for (int p = 0; p < 4; ++p) {
        a_counts[p] = a_keys[p].size();
        b_counts[p] = b_keys[p].size();
    }
    make_row(ref_a.label, a_counts);
    make_row(ref_b.label, b_counts);

    std::array<size_t, 4> pat{}, minus_a{}, minus_b{}, unique{};
    for (size_t i = 0; i < patents.rows(); ++i) {
        std::string key = dedup_key(patents.oxide_formulas, patents.oxides[i], precision);
        for (int p = 0; p < 4; ++p) {
            if (!row_has(patents, i, p)) continue;
            ++pat[p];
            bool in_a = a_keys[p].count(key) > 0;
            bool in_b = b_keys[p].count(key) > 0;
            if (!in_a) ++minus_a[p];
            if (!in_b) ++minus_b[p];
            if (!in_a && !in_b) ++unique[p];
        }
    }
    make_row(patents.label, pat);
    make_row(patents.label + "-" + ref_a.label, minus_a);
    make_row(patents.label + "-" + ref_b.label, minus_b);
    make_row(patents.label + "-Unique", unique);
    return report;
}

std::string SubsetReport::to_csv() const {
    std::ostringstream out;
    out << "Source,Total,Liquidus Temperature,Refractive Index,Abbe Number\n";
    for (const auto& [name, cells] : rows) {
        out << name;
        for (const auto& cell : cells) {
            char pct[32];
            std::snprintf(pct, sizeof(pct), "%.1f", cell.pct);
            out << ',' << cell.count << " (" << pct << "%)";
        }
        out << '\n';
    }
    return out.str();
}

std::vector<std::pair<std::string, double>> oxide_relative_frequency(const CompareDataset& ds) {
    std::map<std::string, size_t> counts;
    size_t total = 0;
    for (const auto& row : ds.oxides) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] > 0.0) {
                ++counts[ds.oxide_formulas[i]];
                ++total;
            }
        }
    }
    std::vector<std::pair<std::string, double>> out;
    out.reserve(counts.size());
    for (const auto& [formula, n] : counts)
        out.emplace_back(formula, static_cast<double>(n) / static_cast<double>(total));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

std::vector<double> histogram_density(const std::vector<double>& values,
                                      const std::vector<double>& bin_edges) {
    if (bin_edges.size() < 2) throw std::invalid_argument("need at least two bin edges");
    for (size_t i = 1; i < bin_edges.size(); ++i)
        if (!(bin_edges[i] > bin_edges[i - 1]))
            throw std::invalid_argument("bin edges must be strictly increasing");

    std::vector<size_t> counts(bin_edges.size() - 1, 0);
    size_t total = 0;
    for (double v : values) {
        if (!std::isfinite(v) || v < bin_edges.front() || v > bin_edges.back()) continue;
        // last bin is closed on the right
        size_t bin = counts.size() - 1;
        for (size_t i = 0; i + 1 < bin_edges.size(); ++i) {
            if (v < bin_edges[i + 1]) {
                bin = i;
                break;
            }
        }
        ++counts[bin];
        ++total;
    }
    if (total == 0) throw std::invalid_argument("no values fall inside the bin edges");
    std::vector<double> density(counts.size(), 0.0);
    for (size_t i = 0; i < counts.size(); ++i) {
        double width = bin_edges[i + 1] - bin_edges[i];
        density[i] = static_cast<double>(counts[i]) / (static_cast<double>(total) * width);
    }
    return density;
}

std::vector<double> uniform_edges(const std::vector<double>& pooled, size_t bins) {
    if (pooled.empty()) throw std::invalid_argument("no values to bin");
    double lo = pooled.front(), hi = pooled.front();
    for (double v : pooled) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == hi) hi = lo + 1.0;  // degenerate span
    std::vector<double> edges(bins + 1);
    for (size_t i = 0; i <= bins; ++i)
        edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    edges.back() = hi;
    return edges;
}

std::map<int, size_t> patents_per_year(const std::vector<std::string>& publication_dates) {
    std::map<int, size_t> counts;
    for (const auto& date : publication_dates) {
        for (size_t i = 0; i + 3 < date.size(); ++i) {
            if (std::isdigit(static_cast<unsigned char>(date[i])) &&
                std::isdigit(static_cast<unsigned char>(date[i + 1])) &&
                std::isdigit(static_cast<unsigned char>(date[i + 2])) &&
                std::isdigit(static_cast<unsigned char>(date[i + 3]))) {
                int year = std::stoi(date.substr(i, 4));
                ++counts[year];
                break;
            }
        }
    }
    return counts;
}

void export_abbe_diagram(const std::vector<CompareDataset>& datasets, const std::string& path) {
    std::vector<CsvRow> rows;
    for (const auto& ds : datasets) {
        for (size_t i = 0; i < ds.rows(); ++i) {
            if (ds.nd[i] == 0.0 || ds.abbe[i] == 0.0) continue;
            rows.push_back({format_number(ds.nd[i]), format_number(ds.abbe[i]), ds.label});
        }
    }
    write_csv_file(path, {"nD", "Abbe Number", "source"}, rows);
}

void export_oxide_freq(const std::vector<CompareDataset>& datasets, size_t top_n,
                       const std::string& path) {
    if (datasets.empty()) return;
    auto lead = oxide_relative_frequency(datasets.front());
    if (lead.size() > top_n) lead.resize(top_n);
    std::vector<CsvRow> rows;
    for (const auto& ds : datasets) {
        auto freq = oxide_relative_frequency(ds);
        std::map<std::string, double> lookup(freq.begin(), freq.end());
        for (const auto& [formula, _] : lead) {
            auto it = lookup.find(formula);
            rows.push_back({formula, format_number(it == lookup.end() ? 0.0 : it->second),
                            ds.label});
        }
    }
    write_csv_file(path, {"oxide", "relative_frequency", "source"}, rows);
}

namespace {
std::vector<double> property_values(const CompareDataset& ds, const std::string& property) {
    std::vector<double> out;
    for (size_t i = 0; i < ds.rows(); ++i) {
        double v = property == "tliq" ? ds.tliq[i] : property == "abbe" ? ds.abbe[i] : ds.nd[i];
        if (v != 0.0) out.push_back(v);
    }
    return out;
}
}  // namespace

void export_histogram(const std::vector<CompareDataset>& datasets, const std::string& property,
                      size_t bins, const std::string& path) {
    std::vector<double> pooled;
    for (const auto& ds : datasets) {
        auto vals = property_values(ds, property);
        pooled.insert(pooled.end(), vals.begin(), vals.end());
    }
    if (pooled.empty()) {
        write_csv_file(path, {"bin_left", "bin_right", "density", "source"}, {});
        return;
    }
    auto edges = uniform_edges(pooled, bins);
    std::vector<CsvRow> rows;
    for (const auto& ds : datasets) {
        auto vals = property_values(ds, property);
        if (vals.empty()) continue;
        auto density = histogram_density(vals, edges);
        for (size_t i = 0; i < density.size(); ++i)
            rows.push_back({format_number(edges[i]), format_number(edges[i + 1]),
                            format_number(density[i]), ds.label});
    }
    write_csv_file(path, {"bin_left", "bin_right", "density", "source"}, rows);
}

void export_violin(const std::vector<CompareDataset>& datasets,
                   const std::vector<std::string>& oxides, const std::string& property,
                   const std::string& path) {
    std::vector<CsvRow> rows;
    for (const auto& ds : datasets) {
        for (const auto& oxide : oxides) {
            auto it = std::find(ds.oxide_formulas.begin(), ds.oxide_formulas.end(), oxide);
            if (it == ds.oxide_formulas.end()) continue;
            size_t col = static_cast<size_t>(it - ds.oxide_formulas.begin());
            for (size_t i = 0; i < ds.rows(); ++i) {
                bool has_property = property == "tliq"
                                        ? ds.tliq[i] != 0.0
                                        : property == "abbe" ? ds.abbe[i] != 0.0
                                                             : ds.has_n[i] || ds.nd[i] != 0.0;
                if (!has_property) continue;
                double amount = ds.oxides[i][col];
                if (amount > 0.0)
                    rows.push_back({oxide, format_number(amount), ds.label});
            }
        }
    }
    write_csv_file(path, {"oxide", "amount", "source"}, rows);
}

void export_years(const std::map<int, size_t>& counts, const std::string& path) {
    std::vector<CsvRow> rows;
    for (const auto& [year, n] : counts)
        rows.push_back({std::to_string(year), std::to_string(n)});
    write_csv_file(path, {"year", "patents"}, rows);
}

}  // namespace glassmine
