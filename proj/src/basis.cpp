#include "glassmine/basis.hpp"

#include <fstream>
#include <sstream>

#include "glassmine/csv.hpp"
#include "glassmine/filter_core.hpp"
#include "glassmine/record.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

MolarMassTable MolarMassTable::load(const std::string& path, const CompoundLexicon& lexicon) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open molar mass file: " + path);
    MolarMassTable table;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ss(t);
        std::string formula;
        double mass = 0.0;
        if (!(ss >> formula >> mass) || mass <= 0.0)
            throw std::runtime_error("bad molar mass entry at " + path + ":" +
                                     std::to_string(lineno) + ": " + line);
        table.masses_[formula] = mass;
    }
    std::string missing;
    for (const auto& f : lexicon.formulas()) {
        if (!table.masses_.count(f)) missing += missing.empty() ? f : ", " + f;
    }
    if (!missing.empty())
        throw std::runtime_error("molar mass table missing lexicon oxides: " + missing);
    return table;
}

MolarMassTable MolarMassTable::from_map(std::map<std::string, double> masses) {
    MolarMassTable table;
    table.masses_ = std::move(masses);
    return table;
}

std::optional<double> MolarMassTable::mass_of(const std::string& canonical_formula) const {
    auto it = masses_.find(canonical_formula);
    if (it == masses_.end()) return std::nullopt;
    return it->second;
}

namespace {

// Shared normalize-and-round tail of both conversions.
std::optional<std::vector<double>> normalize_to_100(std::vector<double> raw) {
    double total = 0.0;
    for (double v : raw) total += v;
    if (total <= 0.0) return std::nullopt;
    for (double& v : raw) v = round_decimals(v / total * 100.0, 2);
    return raw;
}

}  // namespace

std::optional<std::vector<double>> mass_to_mol(const std::vector<double>& wt_values,
                                               const std::vector<double>& molar_masses) {
    std::vector<double> moles(wt_values.size(), 0.0);
    for (size_t i = 0; i < wt_values.size(); ++i) {
        if (wt_values[i] == 0.0) continue;
        if (i >= molar_masses.size() || molar_masses[i] <= 0.0) return std::nullopt;
        moles[i] = wt_values[i] / molar_masses[i];
    }
    return normalize_to_100(std::move(moles));
}

std::optional<std::vector<double>> mol_to_mass(const std::vector<double>& mol_values,
                                               const std::vector<double>& molar_masses) {
    std::vector<double> grams(mol_values.size(), 0.0);
    for (size_t i = 0; i < mol_values.size(); ++i) {
        if (mol_values[i] == 0.0) continue;
        if (i >= molar_masses.size() || molar_masses[i] <= 0.0) return std::nullopt;
        grams[i] = mol_values[i] * molar_masses[i];
    }
    return normalize_to_100(std::move(grams));
}

BasisReport run_basis(const std::string& input_csv, const CurationDictionary& dict,
                      const CompoundLexicon& lexicon, const MolarMassTable& masses,
                      const std::filesystem::path& out_dir, const std::string& flow_name,
                      const std::filesystem::path& audit_path,
                      const std::filesystem::path& errors_path) {
    BasisReport report;
    std::ifstream in(input_csv, std::ios::binary);
    if (!in) throw std::runtime_error("basis input not found: " + input_csv);
    CsvReader reader(in);
    CsvRow header;
    if (!reader.next(header)) throw std::runtime_error("empty basis input: " + input_csv);

    int unit_col = -1;
    int id_col = -1;
    std::vector<size_t> oxide_cols;
    std::vector<double> oxide_masses;
    for (size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "unit") {
            unit_col = static_cast<int>(i);
            continue;
        }
        if (header[i] == "patent_id") id_col = static_cast<int>(i);
        if (auto formula = lexicon.canonical_for_label(header[i])) {
            oxide_cols.push_back(i);
            oxide_masses.push_back(masses.mass_of(*formula).value_or(0.0));
        }
    }
    if (unit_col < 0) throw std::runtime_error("basis input lacks a unit column: " + input_csv);

    // the unit column is dropped from both outputs
    CsvRow out_header;
    for (size_t i = 0; i < header.size(); ++i)
        if (static_cast<int>(i) != unit_col) out_header.push_back(header[i]);

    std::ofstream mol_out(out_dir / (flow_name + "_molpct.csv"), std::ios::binary);
    std::ofstream mass_out(out_dir / (flow_name + "_wtpct.csv"), std::ios::binary);
    if (!mol_out || !mass_out)
        throw std::runtime_error("cannot write basis outputs in " + out_dir.string());
    CsvWriter mol_writer(mol_out);
    CsvWriter mass_writer(mass_out);
    mol_writer.write_row(out_header);
    mass_writer.write_row(out_header);

    std::ofstream audit(audit_path, std::ios::binary | std::ios::app);
    std::ofstream errors;  // opened lazily

    CsvRow row;
    while (reader.next(row)) {
        ++report.rows_in;
        auto cell = [&](size_t c) { return c < row.size() ? row[c] : std::string(); };
        std::string unit = cell(static_cast<size_t>(unit_col));
        std::string id = id_col >= 0 ? cell(static_cast<size_t>(id_col)) : "";
        std::string pub_upper = PatentId{patent_prefix(id), 0}.publication_upper();

        if (unit != "mol" && unit != "mass") {
            auto it = dict.patent_basis_map.find(pub_upper);
            if (it != dict.patent_basis_map.end()) {
                unit = it->second;
            } else {
                audit << patent_url(pub_upper) << " → " << unit << '\n';
                ++report.drop_unit_unresolved;
                continue;
            }
        }

        std::vector<double> values;
        values.reserve(oxide_cols.size());
        for (size_t c : oxide_cols) values.push_back(coerce_numeric(cell(c)));

        std::optional<std::vector<double>> converted =
            unit == "mol" ? mol_to_mass(values, oxide_masses) : mass_to_mol(values, oxide_masses);
        if (!converted) {
            if (!errors.is_open()) errors.open(errors_path, std::ios::binary | std::ios::app);
            errors << (id.empty() ? pub_upper : id) << " → conversion failed\n";
            ++report.drop_conversion_error;
            continue;
        }

        // rows already on the target basis pass through untouched
        auto write_variant = [&](CsvWriter& writer, bool convert) {
            CsvRow out;
            out.reserve(out_header.size());
            size_t oxide_pos = 0;
            for (size_t i = 0; i < header.size(); ++i) {
                if (static_cast<int>(i) == unit_col) continue;
                bool is_oxide =
                    oxide_pos < oxide_cols.size() && oxide_cols[oxide_pos] == i;
                if (is_oxide) {
                    out.push_back(convert ? format_number((*converted)[oxide_pos])
                                          : cell(i));
                    ++oxide_pos;
                } else {
                    out.push_back(cell(i));
                }
            }
            writer.write_row(out);
        };

        if (unit == "mol") {
            write_variant(mol_writer, false);
            write_variant(mass_writer, true);
            ++report.converted_to_mass;
        } else {
            write_variant(mass_writer, false);
            write_variant(mol_writer, true);
            ++report.converted_to_mol;
        }
        ++report.rows_out;
    }
    return report;
}

}  // namespace glassmine
