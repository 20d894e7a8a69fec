// Composition-basis resolution and mol%/wt% conversion with renormalization.
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glassmine/curation.hpp"
#include "glassmine/lexicon.hpp"

namespace glassmine {

class MolarMassTable {
  public:
    // File format: "Formula mass" per line ('#' comments). Throws when any
    // lexicon oxide is missing, listing them, or when a mass is not positive.
    static MolarMassTable load(const std::string& path, const CompoundLexicon& lexicon);
    static MolarMassTable from_map(std::map<std::string, double> masses);

    std::optional<double> mass_of(const std::string& canonical_formula) const;
    size_t size() const { return masses_.size(); }

  private:
    std::map<std::string, double> masses_;
};

// Row conversions over parallel (values, molar_masses) arrays. Zero components
// stay zero; output normalized to sum 100 and rounded to two decimals.
// nullopt when a non-zero component has no molar mass or the row sums to zero.
std::optional<std::vector<double>> mass_to_mol(const std::vector<double>& wt_values,
                                               const std::vector<double>& molar_masses);
std::optional<std::vector<double>> mol_to_mass(const std::vector<double>& mol_values,
                                               const std::vector<double>& molar_masses);

struct BasisReport {
    size_t rows_in = 0;
    size_t rows_out = 0;
    size_t drop_unit_unresolved = 0;  // audited
    size_t drop_conversion_error = 0;
    size_t converted_to_mol = 0;
    size_t converted_to_mass = 0;
};

// Resolves uncertain units via the curated patent lists (uncertain rows go to
// the audit file and are excluded), then writes mirrored
// <flow>_molpct.csv / <flow>_wtpct.csv without the unit column. Oxide cells of
// rows already on the target basis and all property cells pass through
// byte-identical.
BasisReport run_basis(const std::string& input_csv, const CurationDictionary& dict,
                      const CompoundLexicon& lexicon, const MolarMassTable& masses,
                      const std::filesystem::path& out_dir, const std::string& flow_name,
                      const std::filesystem::path& audit_path,
                      const std::filesystem::path& errors_path);

}  // namespace glassmine
