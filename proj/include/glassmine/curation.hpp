// Curation dictionary: label -> standardized-column map, blacklist, and
// per-patent wavelength/unit/basis lists, stored as one JSON document.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace glassmine {

// Standardized optics targets.
inline const std::vector<std::string>& n_targets() {
    static const std::vector<std::string> t = {"nD", "nG", "nF", "nH", "nC"};
    return t;
}
inline constexpr const char* kAbbeTarget = "Abbe Number";

// Standardized liquidus targets.
inline const std::vector<std::string>& tliq_targets() {
    static const std::vector<std::string> t = {"Tliq(°C)", "Tliq Air(°C)",
                                               "Tliq Platinum(°C)", "Tliq(°F)",
                                               "Tliq(K)"};
    return t;
}

struct CurationDictionary {
    std::map<std::string, std::string> label_map;             // normalized label -> target
    std::set<std::string> blacklist;                          // normalized labels (class iii)
    std::map<std::string, std::string> patent_wavelength_map; // UPPER pub -> n target
    std::map<std::string, std::string> patent_unit_map;       // UPPER pub -> Tliq target
    std::map<std::string, std::string> patent_basis_map;      // UPPER pub -> mol | mass

    static CurationDictionary load(const std::string& path);
    void dump(const std::string& path) const;
    static CurationDictionary from_json_text(const std::string& text);
    std::string to_json_text() const;

    // Throws when an invariant is broken (label in both map and blacklist,
    // unknown targets, bad basis values).
    void validate() const;
};

enum class ColumnClass { ExplicitUnit, Generic, FalsePositive };

// Pure classification of a candidate column label. `explicit_marker` reports
// whether the label itself declares a unit/wavelength; class-i labels that are
// not in the label_map resolve to an empty target (curation queue).
struct LabelResolution {
    ColumnClass cls = ColumnClass::Generic;
    std::string target;  // standardized column; empty if unresolved
};
LabelResolution classify_label(std::string_view normalized_label, const CurationDictionary& dict,
                               bool explicit_marker);

// Label-level unit/wavelength declarations.
bool has_wavelength_marker(std::string_view normalized_label);   // "... 486.13 nm ..."
bool has_temperature_marker(std::string_view normalized_label);  // °c, °f, (k), ...
bool mentions_abbe(std::string_view normalized_label);           // νd / vd / abbe tokens

}  // namespace glassmine
