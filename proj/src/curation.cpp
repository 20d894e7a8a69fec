#include "glassmine/curation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

#include "glassmine/io_util.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

using nlohmann::json;

CurationDictionary CurationDictionary::load(const std::string& path) {
    auto dict = from_json_text(read_file(path));
    dict.validate();
    return dict;
}

void CurationDictionary::dump(const std::string& path) const { write_file(path, to_json_text()); }

CurationDictionary CurationDictionary::from_json_text(const std::string& text) {
    json j = json::parse(text);
    CurationDictionary d;
    if (j.contains("label_map"))
        d.label_map = j["label_map"].get<std::map<std::string, std::string>>();
    if (j.contains("blacklist"))
        for (const auto& item : j["blacklist"]) d.blacklist.insert(item.get<std::string>());
    if (j.contains("patent_wavelength_map"))
        d.patent_wavelength_map =
            j["patent_wavelength_map"].get<std::map<std::string, std::string>>();
    if (j.contains("patent_unit_map"))
        d.patent_unit_map = j["patent_unit_map"].get<std::map<std::string, std::string>>();
    if (j.contains("patent_basis_map"))
        d.patent_basis_map = j["patent_basis_map"].get<std::map<std::string, std::string>>();
    return d;
}

std::string CurationDictionary::to_json_text() const {
    json j;
    j["label_map"] = label_map;
    j["blacklist"] = std::vector<std::string>(blacklist.begin(), blacklist.end());
    j["patent_wavelength_map"] = patent_wavelength_map;
    j["patent_unit_map"] = patent_unit_map;
    j["patent_basis_map"] = patent_basis_map;
    return j.dump(2) + "\n";
}

void CurationDictionary::validate() const {
    auto is_n_target = [](const std::string& t) {
        const auto& targets = n_targets();
        return std::find(targets.begin(), targets.end(), t) != targets.end();
    };
    auto is_tliq_target = [](const std::string& t) {
        const auto& targets = tliq_targets();
        return std::find(targets.begin(), targets.end(), t) != targets.end();
    };
    for (const auto& [label, target] : label_map) {
        if (blacklist.count(label))
            throw std::runtime_error("label in both label_map and blacklist: " + label);
        if (!is_n_target(target) && target != kAbbeTarget && !is_tliq_target(target))
            throw std::runtime_error("unknown label_map target: " + target + " (for " + label +
                                     ")");
    }
    for (const auto& [pub, target] : patent_wavelength_map)
        if (!is_n_target(target))
            throw std::runtime_error("patent_wavelength_map target must be a n column: " + target);
    for (const auto& [pub, target] : patent_unit_map)
        if (!is_tliq_target(target))
            throw std::runtime_error("patent_unit_map target must be a Tliq column: " + target);
    for (const auto& [pub, basis] : patent_basis_map)
        if (basis != "mol" && basis != "mass")
            throw std::runtime_error("patent_basis_map value must be mol or mass: " + basis);
}

LabelResolution classify_label(std::string_view normalized_label, const CurationDictionary& dict,
                               bool explicit_marker) {
    LabelResolution r;
    std::string key(normalized_label);
    if (dict.blacklist.count(key)) {
        r.cls = ColumnClass::FalsePositive;
        return r;
    }
    auto it = dict.label_map.find(key);
    if (it != dict.label_map.end()) {
        r.cls = ColumnClass::ExplicitUnit;
        r.target = it->second;
        return r;
    }
    if (explicit_marker) {
        r.cls = ColumnClass::ExplicitUnit;  // declared but uncurated: queue it
        return r;
    }
    r.cls = ColumnClass::Generic;
    return r;
}

bool has_wavelength_marker(std::string_view normalized_label) {
    // a number immediately followed by "nm"
    std::string s = translit_for_match(normalized_label);
    for (size_t i = 0; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) continue;
        size_t j = i;
        while (j < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.'))
            ++j;
        size_t k = j;
        while (k < s.size() && s[k] == ' ') ++k;
        if (s.compare(k, 2, "nm") == 0) return true;
        i = j;
    }
    return false;
}

bool has_temperature_marker(std::string_view normalized_label) {
    std::string s(normalized_label);
    if (s.find("°c") != std::string::npos || s.find("°f") != std::string::npos ||
        s.find("°k") != std::string::npos)
        return true;
    static const std::vector<std::string> unit_tokens = {"c", "f", "k", "celsius", "fahrenheit",
                                                         "kelvin", "degc", "degf"};
    return contains_any_token(s, unit_tokens);
}

bool mentions_abbe(std::string_view normalized_label) {
    // exact matching: transliteration would make plain "nd" look like νd
    return contains_token_exact(normalized_label, "abbe") ||
           contains_token_exact(normalized_label, "vd") ||
           contains_token_exact(normalized_label, "νd");
}

}  // namespace glassmine
