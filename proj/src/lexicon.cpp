#include "glassmine/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <stdexcept>

#include "glassmine/text.hpp"

namespace glassmine {

namespace {
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Strips a pandas-style ".1"/".2" duplicate suffix.
std::string_view strip_dup_suffix(std::string_view label) {
    size_t dot = label.rfind('.');
    if (dot == std::string_view::npos || dot + 1 == label.size()) return label;
    for (size_t i = dot + 1; i < label.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(label[i]))) return label;
    return label.substr(0, dot);
}
}  // namespace

CompoundLexicon CompoundLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    CompoundLexicon lex;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto parts = split(t, ',');
        std::string canonical = trim(parts[0]);
        std::vector<std::string> aliases;
        for (size_t i = 1; i < parts.size(); ++i) {
            std::string a = trim(parts[i]);
            if (!a.empty()) aliases.push_back(a);
        }
        lex.add(canonical, aliases);
    }
    return lex;
}

CompoundLexicon CompoundLexicon::from_formulas(const std::vector<std::string>& formulas) {
    CompoundLexicon lex;
    for (const auto& f : formulas) lex.add(f, {});
    return lex;
}

void CompoundLexicon::add(const std::string& canonical, const std::vector<std::string>& aliases) {
    if (canonical.empty()) return;
    formulas_.push_back(canonical);
    auto insert_alias = [&](const std::string& surface) {
        std::string norm = normalize_text(surface);
        if (norm.empty()) return;
        bool single_token = std::all_of(norm.begin(), norm.end(), is_alnum);
        if (single_token) {
            alias_to_canonical_.emplace(norm, canonical);
        } else {
            multiword_aliases_.emplace_back(norm, canonical);
        }
    };
    insert_alias(canonical);
    for (const auto& a : aliases) insert_alias(a);
}

std::optional<std::string> CompoundLexicon::canonical_for_label(
    std::string_view normalized_label) const {
    std::string key(strip_dup_suffix(normalized_label));
    auto it = alias_to_canonical_.find(key);
    if (it != alias_to_canonical_.end()) return it->second;
    for (const auto& [alias, canonical] : multiword_aliases_)
        if (alias == key) return canonical;
    return std::nullopt;
}

std::vector<std::string> CompoundLexicon::compounds_in(std::string_view normalized_text) const {
    std::set<std::string> found;
    // tokenize on non-alphanumerics and look tokens up
    size_t i = 0;
    while (i < normalized_text.size()) {
        while (i < normalized_text.size() && !is_alnum(normalized_text[i])) ++i;
        size_t start = i;
        while (i < normalized_text.size() && is_alnum(normalized_text[i])) ++i;
        if (i > start) {
            auto it = alias_to_canonical_.find(std::string(normalized_text.substr(start, i - start)));
            if (it != alias_to_canonical_.end()) found.insert(it->second);
        }
    }
    for (const auto& [alias, canonical] : multiword_aliases_)
        if (contains_token(normalized_text, alias)) found.insert(canonical);
    return {found.begin(), found.end()};
}

bool CompoundLexicon::mentions_compound(std::string_view normalized_text) const {
    size_t i = 0;
    while (i < normalized_text.size()) {
        while (i < normalized_text.size() && !is_alnum(normalized_text[i])) ++i;
        size_t start = i;
        while (i < normalized_text.size() && is_alnum(normalized_text[i])) ++i;
        if (i > start &&
            alias_to_canonical_.count(std::string(normalized_text.substr(start, i - start))))
            return true;
    }
    for (const auto& [alias, canonical] : multiword_aliases_)
        if (contains_token(normalized_text, alias)) return true;
    return false;
}

}  // namespace glassmine
