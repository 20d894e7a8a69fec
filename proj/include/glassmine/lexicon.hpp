// Oxide compound lexicon: canonical formulas plus an alias map over
// normalized surface forms.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace glassmine {

class CompoundLexicon {
  public:
    // File format: one compound per line, "Canonical[,alias[,alias...]]".
    // '#' starts a comment. Canonical forms keep their case; aliases are
    // normalized on load. Every canonical maps to itself.
    static CompoundLexicon load(const std::string& path);
    static CompoundLexicon from_formulas(const std::vector<std::string>& formulas);

    const std::vector<std::string>& formulas() const { return formulas_; }
    size_t size() const { return formulas_.size(); }

    // Exact membership of a normalized column label (a trailing ".N"
    // duplicate-disambiguation suffix is ignored). Returns the canonical form.
    std::optional<std::string> canonical_for_label(std::string_view normalized_label) const;

    // Distinct compounds occurring as tokens in normalized text.
    std::vector<std::string> compounds_in(std::string_view normalized_text) const;
    bool mentions_compound(std::string_view normalized_text) const;

  private:
    void add(const std::string& canonical, const std::vector<std::string>& aliases);

    std::vector<std::string> formulas_;
    std::unordered_map<std::string, std::string> alias_to_canonical_;  // single-token aliases
    std::vector<std::pair<std::string, std::string>> multiword_aliases_;
};

}  // namespace glassmine
