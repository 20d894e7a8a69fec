// Lightweight HTML helpers for patent pages. No DOM: verbatim element slicing,
// meta-tag scanning, and table cell-grid extraction, which is all the
// heuristics downstream need.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace glassmine::html {

struct MetaTag {
    std::string name;
    std::string content;
    std::string scheme;
};

// All <meta ...> tags in document order.
std::vector<MetaTag> extract_meta_tags(std::string_view html);

// Verbatim slices of top-level <tag>...</tag> elements, document order.
// Nested occurrences of the same tag stay inside their enclosing slice.
// Unbalanced markup for `tag` yields an empty result with ok=false.
struct ElementSlices {
    std::vector<std::string> slices;
    bool ok = true;
};
ElementSlices find_elements(std::string_view html, std::string_view tag);

// HTML entity decoding for the entities that actually occur in patent tables.
std::string decode_entities(std::string_view text);

// Text content: inline tags (sub/sup/b/i/span/...) removed without a
// separator so "SiO<sub>2</sub>" stays "SiO2"; structural tags become spaces.
std::string strip_tags(std::string_view html);

// Rows of cell text for one <table> element. Rows of nested tables are not
// lifted into the outer grid; their text stays inside the enclosing cell.
std::vector<std::vector<std::string>> table_cell_grid(std::string_view table_html);

}  // namespace glassmine::html
