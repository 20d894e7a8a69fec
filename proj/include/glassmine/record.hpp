// Patent record and block identifier types.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glassmine {

struct PatentRecord {
    std::string url;
    std::string title;
    std::string doc_type;
    std::string description;
    std::string application_number;
    std::string publication_number;
    std::string pdf_url;
    std::vector<std::string> inventors;
    std::string assignee;
    std::vector<std::string> dates;  // application date, publication date
    std::vector<std::string> html_tables;

    // JSON keys follow the record schema exactly:
    // url, title, type, description, application_number, publication_number,
    // pdf_url, inventors, assignee, date, html_tables.
    std::string to_json() const;
    static PatentRecord from_json(const std::string& json_text);
};

// Stable per-block identifier: lowercased publication number + block index,
// rendered "us11485676b2_b12".
struct PatentId {
    std::string publication_number;  // stored lowercase
    size_t block_index = 0;

    std::string render() const;
    // Accepts both "<pub>_b<k>" and "<pub>_block_<k>".
    static std::optional<PatentId> parse(std::string_view rendered);

    // Uppercased publication number, e.g. "US11485676B2".
    std::string publication_upper() const;

    bool operator==(const PatentId&) const = default;
};

// Publication-number prefix of a rendered id ("us11485676b2_b12" -> "us11485676b2"),
// or the input unchanged when it carries no block suffix.
std::string patent_prefix(std::string_view rendered_id);

// Canonical patent page URL reconstructed from a publication number.
std::string patent_url(std::string_view publication_number);

}  // namespace glassmine
