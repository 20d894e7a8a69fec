#include "glassmine/record.hpp"

#include <cctype>

#include <json.hpp>

#include "glassmine/text.hpp"

namespace glassmine {

using nlohmann::json;

std::string PatentRecord::to_json() const {
    json j;
    j["url"] = url;
    j["title"] = title;
    j["type"] = doc_type;
    j["description"] = description;
    j["application_number"] = application_number;
    j["publication_number"] = publication_number;
    j["pdf_url"] = pdf_url;
    j["inventors"] = inventors;
    j["assignee"] = assignee;
    j["date"] = dates;
    j["html_tables"] = html_tables;
    return j.dump(2) + "\n";
}

PatentRecord PatentRecord::from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    PatentRecord r;
    r.url = j.value("url", "");
    r.title = j.value("title", "");
    r.doc_type = j.value("type", "");
    r.description = j.value("description", "");
    r.application_number = j.value("application_number", "");
    r.publication_number = j.value("publication_number", "");
    r.pdf_url = j.value("pdf_url", "");
    if (j.contains("inventors")) r.inventors = j["inventors"].get<std::vector<std::string>>();
    r.assignee = j.value("assignee", "");
    if (j.contains("date")) r.dates = j["date"].get<std::vector<std::string>>();
    if (j.contains("html_tables"))
        r.html_tables = j["html_tables"].get<std::vector<std::string>>();
    return r;
}

std::string PatentId::render() const {
    return to_lower_ascii(publication_number) + "_b" + std::to_string(block_index);
}

std::optional<PatentId> PatentId::parse(std::string_view rendered) {
    auto try_suffix = [&](std::string_view sep) -> std::optional<PatentId> {
        size_t pos = rendered.rfind(sep);
        if (pos == std::string_view::npos || pos == 0) return std::nullopt;
        std::string_view digits = rendered.substr(pos + sep.size());
        if (digits.empty()) return std::nullopt;
        size_t k = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            k = k * 10 + static_cast<size_t>(c - '0');
        }
        PatentId id;
        id.publication_number = to_lower_ascii(rendered.substr(0, pos));
        id.block_index = k;
        return id;
    };
    if (auto id = try_suffix("_block_")) return id;
    return try_suffix("_b");
}

std::string PatentId::publication_upper() const {
    std::string out = publication_number;
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::string patent_prefix(std::string_view rendered_id) {
    if (auto id = PatentId::parse(rendered_id)) return id->publication_number;
    return to_lower_ascii(rendered_id);
}

std::string patent_url(std::string_view publication_number) {
    std::string pub(publication_number);
    for (char& c : pub) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return "https://patents.google.com/patent/" + pub + "/en";
}

}  // namespace glassmine
