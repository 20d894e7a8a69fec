#include <doctest.h>

#include <set>

#include <json.hpp>

#include "glassmine/lexicon.hpp"
#include "glassmine/record.hpp"
#include "glassmine/text.hpp"

using namespace glassmine;

TEST_CASE("shipped lexicon has at least 70 oxides and total alias map") {
    CompoundLexicon lex = CompoundLexicon::load(std::string(GLASSMINE_DATA_DIR) + "/oxides.txt");
    CHECK(lex.size() >= 70);
    for (const auto& f : lex.formulas()) {
        auto canonical = lex.canonical_for_label(normalize_text(f));
        REQUIRE(canonical.has_value());
        CHECK(*canonical == f);
    }
}

TEST_CASE("lexicon matching") {
    CompoundLexicon lex = CompoundLexicon::from_formulas({"SiO2", "Al2O3", "Na2O", "K2O", "B2O3"});
    CHECK(lex.canonical_for_label("sio2").value() == "SiO2");
    CHECK(lex.canonical_for_label(normalize_text("SiO₂")).value() == "SiO2");
    CHECK(lex.canonical_for_label("sio2.1").value() == "SiO2");  // duplicate suffix
    CHECK_FALSE(lex.canonical_for_label("sio2 (mol %)").has_value());
    CHECK(lex.mentions_compound("contains sio2 and more"));
    CHECK_FALSE(lex.mentions_compound("contains nothing relevant"));
    auto found = lex.compounds_in("sio2+b2o3+al2o3");
    CHECK(found.size() == 3);
    CHECK(lex.compounds_in("na2o + k2o (r2o)").size() == 2);
}

TEST_CASE("patent id renders and round-trips") {
    PatentId id{"us11485676b2", 12};
    CHECK(id.render() == "us11485676b2_b12");
    auto parsed = PatentId::parse("us11485676b2_b12");
    REQUIRE(parsed.has_value());
    CHECK(*parsed == id);
    // long form accepted too
    auto block_form = PatentId::parse("US11485676B2_block_12");
    REQUIRE(block_form.has_value());
    CHECK(*block_form == id);
    CHECK(id.publication_upper() == "US11485676B2");
    CHECK(patent_prefix("us11485676b2_b12") == "us11485676b2");
    CHECK(patent_url("us11485676b2") == "https://patents.google.com/patent/US11485676B2/en");
}

TEST_CASE("patent id round-trips over random values") {
    for (size_t k : {0u, 1u, 7u, 12u, 120u, 99999u}) {
        PatentId id{"ep1234567a1", k};
        auto parsed = PatentId::parse(id.render());
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
}

TEST_CASE("record JSON round trip is lossless") {
    PatentRecord r;
    r.url = "https://patents.google.com/patent/US11485676B2/en";
    r.title = "Optical glass";
    r.doc_type = "patent";
    r.description = "desc";
    r.application_number = "US 17/456,789";
    r.publication_number = "US11485676B2";
    r.pdf_url = "https://patentimages.storage.googleapis.com/x.pdf";
    r.inventors = {"A", "B"};
    r.assignee = "Co";
    r.dates = {"2021-03-02", "2022-11-01"};
    r.html_tables = {"<patent-tables><table>νd</table></patent-tables>"};
    // serialized key set is part of the record contract
    auto parsed = nlohmann::json::parse(r.to_json());
    std::set<std::string> keys;
    for (const auto& [k, v] : parsed.items()) keys.insert(k);
    CHECK(keys == std::set<std::string>{"url", "title", "type", "description",
                                        "application_number", "publication_number", "pdf_url",
                                        "inventors", "assignee", "date", "html_tables"});

    PatentRecord back = PatentRecord::from_json(r.to_json());
    CHECK(back.url == r.url);
    CHECK(back.title == r.title);
    CHECK(back.doc_type == r.doc_type);
    CHECK(back.description == r.description);
    CHECK(back.application_number == r.application_number);
    CHECK(back.publication_number == r.publication_number);
    CHECK(back.pdf_url == r.pdf_url);
    CHECK(back.inventors == r.inventors);
    CHECK(back.assignee == r.assignee);
    CHECK(back.dates == r.dates);
    CHECK(back.html_tables == r.html_tables);
}
