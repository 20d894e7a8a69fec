#include <doctest.h>

#include <filesystem>

#include "glassmine/csv.hpp"
#include "glassmine/html.hpp"
#include "glassmine/ingest.hpp"
#include "glassmine/io_util.hpp"
#include "glassmine/tabular.hpp"
#include "glassmine/text.hpp"

using namespace glassmine;

namespace {
CompoundLexicon test_lexicon() {
    return CompoundLexicon::from_formulas({"SiO2", "Al2O3", "Na2O", "B2O3", "P2O5", "Nb2O5",
                                           "BaO", "Bi2O3", "TiO2", "K2O", "SrO", "CaO", "MgO",
                                           "CuO"});
}
}  // namespace

TEST_CASE("unit label aggregation over fragments") {
    CHECK(detect_unit_label({"<table>x (mol%)</table>"}) == UnitLabel::Mol);
    CHECK(detect_unit_label({"<table>wt% basis</table>", "<table>also mol%</table>"}) ==
          UnitLabel::Both);
    CHECK(detect_unit_label({"<table>just numbers</table>"}) == UnitLabel::None);
    CHECK(detect_unit_label({"<table>weight % listed</table>"}) == UnitLabel::Mass);
    // pure function: same fragments, same label
    std::vector<std::string> frags = {"<table>mol ratio</table>"};
    CHECK(detect_unit_label(frags) == detect_unit_label(frags));
}

TEST_CASE("split_blocks") {
    std::string three = "<x><table>1</table><table>2</table><table>3</table></x>";
    auto split = split_blocks(three);
    REQUIRE(split.ok);
    CHECK(split.blocks.size() == 3);

    std::string one = "<table><tr><td>only</td></tr></table>";
    auto single = split_blocks(one);
    REQUIRE(single.ok);
    REQUIRE(single.blocks.size() == 1);
    CHECK(single.blocks[0] == one);

    // nested tables stay inside the outer block
    std::string nested = "<table id=o><tr><td><table id=i><tr><td>x</td></tr></table>"
                         "</td></tr></table>";
    auto n = split_blocks(nested);
    REQUIRE(n.ok);
    REQUIRE(n.blocks.size() == 1);
    CHECK(n.blocks[0].find("id=i") != std::string::npos);

    CHECK_FALSE(split_blocks("<table><tr>unclosed").ok);
}

TEST_CASE("detect_header accepts the consolidated-table example header") {
    // header row straight out of the worked example: compounds, n, Tliq, νd
    std::vector<std::vector<std::string>> grid = {
        {"Nb2O5", "P2O5", "Na2O", "BaO", "Bi2O3", "TiO2", "K2O", "SrO", "n", "Tliq (°C)",
         "νd"},
        {"35.9", "22.1", "1.6", "10.0", "8.3", "15.0", "5.0", "2.1", "1.950", "673", "18.6"},
    };
    auto det = detect_header(grid, test_lexicon(), HeuristicConfig{});
    REQUIRE(det.accepted);
    CHECK(det.header_index == 0);
}

TEST_CASE("detect_header reject reasons") {
    HeuristicConfig cfg;
    auto lex = test_lexicon();

    std::vector<std::vector<std::string>> one_compound = {{"SiO2", "value"}, {"1", "2"}};
    auto r1 = detect_header(one_compound, lex, cfg);
    CHECK_FALSE(r1.accepted);
    CHECK(r1.reject == HeaderReject::TooFewCompounds);

    std::vector<std::vector<std::string>> no_keyword = {{"SiO2", "Al2O3"}, {"1", "2"}};
    auto r2 = detect_header(no_keyword, lex, cfg);
    CHECK_FALSE(r2.accepted);
    CHECK(r2.reject == HeaderReject::NoPropertyKeyword);

    std::vector<std::vector<std::string>> wide(1);
    for (int i = 0; i < 70; ++i) wide[0].push_back(i == 0 ? "SiO2" : i == 1 ? "Al2O3" : "c");
    auto r3 = detect_header(wide, lex, cfg);
    CHECK_FALSE(r3.accepted);
    CHECK(r3.reject == HeaderReject::WidthExceeded);
}

TEST_CASE("detect_header is order-independent across blocks") {
    auto lex = test_lexicon();
    std::vector<std::vector<std::string>> a = {{"noise"}, {"SiO2", "Na2O", "nd"}, {"1", "2", "3"}};
    auto first = detect_header(a, lex, HeuristicConfig{});
    auto again = detect_header(a, lex, HeuristicConfig{});
    CHECK(first.accepted == again.accepted);
    CHECK(first.header_index == again.header_index);
    CHECK(first.header_index == 1);
}

TEST_CASE("block_to_table pads ragged rows") {
    std::vector<std::vector<std::string>> grid = {
        {"SiO2", "Na2O", "nd"},
        {"50", "50"},          // short row padded
        {"60", "40", "1.5", "extra"},  // long row truncated
    };
    PatentId id{"us1", 0};
    ColumnarTable t = block_to_table(grid, 0, id);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0] == std::vector<std::string>{"50", "50", ""});
    CHECK(t.rows[1] == std::vector<std::string>{"60", "40", "1.5"});
    for (const auto& row : t.rows) CHECK(row.size() == t.labels.size());

    // empty body under a valid header
    std::vector<std::vector<std::string>> header_only = {{"SiO2", "Na2O", "nd"}};
    CHECK(block_to_table(header_only, 0, id).rows.empty());
}

TEST_CASE("filter_relevant") {
    auto lex = test_lexicon();
    PatentRecord with;
    with.html_tables = {"<table><td>SiO2</td></table>"};
    CHECK(filter_relevant(with, lex));

    PatentRecord alias;
    alias.html_tables = {"<table><td>SiO₂</td></table>"};
    CHECK(filter_relevant(alias, lex));

    PatentRecord without;
    without.html_tables = {"<table><td>Fe Cr Ni</td></table>"};
    CHECK_FALSE(filter_relevant(without, lex));
}

TEST_CASE("block csv materialization disambiguates duplicate labels") {
    ColumnarTable t;
    t.labels = {"sio2", "sio2", "nd"};
    t.rows = {{"1", "2", "1.5"}};
    t.source_id = {"us1", 3};
    auto labels = csv_labels_for(t);
    CHECK(labels == std::vector<std::string>{"sio2", "sio2.1", "nd", "patent_id"});

    auto path = std::filesystem::temp_directory_path() / "glassmine_block.csv";
    write_block_csv(t, path.string());
    auto file = read_csv_file(path.string());
    CHECK(file.header == labels);
    REQUIRE(file.rows.size() == 1);
    CHECK(file.rows[0].back() == "us1_b3");
}

TEST_CASE("golden block extraction from the fixture patent") {
    std::string html = read_file(std::string(GLASSMINE_FIXTURES_DIR) +
                                 "/patents/us11485676b2.html");
    auto sections = extract_table_sections(html);
    REQUIRE(sections.size() == 2);

    CompoundLexicon lex =
        CompoundLexicon::load(std::string(GLASSMINE_DATA_DIR) + "/oxides.txt");
    HeuristicConfig cfg;
    size_t block_index = 0;
    std::vector<ColumnarTable> accepted;
    for (const auto& fragment : sections) {
        auto split = split_blocks(fragment);
        REQUIRE(split.ok);
        for (const auto& block : split.blocks) {
            PatentId id{"us11485676b2", block_index++};
            auto grid = html::table_cell_grid(block);
            auto det = detect_header(grid, lex, cfg);
            if (det.accepted) accepted.push_back(block_to_table(grid, det.header_index, id));
        }
    }
    CHECK(block_index == 13);
    REQUIRE(accepted.size() == 1);
    const ColumnarTable& t = accepted.front();
    CHECK(t.source_id.render() == "us11485676b2_b12");
    CHECK(t.labels.size() == 11);
    CHECK(t.rows.size() == 3);
    CHECK(t.labels[0] == "nb2o5");
    CHECK(t.labels[9] == "tliq (°c)");
    CHECK(t.labels[10] == "νd");
    CHECK(t.rows[0][0] == "35.9");
    CHECK(t.rows[0][8] == "1.950");
    CHECK(t.rows[2][9] == "702");
}
