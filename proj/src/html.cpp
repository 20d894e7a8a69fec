#include "glassmine/html.hpp"

#include <cctype>
#include <cstdint>

#include "glassmine/text.hpp"

namespace glassmine::html {

namespace {

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool iequal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (lower(a[i]) != lower(b[i])) return false;
    return true;
}

// Finds the next "<tag" occurrence at or after pos where the tag name ends
// with a delimiter. Returns npos when absent.
size_t find_open_tag(std::string_view html, std::string_view tag, size_t pos) {
    while (pos < html.size()) {
        size_t lt = html.find('<', pos);
        if (lt == std::string_view::npos) return std::string_view::npos;
        size_t name_end = lt + 1 + tag.size();
        if (name_end <= html.size() && iequal(html.substr(lt + 1, tag.size()), tag)) {
            char next = name_end < html.size() ? html[name_end] : '>';
            if (next == '>' || next == ' ' || next == '\t' || next == '\n' || next == '\r' ||
                next == '/') {
                return lt;
            }
        }
        pos = lt + 1;
    }
    return std::string_view::npos;
}

size_t find_close_tag(std::string_view html, std::string_view tag, size_t pos) {
    while (pos < html.size()) {
        size_t lt = html.find("</", pos);
        if (lt == std::string_view::npos) return std::string_view::npos;
        size_t name_end = lt + 2 + tag.size();
        if (name_end <= html.size() && iequal(html.substr(lt + 2, tag.size()), tag)) {
            size_t gt = html.find('>', name_end);
            if (gt != std::string_view::npos) return lt;
        }
        pos = lt + 2;
    }
    return std::string_view::npos;
}

// Parses key="value" / key='value' / key=value attributes of one tag body.
std::string attr_value(std::string_view tag_body, std::string_view key) {
    size_t pos = 0;
    while (pos < tag_body.size()) {
        size_t k = tag_body.find(key, pos);
        if (k == std::string_view::npos) return "";
        bool left_ok = k == 0 || !std::isalnum(static_cast<unsigned char>(tag_body[k - 1]));
        size_t after = k + key.size();
        // skip whitespace then expect '='
        size_t eq = after;
        while (eq < tag_body.size() && std::isspace(static_cast<unsigned char>(tag_body[eq]))) ++eq;
        if (!left_ok || eq >= tag_body.size() || tag_body[eq] != '=') {
            pos = k + 1;
            continue;
        }
        ++eq;
        while (eq < tag_body.size() && std::isspace(static_cast<unsigned char>(tag_body[eq]))) ++eq;
        if (eq >= tag_body.size()) return "";
        char q = tag_body[eq];
        if (q == '"' || q == '\'') {
            size_t end = tag_body.find(q, eq + 1);
            if (end == std::string_view::npos) return "";
            return std::string(tag_body.substr(eq + 1, end - eq - 1));
        }
        size_t end = eq;
        while (end < tag_body.size() && !std::isspace(static_cast<unsigned char>(tag_body[end])) &&
               tag_body[end] != '>')
            ++end;
        return std::string(tag_body.substr(eq, end - eq));
    }
    return "";
}

// Tags whose removal must not split adjacent text ("SiO<sub>2</sub>").
bool is_inline_tag(std::string_view name) {
    static const char* inl[] = {"sub", "sup", "b",    "i",    "u",   "em",   "strong",
                                "span", "a",  "font", "small", "big", "s"};
    for (const char* t : inl)
        if (iequal(name, t)) return true;
    return false;
}

}  // namespace

std::vector<MetaTag> extract_meta_tags(std::string_view html) {
    std::vector<MetaTag> out;
    size_t pos = 0;
    while (true) {
        size_t lt = find_open_tag(html, "meta", pos);
        if (lt == std::string_view::npos) break;
        size_t gt = html.find('>', lt);
        if (gt == std::string_view::npos) break;
        std::string_view body = html.substr(lt, gt - lt + 1);
        MetaTag tag;
        tag.name = attr_value(body, "name");
        tag.content = decode_entities(attr_value(body, "content"));
        tag.scheme = attr_value(body, "scheme");
        if (!tag.name.empty()) out.push_back(std::move(tag));
        pos = gt + 1;
    }
    return out;
}

ElementSlices find_elements(std::string_view html, std::string_view tag) {
    ElementSlices result;
    size_t pos = 0;
    while (true) {
        size_t start = find_open_tag(html, tag, pos);
        if (start == std::string_view::npos) break;
        // walk forward balancing nested open/close pairs of the same tag
        int depth = 0;
        size_t cursor = start;
        size_t end = std::string_view::npos;
        while (cursor < html.size()) {
            size_t open = find_open_tag(html, tag, cursor);
            size_t close = find_close_tag(html, tag, cursor);
            if (close == std::string_view::npos) break;
            if (open != std::string_view::npos && open < close) {
                ++depth;
                cursor = html.find('>', open);
                if (cursor == std::string_view::npos) break;
                ++cursor;
            } else {
                --depth;
                size_t gt = html.find('>', close);
                if (gt == std::string_view::npos) break;
                cursor = gt + 1;
                if (depth == 0) {
                    end = cursor;
                    break;
                }
            }
        }
        if (end == std::string_view::npos) {
            result.ok = false;
            return result;
        }
        result.slices.emplace_back(html.substr(start, end - start));
        pos = end;
    }
    return result;
}

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '&') {
            out.push_back(text[i++]);
            continue;
        }
        size_t semi = text.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back(text[i++]);
            continue;
        }
        std::string_view ent = text.substr(i + 1, semi - i - 1);
        auto emit = [&](uint32_t cp) {
            // inline UTF-8 encode
            if (cp < 0x80) {
                out.push_back(static_cast<char>(cp));
            } else if (cp < 0x800) {
                out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else {
                out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            }
        };
        bool handled = true;
        if (!ent.empty() && ent[0] == '#') {
            uint32_t cp = 0;
            bool valid = ent.size() > 1;
            if (ent.size() > 2 && (ent[1] == 'x' || ent[1] == 'X')) {
                for (size_t k = 2; k < ent.size(); ++k) {
                    char c = lower(ent[k]);
                    if (c >= '0' && c <= '9') cp = cp * 16 + (c - '0');
                    else if (c >= 'a' && c <= 'f') cp = cp * 16 + (c - 'a' + 10);
                    else { valid = false; break; }
                }
            } else {
                for (size_t k = 1; k < ent.size(); ++k) {
                    if (ent[k] >= '0' && ent[k] <= '9') cp = cp * 10 + (ent[k] - '0');
                    else { valid = false; break; }
                }
            }
            if (valid && cp > 0) emit(cp); else handled = false;
        } else if (ent == "amp") out.push_back('&');
        else if (ent == "lt") out.push_back('<');
        else if (ent == "gt") out.push_back('>');
        else if (ent == "quot") out.push_back('"');
        else if (ent == "apos") out.push_back('\'');
        else if (ent == "nbsp") out.push_back(' ');
        else if (ent == "deg") emit(0xB0);
        else if (ent == "nu") emit(0x3BD);
        else if (ent == "mu") emit(0x3BC);
        else if (ent == "lambda") emit(0x3BB);
        else if (ent == "plusmn") emit(0xB1);
        else if (ent == "times") emit(0xD7);
        else if (ent == "middot") emit(0xB7);
        else if (ent == "ndash") emit(0x2013);
        else if (ent == "mdash") emit(0x2014);
        else handled = false;
        if (handled) {
            i = semi + 1;
        } else {
            out.push_back(text[i++]);
        }
    }
    return out;
}

std::string strip_tags(std::string_view html) {
    std::string out;
    out.reserve(html.size());
    size_t i = 0;
    while (i < html.size()) {
        if (html[i] != '<') {
            out.push_back(html[i++]);
            continue;
        }
        size_t gt = html.find('>', i);
        if (gt == std::string_view::npos) break;  // dangling '<': drop remainder
        // comments
        if (html.compare(i, 4, "<!--") == 0) {
            size_t end = html.find("-->", i);
            i = end == std::string_view::npos ? html.size() : end + 3;
            out.push_back(' ');
            continue;
        }
        size_t name_start = i + 1;
        if (name_start < html.size() && html[name_start] == '/') ++name_start;
        size_t name_end = name_start;
        while (name_end < gt && std::isalnum(static_cast<unsigned char>(html[name_end]))) ++name_end;
        std::string_view name = html.substr(name_start, name_end - name_start);
        if (!is_inline_tag(name)) out.push_back(' ');
        i = gt + 1;
    }
    return decode_entities(out);
}

std::vector<std::vector<std::string>> table_cell_grid(std::string_view table_html) {
    std::vector<std::vector<std::string>> grid;
    // inner content of the outer table
    size_t open_end = table_html.find('>');
    size_t close = table_html.rfind("</");
    if (open_end == std::string_view::npos || close == std::string_view::npos || close <= open_end)
        return grid;
    std::string_view inner = table_html.substr(open_end + 1, close - open_end - 1);

    // scan <tr> at nested-table depth 0
    size_t pos = 0;
    while (pos < inner.size()) {
        size_t tr = find_open_tag(inner, "tr", pos);
        size_t tbl = find_open_tag(inner, "table", pos);
        if (tr == std::string_view::npos) break;
        if (tbl != std::string_view::npos && tbl < tr) {
            // skip the whole nested table
            auto nested = find_elements(inner.substr(tbl), "table");
            if (!nested.ok || nested.slices.empty()) break;
            pos = tbl + nested.slices.front().size();
            continue;
        }
        size_t row_start = inner.find('>', tr);
        if (row_start == std::string_view::npos) break;
        ++row_start;
        size_t tr_close = find_close_tag(inner, "tr", row_start);
        size_t next_tr = find_open_tag(inner, "tr", row_start);
        // rows without explicit </tr> end at the next <tr>
        size_t row_end;
        if (tr_close != std::string_view::npos &&
            (next_tr == std::string_view::npos || tr_close < next_tr)) {
            row_end = tr_close;
            pos = inner.find('>', tr_close);
            pos = pos == std::string_view::npos ? inner.size() : pos + 1;
        } else if (next_tr != std::string_view::npos) {
            row_end = next_tr;
            pos = next_tr;
        } else {
            row_end = inner.size();
            pos = inner.size();
        }
        std::string_view row_html = inner.substr(row_start, row_end - row_start);

        std::vector<std::string> cells;
        size_t cpos = 0;
        while (cpos < row_html.size()) {
            size_t td = find_open_tag(row_html, "td", cpos);
            size_t th = find_open_tag(row_html, "th", cpos);
            size_t cell = std::min(td, th);
            if (cell == std::string_view::npos) break;
            std::string_view cell_tag = (cell == td) ? "td" : "th";
            size_t content_start = row_html.find('>', cell);
            if (content_start == std::string_view::npos) break;
            ++content_start;
            // cell ends at its close tag or the next cell open tag
            size_t cell_close = find_close_tag(row_html, cell_tag, content_start);
            size_t next_td = find_open_tag(row_html, "td", content_start);
            size_t next_th = find_open_tag(row_html, "th", content_start);
            size_t next_cell = std::min(next_td, next_th);
            size_t content_end;
            if (cell_close != std::string_view::npos &&
                (next_cell == std::string_view::npos || cell_close < next_cell)) {
                content_end = cell_close;
                cpos = row_html.find('>', cell_close);
                cpos = cpos == std::string_view::npos ? row_html.size() : cpos + 1;
            } else if (next_cell != std::string_view::npos) {
                content_end = next_cell;
                cpos = next_cell;
            } else {
                content_end = row_html.size();
                cpos = row_html.size();
            }
            std::string text = strip_tags(row_html.substr(content_start, content_end - content_start));
            cells.push_back(trim(text));
        }
        if (!cells.empty()) grid.push_back(std::move(cells));
    }
    return grid;
}

}  // namespace glassmine::html
