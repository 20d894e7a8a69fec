#include "glassmine/text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace glassmine {

namespace {

// Decodes one UTF-8 code point starting at s[i]; advances i. Invalid bytes are
// passed through as their raw value so normalization never throws.
uint32_t next_codepoint(std::string_view s, size_t& i) {
    unsigned char c0 = static_cast<unsigned char>(s[i]);
    if (c0 < 0x80) {
        ++i;
        return c0;
    }
    auto cont = [&](size_t k) {
        return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    if ((c0 & 0xE0) == 0xC0 && cont(1)) {
        uint32_t cp = (c0 & 0x1Fu) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
        i += 2;
        return cp;
    }
    if ((c0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        uint32_t cp = (c0 & 0x0Fu) << 12 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
        i += 3;
        return cp;
    }
    if ((c0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        uint32_t cp = (c0 & 0x07u) << 18 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                      (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
        i += 4;
        return cp;
    }
    ++i;
    return c0;
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Latin letters with diacritics -> ASCII. Lowercase targets; the caller
// lowercases ASCII separately.
const char* latin_fold(uint32_t cp) {
    switch (cp) {
        case 0xC0: case 0xC1: case 0xC2: case 0xC3: case 0xC4: case 0xC5:
        case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5: return "a";
        case 0xC6: case 0xE6: return "ae";
        case 0xC7: case 0xE7: return "c";
        case 0xC8: case 0xC9: case 0xCA: case 0xCB:
        case 0xE8: case 0xE9: case 0xEA: case 0xEB: return "e";
        case 0xCC: case 0xCD: case 0xCE: case 0xCF:
        case 0xEC: case 0xED: case 0xEE: case 0xEF: return "i";
        case 0xD0: case 0xF0: return "d";
        case 0xD1: case 0xF1: return "n";
        case 0xD2: case 0xD3: case 0xD4: case 0xD5: case 0xD6: case 0xD8:
        case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8: return "o";
        case 0xD9: case 0xDA: case 0xDB: case 0xDC:
        case 0xF9: case 0xFA: case 0xFB: case 0xFC: return "u";
        case 0xDD: case 0xFD: case 0xFF: return "y";
        case 0xDE: case 0xFE: return "th";
        case 0xDF: return "ss";
        default: break;
    }
    // Latin Extended-A: map by base-letter ranges.
    if (cp >= 0x100 && cp <= 0x17F) {
        struct Range { uint32_t lo, hi; const char* rep; };
        static const Range ranges[] = {
            {0x100, 0x105, "a"}, {0x106, 0x10D, "c"}, {0x10E, 0x111, "d"},
            {0x112, 0x11B, "e"}, {0x11C, 0x123, "g"}, {0x124, 0x127, "h"},
            {0x128, 0x131, "i"}, {0x132, 0x133, "ij"}, {0x134, 0x135, "j"},
            {0x136, 0x138, "k"}, {0x139, 0x142, "l"}, {0x143, 0x14B, "n"},
            {0x14C, 0x151, "o"}, {0x152, 0x153, "oe"}, {0x154, 0x159, "r"},
            {0x15A, 0x161, "s"}, {0x162, 0x167, "t"}, {0x168, 0x173, "u"},
            {0x174, 0x175, "w"}, {0x176, 0x178, "y"}, {0x179, 0x17E, "z"},
        };
        for (const auto& r : ranges)
            if (cp >= r.lo && cp <= r.hi) return r.rep;
    }
    return nullptr;
}

// Sub/superscript digits -> ASCII digit value, or -1.
int script_digit(uint32_t cp) {
    if (cp >= 0x2080 && cp <= 0x2089) return static_cast<int>(cp - 0x2080);  // subscripts
    if (cp >= 0x2074 && cp <= 0x2079) return static_cast<int>(cp - 0x2070);  // superscripts 4-9
    switch (cp) {
        case 0x2070: return 0;
        case 0x00B9: return 1;
        case 0x00B2: return 2;
        case 0x00B3: return 3;
        default: return -1;
    }
}

bool is_space_cp(uint32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
           cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F || cp == 0x3000;
}

// Greek capital -> Greek small (so νd and Νd normalize alike).
uint32_t greek_lower(uint32_t cp) {
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
    return cp;
}

// Greek small letter -> Latin romanization, for matching only.
const char* greek_translit(uint32_t cp) {
    switch (cp) {
        case 0x3B1: return "a";   // alpha
        case 0x3B2: return "b";   // beta
        case 0x3B3: return "g";   // gamma
        case 0x3B4: return "d";   // delta
        case 0x3B5: return "e";   // epsilon
        case 0x3B6: return "z";   // zeta
        case 0x3B7: return "e";   // eta
        case 0x3B8: return "th";  // theta
        case 0x3B9: return "i";   // iota
        case 0x3BA: return "k";   // kappa
        case 0x3BB: return "l";   // lambda
        case 0x3BC: return "m";   // mu
        case 0x3BD: return "n";   // nu
        case 0x3BE: return "x";   // xi
        case 0x3BF: return "o";   // omicron
        case 0x3C0: return "p";   // pi
        case 0x3C1: return "r";   // rho
        case 0x3C2: case 0x3C3: return "s";  // sigma
        case 0x3C4: return "t";   // tau
        case 0x3C5: return "u";   // upsilon
        case 0x3C6: return "f";   // phi
        case 0x3C7: return "x";   // chi
        case 0x3C8: return "ps";  // psi
        case 0x3C9: return "o";   // omega
        default: return nullptr;
    }
}

}  // namespace

std::string normalize_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    auto push = [&](const char* rep) {
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out += rep;
    };
    size_t i = 0;
    while (i < s.size()) {
        uint32_t cp = next_codepoint(s, i);
        if (is_space_cp(cp)) {
            pending_space = true;
            continue;
        }
        if (cp < 0x80) {
            char c = static_cast<char>(std::tolower(static_cast<unsigned char>(cp)));
            char buf[2] = {c, 0};
            push(buf);
            continue;
        }
        if (int d = script_digit(cp); d >= 0) {
            char buf[2] = {static_cast<char>('0' + d), 0};
            push(buf);
            continue;
        }
        if (const char* rep = latin_fold(cp)) {
            push(rep);
            continue;
        }
        uint32_t low = greek_lower(cp);
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        append_utf8(out, low);
    }
    return out;
}

std::string translit_for_match(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        uint32_t cp = next_codepoint(s, i);
        uint32_t low = greek_lower(cp);
        if (const char* rep = greek_translit(low)) {
            out += rep;
        } else {
            append_utf8(out, cp);
        }
    }
    return out;
}

namespace {
bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}
}  // namespace

namespace {
bool token_in(std::string_view hay, std::string_view needle) {
    if (needle.empty()) return false;
    size_t pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string_view::npos) {
        bool left_ok = pos == 0 || !is_word_char(hay[pos - 1]);
        size_t end = pos + needle.size();
        bool right_ok = end == hay.size() || !is_word_char(hay[end]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}
}  // namespace

bool contains_token(std::string_view text, std::string_view token) {
    return token_in(translit_for_match(text), translit_for_match(token));
}

bool contains_token_exact(std::string_view text, std::string_view token) {
    return token_in(text, token);
}

bool contains_any_token(std::string_view text, const std::vector<std::string>& tokens) {
    for (const auto& t : tokens)
        if (contains_token(text, t)) return true;
    return false;
}

bool matches_broad_pattern(std::string_view text, std::string_view pattern) {
    if (pattern.size() >= 4) {
        std::string hay = translit_for_match(text);
        std::string needle = translit_for_match(pattern);
        return hay.find(needle) != std::string::npos;
    }
    return contains_token(text, pattern);
}

bool matches_any_pattern(std::string_view text, const std::vector<std::string>& patterns) {
    for (const auto& p : patterns)
        if (matches_broad_pattern(text, p)) return true;
    return false;
}

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r\n\f\v");
    if (a == std::string_view::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n\f\v");
    return std::string(s.substr(a, b - a + 1));
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string format_number(double v) {
    if (v == 0.0) return "0";  // normalizes -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double round_decimals(double v, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

}  // namespace glassmine
