// Text normalization and token matching used across the pipeline.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace glassmine {

// Canonical text normalization: strips diacritics, maps unicode sub/superscript
// digits to ASCII digits, collapses whitespace runs to a single space, trims,
// and lowercases. Greek letters are lowercased but kept Greek so that labels
// like "nd" and "νd" remain distinguishable. Idempotent.
std::string normalize_text(std::string_view s);

// Matching-only transliteration: Greek letters romanized (ν→n, μ→m, ...).
// Used by keyword/pattern matching, never for stored labels.
std::string translit_for_match(std::string_view s);

// True when `token` occurs in `text` delimited by non-alphanumeric characters
// (or string edges) on both sides. Both arguments are expected normalized;
// matching is done on the transliterated forms.
bool contains_token(std::string_view text, std::string_view token);

// Same boundary rule without transliteration: "νd" matches "νd" but not "nd".
bool contains_token_exact(std::string_view text, std::string_view token);

// True when any of `tokens` matches per contains_token.
bool contains_any_token(std::string_view text, const std::vector<std::string>& tokens);

// Broad keyword/pattern rule used for property detection: patterns of four or
// more characters match as substrings ("tliq" captures "tliquidus °c"), short
// ones ("tl", "nd", "n") only as standalone tokens. Transliterated like
// contains_token.
bool matches_broad_pattern(std::string_view text, std::string_view pattern);
bool matches_any_pattern(std::string_view text, const std::vector<std::string>& patterns);

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

// Splits on a delimiter, no trimming.
std::vector<std::string> split(std::string_view s, char delim);

// Shortest round-trip decimal representation of a double ("1.8046", "673").
std::string format_number(double v);

// Round to `decimals` decimal places (half away from zero).
double round_decimals(double v, int decimals);

}  // namespace glassmine
