#pragma once

// Tweet text cleanup and whitespace tokenization.
//
// Text is treated as UTF-8. Invalid byte sequences decode to U+FFFD and are
// therefore treated as separators. "Letters" are ASCII letters plus the Latin,
// Greek, Cyrillic, Hebrew, Arabic, kana, CJK and Hangul blocks; emoji, symbols
// and punctuation are not letters.

#include <string>
#include <string_view>
#include <vector>

namespace lexisent {

/// A normalized token stream: every entry is non-empty, lowercase and
/// whitespace-free.
struct TokenSequence {
    std::vector<std::string> tokens;

    bool empty() const noexcept { return tokens.empty(); }
    std::size_t size() const noexcept { return tokens.size(); }
    friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

bool is_letter(char32_t cp) noexcept;
bool is_word_char(char32_t cp) noexcept;  // letter or ASCII digit
char32_t to_lower(char32_t cp) noexcept;
bool is_space(char32_t cp) noexcept;
bool contains_space(std::string_view text);

/// Lowercases UTF-8 text code point by code point; everything else is kept.
std::string fold_case(std::string_view text);

/// Cleans raw post text:
///  - removes URLs (tokens starting with http://, https:// or www.)
///  - removes @mentions
///  - lowercases
///  - replaces every character other than letters, digits and intra-word
///    apostrophes with a space (so '#GoodNews' keeps 'goodnews')
///  - collapses whitespace runs and trims
/// normalize(normalize(s)) == normalize(s).
std::string normalize(std::string_view text);

/// Splits on whitespace into maximal non-empty runs.
TokenSequence tokenize(std::string_view normalized_text);

/// Wordlist entry cleanup: trim surrounding whitespace and lowercase.
std::string normalize_entry(std::string_view line);

}  // namespace lexisent
