#include "lexisent/text.hpp"

#include <array>

namespace lexisent {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

std::u32string decode_utf8(std::string_view in) {
    std::u32string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        const auto b0 = static_cast<unsigned char>(in[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int extra = 0;
        char32_t cp = 0;
        char32_t min = 0;
        if ((b0 & 0xE0) == 0xC0) {
            extra = 1; cp = b0 & 0x1F; min = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            extra = 2; cp = b0 & 0x0F; min = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            extra = 3; cp = b0 & 0x07; min = 0x10000;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + extra >= in.size()) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (int k = 1; k <= extra; ++k) {
            const auto b = static_cast<unsigned char>(in[i + k]);
            if ((b & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (b & 0x3F);
        }
        if (!ok || cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
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

}  // namespace

bool is_space(char32_t cp) noexcept {
    switch (cp) {
        case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
        case 0x1C: case 0x1D: case 0x1E: case 0x1F:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool contains_space(std::string_view text) {
    for (char32_t cp : decode_utf8(text)) {
        if (is_space(cp)) return true;
    }
    return false;
}

namespace {

bool is_ascii_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

bool in(char32_t cp, char32_t lo, char32_t hi) noexcept { return cp >= lo && cp <= hi; }

// Case-insensitive ASCII prefix match of `prefix` at cps[pos].
bool starts_with_ci(const std::u32string& cps, std::size_t pos, std::string_view prefix) {
    if (cps.size() - pos < prefix.size()) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        if (to_lower(cps[pos + k]) != static_cast<char32_t>(prefix[k])) return false;
    }
    return true;
}

bool word_char_before(const std::u32string& cps, std::size_t pos) {
    return pos > 0 && is_word_char(cps[pos - 1]);
}

std::u32string strip_urls(const std::u32string& cps) {
    static constexpr std::array<std::string_view, 3> kPrefixes{"http://", "https://", "www."};
    std::u32string out;
    out.reserve(cps.size());
    std::size_t i = 0;
    while (i < cps.size()) {
        bool url = false;
        if (!word_char_before(cps, i)) {
            for (auto p : kPrefixes) {
                if (starts_with_ci(cps, i, p)) {
                    url = true;
                    break;
                }
            }
        }
        if (!url) {
            out.push_back(cps[i++]);
            continue;
        }
        while (i < cps.size() && !is_space(cps[i])) ++i;
        out.push_back(U' ');
    }
    return out;
}

std::u32string strip_mentions(const std::u32string& cps) {
    std::u32string out;
    out.reserve(cps.size());
    std::size_t i = 0;
    while (i < cps.size()) {
        if (cps[i] != U'@' || word_char_before(cps, i)) {
            out.push_back(cps[i++]);
            continue;
        }
        ++i;
        while (i < cps.size() && (is_word_char(cps[i]) || cps[i] == U'_')) ++i;
        out.push_back(U' ');
    }
    return out;
}

}  // namespace

bool is_letter(char32_t cp) noexcept {
    if (cp < 0x80) return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
    if (in(cp, 0xC0, 0x24F)) return cp != 0xD7 && cp != 0xF7;
    return (in(cp, 0x370, 0x3FF) && cp != 0x37E && cp != 0x387)  // Greek
        || in(cp, 0x400, 0x52F)                                // Cyrillic
        || in(cp, 0x5D0, 0x5EA)                                // Hebrew
        || in(cp, 0x620, 0x64A)                                // Arabic
        || in(cp, 0x1E00, 0x1EFF)                              // Latin Extended Additional
        || (in(cp, 0x3041, 0x30FF) && cp != 0x30FB)            // kana
        || in(cp, 0x4E00, 0x9FFF)                              // CJK unified
        || in(cp, 0xAC00, 0xD7A3);                             // Hangul
}

bool is_word_char(char32_t cp) noexcept {
    return (cp >= U'0' && cp <= U'9') || is_letter(cp);
}

char32_t to_lower(char32_t cp) noexcept {
    if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 0x20 : cp;
    if (in(cp, 0xC0, 0xDE)) return cp == 0xD7 ? cp : cp + 0x20;
    if (cp < 0x100) return cp;
    // Latin Extended-A: alternating upper/lower pairs with two phase shifts.
    if (in(cp, 0x100, 0x12F) || in(cp, 0x132, 0x137) || in(cp, 0x14A, 0x177)) {
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if (in(cp, 0x139, 0x148) || in(cp, 0x179, 0x17E)) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x130) return U'i';
    if (cp == 0x178) return 0xFF;
    // Greek
    if (in(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 0x20;
    if (cp == 0x386) return 0x3AC;
    if (in(cp, 0x388, 0x38A)) return cp + 0x25;
    if (cp == 0x38C) return 0x3CC;
    if (in(cp, 0x38E, 0x38F)) return cp + 0x3F;
    // Cyrillic
    if (in(cp, 0x410, 0x42F)) return cp + 0x20;
    if (in(cp, 0x400, 0x40F)) return cp + 0x50;
    if (in(cp, 0x460, 0x481) || in(cp, 0x48A, 0x4BF) || in(cp, 0x4D0, 0x52F)) {
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if (cp == 0x4C0) return 0x4CF;
    if (in(cp, 0x4C1, 0x4CE)) return (cp % 2 == 1) ? cp + 1 : cp;
    // Latin Extended Additional
    if (cp == 0x1E9E) return 0xDF;
    if (in(cp, 0x1E00, 0x1E95) || in(cp, 0x1EA0, 0x1EFF)) return (cp % 2 == 0) ? cp + 1 : cp;
    return cp;
}

std::string fold_case(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : decode_utf8(text)) append_utf8(out, to_lower(cp));
    return out;
}

std::string normalize(std::string_view text) {
    std::u32string cps = strip_mentions(strip_urls(decode_utf8(text)));
    for (auto& cp : cps) {
        if (cp == 0x2019) cp = U'\'';
    }

    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const char32_t cp = cps[i];
        const bool keep = is_word_char(cp) ||
                          (cp == U'\'' && word_char_before(cps, i) && i + 1 < cps.size() &&
                           is_word_char(cps[i + 1]));
        if (!keep) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        append_utf8(out, to_lower(cp));
    }
    return out;
}

TokenSequence tokenize(std::string_view normalized_text) {
    TokenSequence seq;
    std::size_t i = 0;
    while (i < normalized_text.size()) {
        while (i < normalized_text.size() && is_ascii_space(normalized_text[i])) ++i;
        const std::size_t start = i;
        while (i < normalized_text.size() && !is_ascii_space(normalized_text[i])) ++i;
        if (i > start) seq.tokens.emplace_back(normalized_text.substr(start, i - start));
    }
    return seq;
}

std::string normalize_entry(std::string_view line) {
    while (!line.empty() && is_ascii_space(line.front())) line.remove_prefix(1);
    while (!line.empty() && is_ascii_space(line.back())) line.remove_suffix(1);
    return fold_case(line);
}

}  // namespace lexisent
