#include "lexisent/lexicon.hpp"

#include <fstream>
#include <utility>

#include <fmt/format.h>

#include "lexisent/error.hpp"
#include "lexisent/text.hpp"

namespace lexisent {

namespace fs = std::filesystem;

std::string_view to_string(Polarity p) noexcept {
    switch (p) {
        case Polarity::Positive: return "positive";
        case Polarity::Negative: return "negative";
        case Polarity::Neutral: return "neutral";
    }
    return "neutral";
}

Wordlist load_wordlist(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in || fs::is_directory(path)) {
        throw Error(ErrorCode::FileUnreadable, fmt::format("cannot read wordlist '{}'", path.string()));
    }
    Wordlist list;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        std::string token = normalize_entry(line);
        if (token.empty() || token.front() == ';') continue;
        if (contains_space(token)) {
            ++list.rejected;
            list.warnings.push_back(
                fmt::format("{}:{}: multi-word entry '{}' ignored", path.string(), lineno, token));
            continue;
        }
        if (!list.words.insert(std::move(token)).second) ++list.duplicates;
    }
    if (in.bad()) {
        throw Error(ErrorCode::FileUnreadable, fmt::format("error while reading '{}'", path.string()));
    }
    if (list.words.empty()) {
        list.warnings.push_back(fmt::format("EmptyWordlist: '{}' has no entries", path.string()));
    }
    return list;
}

namespace {

// Removes the intersection of `a` and `b` from both, returning its size.
std::size_t drop_common(WordSet& a, WordSet& b) {
    std::vector<std::string> common;
    for (const auto& w : a) {
        if (b.contains(w)) common.push_back(w);
    }
    for (const auto& w : common) {
        a.erase(w);
        b.erase(w);
    }
    return common.size();
}

}  // namespace

Lexicon Lexicon::from_sets(WordSet positive, WordSet negative, WordSet negators) {
    Lexicon lex;
    auto& s = lex.summary_;
    s.conflicts = drop_common(positive, negative);
    if (s.conflicts > 0) {
        s.warnings.push_back(fmt::format(
            "{} token(s) listed as both positive and negative were dropped", s.conflicts));
    }
    for (auto it = negators.begin(); it != negators.end();) {
        if (positive.contains(*it) || negative.contains(*it)) {
            s.warnings.push_back(fmt::format("negator '{}' also has a polarity; dropped from negators", *it));
            ++s.negator_overlaps;
            it = negators.erase(it);
        } else {
            ++it;
        }
    }
    if (positive.empty() && negative.empty()) {
        throw Error(ErrorCode::UnusableLexicon, "lexicon has no positive or negative words");
    }
    lex.positive_ = std::move(positive);
    lex.negative_ = std::move(negative);
    lex.negators_ = std::move(negators);
    s.positive = lex.positive_.size();
    s.negative = lex.negative_.size();
    s.negators = lex.negators_.size();
    return lex;
}

Polarity Lexicon::polarity_of(std::string_view token) const {
    if (positive_.contains(token)) return Polarity::Positive;
    if (negative_.contains(token)) return Polarity::Negative;
    return Polarity::Neutral;
}

bool Lexicon::is_negator(std::string_view token) const {
    return !token.empty() && negators_.contains(token);
}

Lexicon load_lexicon(const fs::path& positive_path, const fs::path& negative_path,
                     const fs::path& negators_path) {
    Wordlist pos = load_wordlist(positive_path);
    Wordlist neg = load_wordlist(negative_path);
    Wordlist nots = load_wordlist(negators_path);

    std::vector<std::string> file_warnings;
    std::size_t duplicates = 0;
    std::size_t rejected = 0;
    for (Wordlist* w : {&pos, &neg, &nots}) {
        duplicates += w->duplicates;
        rejected += w->rejected;
        for (auto& msg : w->warnings) file_warnings.push_back(std::move(msg));
    }

    Lexicon lex = Lexicon::from_sets(std::move(pos.words), std::move(neg.words), std::move(nots.words));
    auto& s = lex.summary_;
    s.duplicates = duplicates;
    s.rejected = rejected;
    s.warnings.insert(s.warnings.begin(), file_warnings.begin(), file_warnings.end());
    return lex;
}

LexiconPaths LexiconPaths::in_directory(const fs::path& dir) {
    return {dir / "positive.txt", dir / "negative.txt", dir / "negators.txt"};
}

Lexicon load_lexicon(const LexiconPaths& paths) {
    return load_lexicon(paths.positive, paths.negative, paths.negators);
}

fs::path default_lexicon_dir() {
    std::error_code ec;
    for (const char* dir : {LEXISENT_SOURCE_LEXICON_DIR, LEXISENT_INSTALL_LEXICON_DIR}) {
        if (fs::is_directory(dir, ec)) return dir;
    }
    return {};
}

}  // namespace lexisent
