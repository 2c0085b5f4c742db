#pragma once

#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lexisent {

using WordSet = std::set<std::string, std::less<>>;

enum class Polarity { Positive, Negative, Neutral };

std::string_view to_string(Polarity p) noexcept;

/// One loaded wordlist file plus what was thrown away while reading it.
struct Wordlist {
    WordSet words;
    std::size_t duplicates = 0;
    std::size_t rejected = 0;           // entries containing whitespace
    std::vector<std::string> warnings;  // EmptyWordlist, rejected entries
};

/// Reads one token per line; ';' comment lines and blank lines are skipped,
/// tokens are trimmed and lowercased. Throws Error{FileUnreadable}. An empty
/// result is reported as a warning, not an error.
Wordlist load_wordlist(const std::filesystem::path& path);

struct LexiconSummary {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t negators = 0;
    std::size_t conflicts = 0;          // tokens dropped from both polarity lists
    std::size_t negator_overlaps = 0;   // negators dropped for also carrying polarity
    std::size_t duplicates = 0;
    std::size_t rejected = 0;
    std::vector<std::string> warnings;

    std::size_t total() const noexcept { return positive + negative; }
};

/// Positive, negative and negator word sets, pairwise disjoint.
/// Immutable once built, so one instance may be shared by concurrent scorers.
class Lexicon {
public:
    /// Builds from raw sets. Conflicting entries are resolved the same way
    /// as when loading from files. Throws Error{UnusableLexicon} when both
    /// polarity sets end up empty.
    static Lexicon from_sets(WordSet positive, WordSet negative, WordSet negators);

    Polarity polarity_of(std::string_view token) const;
    bool is_negator(std::string_view token) const;

    const WordSet& positive_words() const noexcept { return positive_; }
    const WordSet& negative_words() const noexcept { return negative_; }
    const WordSet& negators() const noexcept { return negators_; }
    const LexiconSummary& summary() const noexcept { return summary_; }

private:
    Lexicon() = default;

    WordSet positive_;
    WordSet negative_;
    WordSet negators_;
    LexiconSummary summary_;

    friend Lexicon load_lexicon(const std::filesystem::path&, const std::filesystem::path&,
                                const std::filesystem::path&);
};

Lexicon load_lexicon(const std::filesystem::path& positive_path,
                     const std::filesystem::path& negative_path,
                     const std::filesystem::path& negators_path);

/// Standard file names inside a lexicon directory.
struct LexiconPaths {
    std::filesystem::path positive;
    std::filesystem::path negative;
    std::filesystem::path negators;

    static LexiconPaths in_directory(const std::filesystem::path& dir);
};

Lexicon load_lexicon(const LexiconPaths& paths);

/// The bundled lexicon directory: the source tree copy when present,
/// otherwise the installed one. Empty if neither exists.
std::filesystem::path default_lexicon_dir();

}  // namespace lexisent
