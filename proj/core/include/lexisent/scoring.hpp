#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexisent/lexicon.hpp"
#include "lexisent/text.hpp"
#include "lexisent/tweet.hpp"

namespace lexisent {

struct Match {
    std::string token;
    bool negated = false;  // flipped by the preceding negator

    friend bool operator==(const Match&, const Match&) = default;
};

/// Per-tweet word counts. A negated word is filed under the opposite
/// polarity with negated=true, so the counts always equal the list sizes.
struct TweetScore {
    std::string tweet_id;
    std::size_t positive_count = 0;
    std::size_t negative_count = 0;
    std::vector<Match> matched_positive;
    std::vector<Match> matched_negative;

    friend bool operator==(const TweetScore&, const TweetScore&) = default;
};

struct ScoringOptions {
    /// Replace neutral tokens with their closest lexicon word before scoring
    /// when the similarity ratio reaches this threshold. Off when unset.
    std::optional<double> spell_threshold;
};

inline constexpr double kDefaultSpellThreshold = 0.85;

/// Scores an already-tokenized stream. For every polarized token, the token
/// directly before it decides the bucket: a negator flips it, anything else
/// leaves it. Negators and neutral tokens contribute nothing.
TweetScore score_tokens(const TokenSequence& tokens, const Lexicon& lexicon, std::string tweet_id = {});

/// normalize -> tokenize -> (optional spell correction) -> score_tokens.
TweetScore score_tweet(const Tweet& tweet, const Lexicon& lexicon, const ScoringOptions& options = {});

/// Scores every tweet, splitting the work over `jobs` threads (0 = hardware
/// concurrency). The result is in input order regardless of `jobs`.
std::vector<TweetScore> score_all(std::span<const Tweet> tweets, const Lexicon& lexicon,
                                  const ScoringOptions& options = {}, unsigned jobs = 1);

/// Ratcliff/Obershelp similarity, 2*M/T over the matching blocks, computed
/// exactly like Python's difflib.SequenceMatcher(None, a, b).ratio() for
/// inputs under 200 code units. Operates on bytes.
double similarity_ratio(std::string_view a, std::string_view b);

/// The lexicon word (any of the three lists) most similar to `token`, if its
/// ratio is at least `threshold`. Ties go to the lexicographically smallest word.
std::optional<std::string> suggest_correction(std::string_view token, const Lexicon& lexicon,
                                              double threshold);

}  // namespace lexisent
