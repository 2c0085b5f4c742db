#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexisent/classify.hpp"
#include "lexisent/scoring.hpp"
#include "lexisent/tweet.hpp"

namespace lexisent {

inline constexpr std::string_view kCsvHeader = "date,time,username,tweet,positive_words,negative_words";

/// One line of the detail file. Matched words are joined with '|'; a word
/// that was flipped by a negator carries a trailing '!'.
struct DetailRow {
    std::string date;
    std::string time;
    std::string username;
    std::string tweet;
    std::string positive_words;
    std::string negative_words;

    friend bool operator==(const DetailRow&, const DetailRow&) = default;
};

std::string encode_matches(std::span<const Match> matches);
std::vector<Match> decode_matches(std::string_view cell);

DetailRow make_detail_row(const Tweet& tweet, const TweetScore& score);

/// Quotes the field when it contains a comma, quote, CR or LF; embedded
/// quotes are doubled.
std::string csv_escape(std::string_view field);

/// Writes the header and one row per tweet ("\n" line endings). `tweets` and
/// `scores` must be parallel (same ids, same order), otherwise
/// Error{SequenceMismatch} is thrown before anything is written. Returns the
/// number of data rows.
std::size_t write_csv(std::ostream& out, std::span<const Tweet> tweets, std::span<const TweetScore> scores);

/// As above, to a file. Throws Error{PathUnwritable}.
std::size_t write_csv(const std::filesystem::path& path, std::span<const Tweet> tweets,
                      std::span<const TweetScore> scores);

/// The short human-readable report; percentages are rounded to one decimal.
std::string render_summary(const AggregateResult& result);

}  // namespace lexisent
