#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexisent/tweet.hpp"

namespace lexisent {

struct BoundingBox {
    double min_lat = 0.0;
    double min_lon = 0.0;
    double max_lat = 0.0;
    double max_lon = 0.0;

    /// Edges are inclusive.
    bool contains(const GeoPoint& p) const noexcept;
    bool well_ordered() const noexcept;

    /// "minlat,minlon,maxlat,maxlon". Throws Error{InvalidFilter}.
    static BoundingBox parse(std::string_view text);
};

/// What to pull from a source: a keyword or hashtag, plus an optional
/// [since, until) window and an optional bounding box.
struct QueryFilter {
    std::string keyword;
    std::optional<Timestamp> since;  // inclusive
    std::optional<Timestamp> until;  // exclusive
    std::optional<BoundingBox> bbox;

    /// Throws Error{InvalidFilter} on an empty keyword, since >= until or a
    /// reversed/out-of-range box.
    void validate() const;

    /// Case-insensitive substring match on the raw text ('#' is literal),
    /// time window, then location. Tweets without a location never match
    /// when a box is set.
    bool matches(const Tweet& tweet) const;
};

struct CorpusReadResult {
    std::vector<Tweet> tweets;
    std::size_t skipped = 0;  // malformed, non-blank lines
};

/// One JSON object per line:
///   {"id": "...", "created_at": "2022-03-01T10:00:00Z", "username": "...",
///    "text": "...", "lat": 51.5, "lon": -0.12}
/// lat/lon are optional but must appear together. Returns nullopt for a
/// malformed record.
std::optional<Tweet> parse_tweet_record(std::string_view line);

/// Reads a line-delimited corpus in file order, skipping malformed lines.
/// Throws Error{FileUnreadable}, or Error{CorpusEmpty} when the file holds
/// records but none of them parse. A file with no records at all yields an
/// empty result.
CorpusReadResult read_corpus(const std::filesystem::path& path);
CorpusReadResult read_corpus(std::istream& in, std::string_view name);

std::vector<Tweet> filter_tweets(std::span<const Tweet> tweets, const QueryFilter& filter);

/// A provider of tweets. Implementations: a corpus file and an in-memory
/// mock; a live network client would be another.
class TweetSource {
public:
    virtual ~TweetSource() = default;

    /// At most `limit` matching tweets in source order.
    virtual std::vector<Tweet> fetch(const QueryFilter& filter, std::size_t limit) = 0;
    virtual std::string describe() const = 0;
};

class CorpusSource final : public TweetSource {
public:
    explicit CorpusSource(std::filesystem::path path) : path_(std::move(path)) {}

    std::vector<Tweet> fetch(const QueryFilter& filter, std::size_t limit) override;
    std::string describe() const override;

    /// Malformed lines skipped by the most recent fetch.
    std::size_t skipped() const noexcept { return skipped_; }

private:
    std::filesystem::path path_;
    std::size_t skipped_ = 0;
};

class MockSource final : public TweetSource {
public:
    explicit MockSource(std::vector<Tweet> tweets, bool available = true)
        : tweets_(std::move(tweets)), available_(available) {}

    /// Throws Error{SourceUnavailable} when constructed unavailable.
    std::vector<Tweet> fetch(const QueryFilter& filter, std::size_t limit) override;
    std::string describe() const override { return "mock"; }

private:
    std::vector<Tweet> tweets_;
    bool available_;
};

/// Validates the filter and limit (Error{InvalidFilter} / Error{InvalidArgument}),
/// then delegates to the source.
std::vector<Tweet> source_fetch(TweetSource& source, const QueryFilter& filter, std::size_t limit);

}  // namespace lexisent
