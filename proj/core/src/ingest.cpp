#include "lexisent/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "lexisent/error.hpp"
#include "lexisent/text.hpp"

namespace lexisent {

using nlohmann::json;

bool BoundingBox::contains(const GeoPoint& p) const noexcept {
    return p.latitude >= min_lat && p.latitude <= max_lat && p.longitude >= min_lon &&
           p.longitude <= max_lon;
}

bool BoundingBox::well_ordered() const noexcept {
    return GeoPoint{min_lat, min_lon}.valid() && GeoPoint{max_lat, max_lon}.valid() &&
           min_lat <= max_lat && min_lon <= max_lon;
}

BoundingBox BoundingBox::parse(std::string_view text) {
    double v[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v[i]);
        if (ec != std::errc{}) {
            throw Error(ErrorCode::InvalidFilter, fmt::format("bad bounding box '{}'", text));
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (i < 3) {
            if (pos >= text.size() || text[pos] != ',') {
                throw Error(ErrorCode::InvalidFilter,
                            fmt::format("bounding box needs minlat,minlon,maxlat,maxlon: '{}'", text));
            }
            ++pos;
        }
    }
    if (pos != text.size()) {
        throw Error(ErrorCode::InvalidFilter, fmt::format("trailing text in bounding box '{}'", text));
    }
    BoundingBox box{v[0], v[1], v[2], v[3]};
    if (!box.well_ordered()) {
        throw Error(ErrorCode::InvalidFilter, fmt::format("bounding box '{}' is not well ordered", text));
    }
    return box;
}

void QueryFilter::validate() const {
    if (keyword.empty()) throw Error(ErrorCode::InvalidFilter, "query keyword is empty");
    if (since && until && *since >= *until) {
        throw Error(ErrorCode::InvalidFilter,
                    fmt::format("--since {} is not before --until {}", format_timestamp(*since),
                                format_timestamp(*until)));
    }
    if (bbox && !bbox->well_ordered()) {
        throw Error(ErrorCode::InvalidFilter, "bounding box is not well ordered");
    }
}

bool QueryFilter::matches(const Tweet& tweet) const {
    if (since && tweet.created_at < *since) return false;
    if (until && tweet.created_at >= *until) return false;
    if (bbox && !(tweet.location && bbox->contains(*tweet.location))) return false;
    return fold_case(tweet.text).find(fold_case(keyword)) != std::string::npos;
}

std::optional<Tweet> parse_tweet_record(std::string_view line) {
    json j = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
    if (!j.is_object()) return std::nullopt;

    Tweet t;
    const auto id = j.find("id");
    if (id == j.end()) return std::nullopt;
    if (id->is_string()) {
        t.id = id->get<std::string>();
    } else if (id->is_number_integer()) {
        t.id = id->dump();
    } else {
        return std::nullopt;
    }
    if (t.id.empty()) return std::nullopt;

    const auto created = j.find("created_at");
    const auto user = j.find("username");
    const auto text = j.find("text");
    if (created == j.end() || !created->is_string() || user == j.end() || !user->is_string() ||
        text == j.end() || !text->is_string()) {
        return std::nullopt;
    }
    auto ts = parse_timestamp(created->get_ref<const std::string&>());
    if (!ts) return std::nullopt;
    t.created_at = *ts;
    t.username = user->get<std::string>();
    t.text = text->get<std::string>();

    const auto lat = j.find("lat");
    const auto lon = j.find("lon");
    const bool has_lat = lat != j.end() && !lat->is_null();
    const bool has_lon = lon != j.end() && !lon->is_null();
    if (has_lat != has_lon) return std::nullopt;
    if (has_lat) {
        if (!lat->is_number() || !lon->is_number()) return std::nullopt;
        GeoPoint p{lat->get<double>(), lon->get<double>()};
        if (!p.valid()) return std::nullopt;
        t.location = p;
    }
    return t;
}

CorpusReadResult read_corpus(std::istream& in, std::string_view name) {
    CorpusReadResult result;
    std::string line;
    std::size_t records = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        ++records;
        if (auto tweet = parse_tweet_record(line)) {
            result.tweets.push_back(std::move(*tweet));
        } else {
            ++result.skipped;
        }
    }
    if (in.bad()) throw Error(ErrorCode::FileUnreadable, fmt::format("error while reading '{}'", name));
    if (records > 0 && result.tweets.empty()) {
        throw Error(ErrorCode::CorpusEmpty,
                    fmt::format("corpus '{}' has no valid records ({} malformed)", name, result.skipped));
    }
    return result;
}

CorpusReadResult read_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in || std::filesystem::is_directory(path)) {
        throw Error(ErrorCode::FileUnreadable, fmt::format("cannot read corpus '{}'", path.string()));
    }
    return read_corpus(in, path.string());
}

std::vector<Tweet> filter_tweets(std::span<const Tweet> tweets, const QueryFilter& filter) {
    std::vector<Tweet> out;
    std::copy_if(tweets.begin(), tweets.end(), std::back_inserter(out),
                 [&](const Tweet& t) { return filter.matches(t); });
    return out;
}

namespace {

std::vector<Tweet> take_matching(std::span<const Tweet> tweets, const QueryFilter& filter,
                                 std::size_t limit) {
    std::vector<Tweet> out;
    for (const auto& t : tweets) {
        if (out.size() >= limit) break;
        if (filter.matches(t)) out.push_back(t);
    }
    return out;
}

}  // namespace

std::vector<Tweet> CorpusSource::fetch(const QueryFilter& filter, std::size_t limit) {
    CorpusReadResult corpus = read_corpus(path_);
    skipped_ = corpus.skipped;
    return take_matching(corpus.tweets, filter, limit);
}

std::string CorpusSource::describe() const { return "corpus:" + path_.string(); }

std::vector<Tweet> MockSource::fetch(const QueryFilter& filter, std::size_t limit) {
    if (!available_) throw Error(ErrorCode::SourceUnavailable, "mock source is unavailable");
    return take_matching(tweets_, filter, limit);
}

std::vector<Tweet> source_fetch(TweetSource& source, const QueryFilter& filter, std::size_t limit) {
    filter.validate();
    if (limit == 0) throw Error(ErrorCode::InvalidArgument, "limit must be positive");
    return source.fetch(filter, limit);
}

}  // namespace lexisent
