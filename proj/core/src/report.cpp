#include "lexisent/report.hpp"

#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "lexisent/error.hpp"

namespace lexisent {

std::string encode_matches(std::span<const Match> matches) {
    std::string out;
    for (const auto& m : matches) {
        if (!out.empty()) out.push_back('|');
        out += m.token;
        if (m.negated) out.push_back('!');
    }
    return out;
}

std::vector<Match> decode_matches(std::string_view cell) {
    std::vector<Match> out;
    if (cell.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = cell.find('|', start);
        std::string_view item = cell.substr(start, bar == std::string_view::npos ? cell.npos : bar - start);
        Match m;
        if (!item.empty() && item.back() == '!') {
            m.negated = true;
            item.remove_suffix(1);
        }
        m.token = std::string(item);
        out.push_back(std::move(m));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return out;
}

DetailRow make_detail_row(const Tweet& tweet, const TweetScore& score) {
    return {format_date(tweet.created_at), format_time(tweet.created_at), tweet.username, tweet.text,
            encode_matches(score.matched_positive), encode_matches(score.matched_negative)};
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

namespace {

void check_parallel(std::span<const Tweet> tweets, std::span<const TweetScore> scores) {
    if (tweets.size() != scores.size()) {
        throw Error(ErrorCode::SequenceMismatch,
                    fmt::format("{} tweets but {} scores", tweets.size(), scores.size()));
    }
    for (std::size_t i = 0; i < tweets.size(); ++i) {
        if (tweets[i].id != scores[i].tweet_id) {
            throw Error(ErrorCode::SequenceMismatch,
                        fmt::format("row {}: tweet id '{}' does not match score id '{}'", i,
                                    tweets[i].id, scores[i].tweet_id));
        }
    }
}

}  // namespace

std::size_t write_csv(std::ostream& out, std::span<const Tweet> tweets, std::span<const TweetScore> scores) {
    check_parallel(tweets, scores);
    out << kCsvHeader << '\n';
    for (std::size_t i = 0; i < tweets.size(); ++i) {
        const DetailRow row = make_detail_row(tweets[i], scores[i]);
        out << csv_escape(row.date) << ',' << csv_escape(row.time) << ',' << csv_escape(row.username)
            << ',' << csv_escape(row.tweet) << ',' << csv_escape(row.positive_words) << ','
            << csv_escape(row.negative_words) << '\n';
    }
    return tweets.size();
}

std::size_t write_csv(const std::filesystem::path& path, std::span<const Tweet> tweets,
                      std::span<const TweetScore> scores) {
    check_parallel(tweets, scores);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::PathUnwritable, fmt::format("cannot write '{}'", path.string()));
    const std::size_t rows = write_csv(out, tweets, scores);
    out.flush();
    if (!out) throw Error(ErrorCode::PathUnwritable, fmt::format("error while writing '{}'", path.string()));
    return rows;
}

std::string render_summary(const AggregateResult& r) {
    std::string out = fmt::format(
        "Topic: {}\n"
        "Tweets scored: {}\n"
        "Positive words found: {}\n"
        "Negative words found: {}\n"
        "Positivity: {:.1f}%\n"
        "Negativity: {:.1f}%\n",
        r.topic, r.tweets_scored, r.total_positive, r.total_negative, r.positivity_pct,
        r.negativity_pct);
    if (r.no_signal) out += "No sentiment words found.\n";
    return out;
}

}  // namespace lexisent
