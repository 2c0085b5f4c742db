#include "lexisent/classify.hpp"

namespace lexisent {

void Tally::add(const TweetScore& score) noexcept {
    ++tweets;
    positive += score.positive_count;
    negative += score.negative_count;
}

Tally& Tally::operator+=(const Tally& other) noexcept {
    tweets += other.tweets;
    positive += other.positive;
    negative += other.negative;
    return *this;
}

AggregateResult finalize(const Tally& tally, std::string topic) {
    AggregateResult r;
    r.topic = std::move(topic);
    r.tweets_scored = tally.tweets;
    r.total_positive = tally.positive;
    r.total_negative = tally.negative;
    const std::size_t found = tally.positive + tally.negative;
    r.no_signal = found == 0;
    if (!r.no_signal) {
        const double per_word = 100.0 / static_cast<double>(found);
        r.positivity_pct = per_word * static_cast<double>(tally.positive);
        r.negativity_pct = per_word * static_cast<double>(tally.negative);
    }
    return r;
}

AggregateResult aggregate(std::span<const TweetScore> scores, std::string topic) {
    Tally t;
    for (const auto& s : scores) t.add(s);
    return finalize(t, std::move(topic));
}

}  // namespace lexisent
