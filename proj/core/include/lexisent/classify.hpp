#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "lexisent/scoring.hpp"

namespace lexisent {

/// Raw corpus totals. Tallies from disjoint partitions merge by addition, so
/// partial aggregation can run anywhere and be combined later.
struct Tally {
    std::size_t tweets = 0;
    std::size_t positive = 0;
    std::size_t negative = 0;

    void add(const TweetScore& score) noexcept;
    Tally& operator+=(const Tally& other) noexcept;
    friend bool operator==(const Tally&, const Tally&) = default;
};

struct AggregateResult {
    std::string topic;
    std::size_t tweets_scored = 0;
    std::size_t total_positive = 0;
    std::size_t total_negative = 0;
    double positivity_pct = 0.0;
    double negativity_pct = 0.0;
    bool no_signal = true;  // no sentiment words at all; both percentages are 0

    friend bool operator==(const AggregateResult&, const AggregateResult&) = default;
};

/// positivity = 100 / (P + N) * P, negativity = 100 / (P + N) * N.
AggregateResult finalize(const Tally& tally, std::string topic);

AggregateResult aggregate(std::span<const TweetScore> scores, std::string topic);

}  // namespace lexisent
