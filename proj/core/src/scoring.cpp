#include "lexisent/scoring.hpp"

#include <algorithm>
#include <thread>

namespace lexisent {

TweetScore score_tokens(const TokenSequence& tokens, const Lexicon& lexicon, std::string tweet_id) {
    TweetScore score;
    score.tweet_id = std::move(tweet_id);
    const auto& toks = tokens.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        Polarity p = lexicon.polarity_of(toks[i]);
        if (p == Polarity::Neutral) continue;
        const bool negated = i > 0 && lexicon.is_negator(toks[i - 1]);
        if (negated) p = (p == Polarity::Positive) ? Polarity::Negative : Polarity::Positive;
        auto& bucket = (p == Polarity::Positive) ? score.matched_positive : score.matched_negative;
        bucket.push_back({toks[i], negated});
    }
    score.positive_count = score.matched_positive.size();
    score.negative_count = score.matched_negative.size();
    return score;
}

TweetScore score_tweet(const Tweet& tweet, const Lexicon& lexicon, const ScoringOptions& options) {
    TokenSequence tokens = tokenize(normalize(tweet.text));
    if (options.spell_threshold) {
        for (auto& tok : tokens.tokens) {
            if (lexicon.polarity_of(tok) != Polarity::Neutral || lexicon.is_negator(tok)) continue;
            if (auto fixed = suggest_correction(tok, lexicon, *options.spell_threshold)) {
                tok = std::move(*fixed);
            }
        }
    }
    return score_tokens(tokens, lexicon, tweet.id);
}

std::vector<TweetScore> score_all(std::span<const Tweet> tweets, const Lexicon& lexicon,
                                  const ScoringOptions& options, unsigned jobs) {
    std::vector<TweetScore> scores(tweets.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tweets.size()));

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) scores[i] = score_tweet(tweets[i], lexicon, options);
    };
    if (jobs <= 1) {
        work(0, tweets.size());
        return scores;
    }
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    const std::size_t chunk = (tweets.size() + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < tweets.size(); begin += chunk) {
        workers.emplace_back(work, begin, std::min(tweets.size(), begin + chunk));
    }
    workers.clear();  // joins
    return scores;
}

}  // namespace lexisent
