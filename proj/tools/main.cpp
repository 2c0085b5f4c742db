// lexisent: lexicon-based sentiment summary of a tweet corpus.
//
//   lexisent classify --query covid --corpus tweets.jsonl [--out-csv detail.csv]
//   lexisent lexicon-check [--lexicon-dir DIR]

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lexisent/app.hpp"
#include "lexisent/lexicon.hpp"
#include "lexisent/tweet.hpp"

namespace {

struct LexiconFlags {
    std::string dir;
    std::string positive;
    std::string negative;
    std::string negators;

    void attach(CLI::App& cmd) {
        cmd.add_option("--lexicon-dir", dir,
                       "Directory with positive.txt, negative.txt and negators.txt (default: bundled)");
        cmd.add_option("--positive", positive, "Positive wordlist (overrides --lexicon-dir)");
        cmd.add_option("--negative", negative, "Negative wordlist (overrides --lexicon-dir)");
        cmd.add_option("--negators", negators, "Negator wordlist (overrides --lexicon-dir)");
    }

    lexisent::LexiconPaths resolve() const {
        std::filesystem::path base = dir.empty() ? lexisent::default_lexicon_dir() : std::filesystem::path(dir);
        auto paths = lexisent::LexiconPaths::in_directory(base);
        if (!positive.empty()) paths.positive = positive;
        if (!negative.empty()) paths.negative = negative;
        if (!negators.empty()) paths.negators = negators;
        return paths;
    }
};

lexisent::Timestamp to_timestamp(const std::string& text, const char* flag) {
    if (auto t = lexisent::parse_timestamp(text)) return *t;
    throw CLI::ValidationError(flag, "expected an ISO-8601 date or time, got '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicon-based sentiment summary for short social-media posts"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "Score tweets matching a query and print a summary");
    std::string query;
    std::string source = "corpus";
    std::string corpus;
    std::string since;
    std::string until;
    std::string bbox;
    std::size_t limit = lexisent::kDefaultLimit;
    bool spell = false;
    double spell_threshold = lexisent::kDefaultSpellThreshold;
    std::string out_csv;
    unsigned jobs = 1;
    LexiconFlags classify_lexicon;

    classify->add_option("--query", query, "Keyword, phrase or hashtag to search for")->required();
    classify->add_option("--source", source, "Tweet source")->check(CLI::IsMember({"corpus"}));
    classify->add_option("--corpus", corpus, "Line-delimited JSON corpus")->required();
    classify->add_option("--since", since, "Keep tweets at or after this instant (ISO-8601, UTC)");
    classify->add_option("--until", until, "Keep tweets before this instant (ISO-8601, UTC)");
    classify->add_option("--bbox", bbox, "Keep tweets located inside minlat,minlon,maxlat,maxlon");
    classify->add_option("--limit", limit, "Maximum number of tweets to score")->capture_default_str();
    classify->add_flag("--spell-correct", spell, "Map unknown words to close lexicon words before scoring");
    classify->add_option("--spell-threshold", spell_threshold, "Minimum similarity ratio for a correction")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    classify->add_option("--out-csv", out_csv, "Write per-tweet detail rows to this CSV file");
    classify->add_option("--jobs", jobs, "Scoring threads (0 = all cores)")->capture_default_str();
    classify_lexicon.attach(*classify);

    auto* check = app.add_subcommand("lexicon-check", "Load the wordlists and print their sizes");
    LexiconFlags check_lexicon;
    check_lexicon.attach(*check);

    try {
        app.parse(argc, argv);

        if (*classify) {
            lexisent::RunConfig config;
            config.filter.keyword = query;
            if (!since.empty()) config.filter.since = to_timestamp(since, "--since");
            if (!until.empty()) config.filter.until = to_timestamp(until, "--until");
            if (!bbox.empty()) config.filter.bbox = lexisent::BoundingBox::parse(bbox);
            config.corpus = corpus;
            config.lexicon = classify_lexicon.resolve();
            config.limit = limit;
            if (spell) config.scoring.spell_threshold = spell_threshold;
            if (!out_csv.empty()) config.out_csv = out_csv;
            config.jobs = jobs;
            return lexisent::run_classify(config, std::cout, std::cerr);
        }
        return lexisent::run_lexicon_check(check_lexicon.resolve(), std::cout, std::cerr);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : lexisent::kExitUsage;
    } catch (const lexisent::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return lexisent::exit_code_for(e.code());
    }
}
