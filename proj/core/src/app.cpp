#include "lexisent/app.hpp"

#include <unistd.h>

#include <exception>
#include <ostream>

#include <fmt/format.h>

#include "lexisent/classify.hpp"
#include "lexisent/report.hpp"

namespace lexisent {

namespace fs = std::filesystem;

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FileUnreadable: return kExitFileUnreadable;
        case ErrorCode::UnusableLexicon: return kExitUnusableLexicon;
        case ErrorCode::CorpusEmpty: return kExitCorpusEmpty;
        case ErrorCode::SourceUnavailable: return kExitSourceUnavailable;
        case ErrorCode::PathUnwritable: return kExitPathUnwritable;
        case ErrorCode::SequenceMismatch: return kExitSequenceMismatch;
        case ErrorCode::InvalidFilter:
        case ErrorCode::InvalidArgument: return kExitUsage;
    }
    return kExitInternal;
}

namespace {

void require_readable_file(const fs::path& path, std::string_view what) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec) || ::access(path.c_str(), R_OK) != 0) {
        throw Error(ErrorCode::FileUnreadable, fmt::format("cannot read {} '{}'", what, path.string()));
    }
}

void require_writable_target(const fs::path& path) {
    std::error_code ec;
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    if (fs::is_directory(path, ec)) {
        throw Error(ErrorCode::PathUnwritable, fmt::format("output '{}' is a directory", path.string()));
    }
    if (!fs::is_directory(dir, ec) || ::access(dir.c_str(), W_OK) != 0 ||
        (fs::exists(path, ec) && ::access(path.c_str(), W_OK) != 0)) {
        throw Error(ErrorCode::PathUnwritable, fmt::format("cannot write '{}'", path.string()));
    }
}

void require_lexicon_files(const LexiconPaths& paths) {
    require_readable_file(paths.positive, "positive wordlist");
    require_readable_file(paths.negative, "negative wordlist");
    require_readable_file(paths.negators, "negator wordlist");
}

int report_error(const Error& e, std::ostream& err) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
}

void validate_common(const RunConfig& c) {
    c.filter.validate();
    if (c.limit == 0) throw Error(ErrorCode::InvalidArgument, "--limit must be positive");
    if (c.scoring.spell_threshold &&
        !(*c.scoring.spell_threshold >= 0.0 && *c.scoring.spell_threshold <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "--spell-threshold must be within [0, 1]");
    }
    require_lexicon_files(c.lexicon);
    if (c.out_csv) require_writable_target(*c.out_csv);
}

}  // namespace

void RunConfig::validate() const {
    validate_common(*this);
    require_readable_file(corpus, "corpus");
}

int run_classify(const RunConfig& config, TweetSource& source, std::ostream& out, std::ostream& err) {
    try {
        validate_common(config);
        const Lexicon lexicon = load_lexicon(config.lexicon);
        if (!lexicon.summary().warnings.empty()) {
            err << fmt::format("note: lexicon loaded with {} warning(s); see lexicon-check\n",
                               lexicon.summary().warnings.size());
        }

        const std::vector<Tweet> tweets = source_fetch(source, config.filter, config.limit);
        if (const auto* corpus = dynamic_cast<const CorpusSource*>(&source); corpus && corpus->skipped() > 0) {
            err << fmt::format("warning: skipped {} malformed corpus line(s)\n", corpus->skipped());
        }

        const std::vector<TweetScore> scores = score_all(tweets, lexicon, config.scoring, config.jobs);
        const AggregateResult result = aggregate(scores, config.filter.keyword);

        if (config.out_csv) {
            const std::size_t rows = write_csv(*config.out_csv, tweets, scores);
            err << fmt::format("wrote {} row(s) to {}\n", rows, config.out_csv->string());
        }
        out << render_summary(result);
        out.flush();
        return kExitOk;
    } catch (const Error& e) {
        return report_error(e, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}

int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
    } catch (const Error& e) {
        return report_error(e, err);
    }
    CorpusSource source(config.corpus);
    return run_classify(config, source, out, err);
}

int run_lexicon_check(const LexiconPaths& paths, std::ostream& out, std::ostream& err) {
    try {
        const Lexicon lexicon = load_lexicon(paths);
        const auto& s = lexicon.summary();
        for (const auto& w : s.warnings) err << "warning: " << w << '\n';
        out << fmt::format(
            "positive: {}\nnegative: {}\nnegators: {}\nconflicts: {}\nduplicates: {}\n"
            "rejected: {}\ntotal: {}\nstatus: usable\n",
            s.positive, s.negative, s.negators, s.conflicts, s.duplicates, s.rejected, s.total());
        return kExitOk;
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

}  // namespace lexisent
