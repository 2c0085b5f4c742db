#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "lexisent/error.hpp"
#include "lexisent/ingest.hpp"
#include "lexisent/lexicon.hpp"
#include "lexisent/scoring.hpp"

namespace lexisent {

// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitFileUnreadable = 3,
    kExitUnusableLexicon = 4,
    kExitCorpusEmpty = 5,
    kExitSourceUnavailable = 6,
    kExitPathUnwritable = 7,
    kExitSequenceMismatch = 8,
    kExitInternal = 70,
};

int exit_code_for(ErrorCode code) noexcept;

inline constexpr std::size_t kDefaultLimit = 500;

struct RunConfig {
    QueryFilter filter;
    std::filesystem::path corpus;  // the corpus source; the only one the CLI offers
    LexiconPaths lexicon;
    std::size_t limit = kDefaultLimit;
    ScoringOptions scoring;
    std::optional<std::filesystem::path> out_csv;
    unsigned jobs = 1;

    /// Checks the filter, limit, threshold and every referenced path before
    /// any work starts. Throws Error.
    void validate() const;
};

/// fetch -> score -> aggregate -> summary on `out`; CSV when requested.
/// Diagnostics go to `err`. Returns a process exit code.
int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Same pipeline against an arbitrary source; `config.corpus` is ignored.
int run_classify(const RunConfig& config, TweetSource& source, std::ostream& out, std::ostream& err);

/// Loads the lexicon and prints per-list counts. Non-zero exit when it
/// cannot be loaded or is unusable.
int run_lexicon_check(const LexiconPaths& paths, std::ostream& out, std::ostream& err);

}  // namespace lexisent
