#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexisent {

enum class ErrorCode {
    FileUnreadable,
    UnusableLexicon,
    CorpusEmpty,
    SourceUnavailable,
    PathUnwritable,
    SequenceMismatch,
    InvalidFilter,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message is a one-line diagnostic suitable for stderr.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lexisent
