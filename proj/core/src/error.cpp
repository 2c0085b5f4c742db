#include "lexisent/error.hpp"

namespace lexisent {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FileUnreadable: return "FileUnreadable";
        case ErrorCode::UnusableLexicon: return "UnusableLexicon";
        case ErrorCode::CorpusEmpty: return "CorpusEmpty";
        case ErrorCode::SourceUnavailable: return "SourceUnavailable";
        case ErrorCode::PathUnwritable: return "PathUnwritable";
        case ErrorCode::SequenceMismatch: return "SequenceMismatch";
        case ErrorCode::InvalidFilter: return "InvalidFilter";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace lexisent
