#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "lexisent/lexicon.hpp"

namespace lexisent::testing {

inline std::filesystem::path data_dir() { return LEXISENT_TEST_DATA_DIR; }
inline std::filesystem::path golden_dir() { return LEXISENT_TEST_GOLDEN_DIR; }
inline std::filesystem::path fixture_corpus() { return data_dir() / "corpus" / "fixture.jsonl"; }
inline LexiconPaths fixture_lexicon_paths() { return LexiconPaths::in_directory(data_dir() / "lexicon"); }

inline const Lexicon& fixture_lexicon() {
    static const Lexicon lex = load_lexicon(fixture_lexicon_paths());
    return lex;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& p, std::string_view content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << content;
}

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("lexisent-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(std::string_view name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

}  // namespace lexisent::testing
