#include <algorithm>
#include <deque>
#include <tuple>
#include <vector>

#include "lexisent/scoring.hpp"

namespace lexisent {

namespace {

struct Block {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t size = 0;
};

// Longest common substring of a[alo,ahi) and b[blo,bhi); ties resolve to the
// smallest index in a, then in b.
Block longest_match(std::string_view a, std::string_view b, std::size_t alo, std::size_t ahi,
                    std::size_t blo, std::size_t bhi) {
    Block best{alo, blo, 0};
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> cur(b.size() + 1, 0);
    for (std::size_t i = alo; i < ahi; ++i) {
        std::fill(cur.begin() + blo, cur.begin() + bhi + 1, 0);
        for (std::size_t j = blo; j < bhi; ++j) {
            if (a[i] != b[j]) continue;
            const std::size_t k = (j > blo ? prev[j] : 0) + 1;  // prev[j] holds run ending at j-1
            cur[j + 1] = k;
            if (k > best.size) best = {i + 1 - k, j + 1 - k, k};
        }
        std::swap(prev, cur);
    }
    return best;
}

}  // namespace

double similarity_ratio(std::string_view a, std::string_view b) {
    const std::size_t total = a.size() + b.size();
    if (total == 0) return 1.0;

    std::size_t matched = 0;
    std::deque<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> queue;
    queue.emplace_back(0, a.size(), 0, b.size());
    while (!queue.empty()) {
        auto [alo, ahi, blo, bhi] = queue.front();
        queue.pop_front();
        const Block m = longest_match(a, b, alo, ahi, blo, bhi);
        if (m.size == 0) continue;
        matched += m.size;
        if (alo < m.a && blo < m.b) queue.emplace_back(alo, m.a, blo, m.b);
        if (m.a + m.size < ahi && m.b + m.size < bhi) {
            queue.emplace_back(m.a + m.size, ahi, m.b + m.size, bhi);
        }
    }
    return 2.0 * static_cast<double>(matched) / static_cast<double>(total);
}

std::optional<std::string> suggest_correction(std::string_view token, const Lexicon& lexicon,
                                              double threshold) {
    const std::string* best = nullptr;
    double best_ratio = -1.0;
    for (const WordSet* set : {&lexicon.positive_words(), &lexicon.negative_words(), &lexicon.negators()}) {
        for (const auto& word : *set) {
            const double r = similarity_ratio(token, word);
            if (r > best_ratio || (r == best_ratio && best && word < *best)) {
                best_ratio = r;
                best = &word;
            }
        }
    }
    if (best == nullptr || best_ratio < threshold) return std::nullopt;
    return *best;
}

}  // namespace lexisent
