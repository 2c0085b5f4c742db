#include "lexisent/tweet.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace lexisent {

namespace chr = std::chrono;

bool GeoPoint::valid() const noexcept {
    return std::isfinite(latitude) && std::isfinite(longitude) && latitude >= -90.0 &&
           latitude <= 90.0 && longitude >= -180.0 && longitude <= 180.0;
}

namespace {

// Reads exactly `width` decimal digits starting at `pos`.
bool read_fixed(std::string_view s, std::size_t& pos, int width, int& out) {
    if (pos + width > s.size()) return false;
    for (int k = 0; k < width; ++k) {
        if (s[pos + k] < '0' || s[pos + k] > '9') return false;
    }
    auto res = std::from_chars(s.data() + pos, s.data() + pos + width, out);
    if (res.ec != std::errc{}) return false;
    pos += width;
    return true;
}

bool expect(std::string_view s, std::size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c) return false;
    ++pos;
    return true;
}

}  // namespace

std::optional<Timestamp> parse_timestamp(std::string_view s) {
    std::size_t pos = 0;
    int y = 0, mo = 0, d = 0;
    if (!read_fixed(s, pos, 4, y) || !expect(s, pos, '-') || !read_fixed(s, pos, 2, mo) ||
        !expect(s, pos, '-') || !read_fixed(s, pos, 2, d)) {
        return std::nullopt;
    }
    const chr::year_month_day ymd{chr::year{y}, chr::month{static_cast<unsigned>(mo)},
                                  chr::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    Timestamp t = chr::sys_days{ymd};
    if (pos == s.size()) return t;

    if (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ') return std::nullopt;
    ++pos;
    int h = 0, mi = 0, sec = 0;
    if (!read_fixed(s, pos, 2, h) || !expect(s, pos, ':') || !read_fixed(s, pos, 2, mi)) {
        return std::nullopt;
    }
    if (pos < s.size() && s[pos] == ':') {
        ++pos;
        if (!read_fixed(s, pos, 2, sec)) return std::nullopt;
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            const std::size_t start = pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
            if (pos == start) return std::nullopt;
        }
    }
    if (h > 23 || mi > 59 || sec > 59) return std::nullopt;
    t += chr::hours{h} + chr::minutes{mi} + chr::seconds{sec};

    if (pos == s.size()) return t;
    if (s[pos] == 'Z' || s[pos] == 'z') return pos + 1 == s.size() ? std::optional{t} : std::nullopt;
    if (s[pos] != '+' && s[pos] != '-') return std::nullopt;
    const int sign = s[pos] == '+' ? 1 : -1;
    ++pos;
    int oh = 0, om = 0;
    if (!read_fixed(s, pos, 2, oh)) return std::nullopt;
    if (pos < s.size() && s[pos] == ':') ++pos;
    if (!read_fixed(s, pos, 2, om) || pos != s.size() || oh > 23 || om > 59) return std::nullopt;
    // local = utc + offset
    t -= sign * (chr::hours{oh} + chr::minutes{om});
    return t;
}

std::string format_date(Timestamp t) {
    const chr::year_month_day ymd{chr::floor<chr::days>(t)};
    return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(ymd.year()),
                       static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
}

std::string format_time(Timestamp t) {
    const chr::hh_mm_ss hms{t - chr::floor<chr::days>(t)};
    return fmt::format("{:02d}:{:02d}:{:02d}", hms.hours().count(), hms.minutes().count(),
                       hms.seconds().count());
}

std::string format_timestamp(Timestamp t) {
    return format_date(t) + 'T' + format_time(t) + 'Z';
}

}  // namespace lexisent
