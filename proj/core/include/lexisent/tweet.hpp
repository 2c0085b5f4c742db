#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace lexisent {

using Timestamp = std::chrono::sys_seconds;

struct GeoPoint {
    double latitude = 0.0;   // [-90, 90]
    double longitude = 0.0;  // [-180, 180]

    bool valid() const noexcept;
    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

struct Tweet {
    std::string id;
    Timestamp created_at{};
    std::string username;
    std::string text;
    std::optional<GeoPoint> location;

    friend bool operator==(const Tweet&, const Tweet&) = default;
};

/// Parses an ISO-8601 instant: YYYY-MM-DD, or YYYY-MM-DDTHH:MM[:SS[.fff]]
/// followed by Z, +HH:MM or -HH:MM (a missing zone means UTC; a space may
/// replace the 'T'). Fractional seconds are truncated. Returns nullopt for
/// anything else, including out-of-range calendar fields.
std::optional<Timestamp> parse_timestamp(std::string_view text);

std::string format_date(Timestamp t);      // 2022-03-01
std::string format_time(Timestamp t);      // 10:00:00
std::string format_timestamp(Timestamp t); // 2022-03-01T10:00:00Z

}  // namespace lexisent
