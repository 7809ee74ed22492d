#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hashdrift::timeutil {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);

// Inverse of days_from_civil.
void civil_from_days(std::int64_t days, int& year, unsigned& month, unsigned& day);

// UTC calendar year / month of an epoch-seconds instant.
int utc_year(std::int64_t epoch_seconds);
void utc_year_month(std::int64_t epoch_seconds, int& year, unsigned& month);

// Accepts "YYYY-MM-DD", "YYYY-MM-DD[T ]hh:mm:ss", optional fractional
// seconds (truncated) and optional "Z" or "+hh:mm"/"-hh:mm" offset.
// Returns epoch seconds in UTC, or nullopt if the string does not parse.
std::optional<std::int64_t> parse_iso8601(std::string_view text);

// "YYYY-MM-DDThh:mm:ssZ"
std::string format_iso8601(std::int64_t epoch_seconds);

}  // namespace hashdrift::timeutil
