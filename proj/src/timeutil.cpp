#include "hashdrift/timeutil.hpp"

#include <cstdio>

namespace hashdrift::timeutil {

// Howard Hinnant's civil-date algorithms; branch-free, valid far beyond
// any plausible social-media timestamp.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;   // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);                // [0, 146096]
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;  // [0, 399]
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);                // [0, 365]
    const unsigned mp = (5 * doy + 2) / 153;                                     // [0, 11]
    day = doy - (153 * mp + 2) / 5 + 1;
    month = mp + (mp < 10 ? 3 : -9);
    year = static_cast<int>(y + (month <= 2));
}

namespace {

void split_epoch(std::int64_t epoch_seconds, std::int64_t& days, std::int64_t& secs_of_day) {
    days = epoch_seconds / 86400;
    secs_of_day = epoch_seconds % 86400;
    if (secs_of_day < 0) {
        secs_of_day += 86400;
        --days;
    }
}

bool parse_digits(std::string_view s, std::size_t pos, std::size_t n, long& out) {
    if (pos + n > s.size()) return false;
    long v = 0;
    for (std::size_t i = 0; i < n; ++i) {
        char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

}  // namespace

int utc_year(std::int64_t epoch_seconds) {
    int y;
    unsigned m;
    utc_year_month(epoch_seconds, y, m);
    return y;
}

void utc_year_month(std::int64_t epoch_seconds, int& year, unsigned& month) {
    std::int64_t days, secs;
    split_epoch(epoch_seconds, days, secs);
    unsigned day;
    civil_from_days(days, year, month, day);
}

std::optional<std::int64_t> parse_iso8601(std::string_view s) {
    long y, mo, d;
    if (!parse_digits(s, 0, 4, y) || s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    if (!parse_digits(s, 5, 2, mo) || !parse_digits(s, 8, 2, d)) return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;

    long hh = 0, mi = 0, ss = 0;
    std::size_t pos = 10;
    if (pos < s.size() && (s[pos] == 'T' || s[pos] == ' ')) {
        ++pos;
        if (!parse_digits(s, pos, 2, hh)) return std::nullopt;
        if (pos + 2 >= s.size() || s[pos + 2] != ':') return std::nullopt;
        if (!parse_digits(s, pos + 3, 2, mi)) return std::nullopt;
        if (pos + 5 >= s.size() || s[pos + 5] != ':') return std::nullopt;
        if (!parse_digits(s, pos + 6, 2, ss)) return std::nullopt;
        if (hh > 23 || mi > 59 || ss > 60) return std::nullopt;
        pos += 8;
        if (pos < s.size() && s[pos] == '.') {  // fractional seconds truncated
            ++pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        }
    }

    std::int64_t offset = 0;
    if (pos < s.size()) {
        char c = s[pos];
        if (c == 'Z') {
            ++pos;
        } else if (c == '+' || c == '-') {
            long oh, om = 0;
            if (!parse_digits(s, pos + 1, 2, oh)) return std::nullopt;
            std::size_t opos = pos + 3;
            if (opos < s.size() && s[opos] == ':') ++opos;
            if (opos < s.size()) {
                if (!parse_digits(s, opos, 2, om)) return std::nullopt;
                opos += 2;
            }
            offset = (oh * 3600 + om * 60) * (c == '+' ? 1 : -1);
            pos = opos;
        }
    }
    if (pos != s.size()) return std::nullopt;

    std::int64_t days = days_from_civil(static_cast<int>(y), static_cast<unsigned>(mo),
                                        static_cast<unsigned>(d));
    return days * 86400 + hh * 3600 + mi * 60 + ss - offset;
}

std::string format_iso8601(std::int64_t epoch_seconds) {
    std::int64_t days, secs;
    split_epoch(epoch_seconds, days, secs);
    int y;
    unsigned mo, d;
    civil_from_days(days, y, mo, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, mo, d,
                  static_cast<long long>(secs / 3600), static_cast<long long>((secs / 60) % 60),
                  static_cast<long long>(secs % 60));
    return buf;
}

}  // namespace hashdrift::timeutil
