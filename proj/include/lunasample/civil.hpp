#pragma once

#include <charconv>
#include <chrono>
#include <cstdio>
#include <string>
#include <string_view>

#include "lunasample/error.hpp"

namespace lunasample {

// Date-only civil calendar (proleptic Gregorian, UTC). No time-of-day
// handling anywhere in the library.
using CivilDate = std::chrono::year_month_day;

inline std::chrono::sys_days to_sys_days(CivilDate d) { return std::chrono::sys_days{d}; }

// Days since 1970-01-01.
inline long day_number(CivilDate d) { return to_sys_days(d).time_since_epoch().count(); }

inline CivilDate from_day_number(long n) {
    return CivilDate{std::chrono::sys_days{std::chrono::days{n}}};
}

inline long days_between(CivilDate from, CivilDate to) {
    return day_number(to) - day_number(from);
}

inline CivilDate make_date(int year, int month, int day) {
    const CivilDate d{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                      std::chrono::day{static_cast<unsigned>(day)}};
    if (!d.ok()) {
        throw Error(Errc::InvalidDate, "invalid civil date " + std::to_string(year) + "-" +
                                           std::to_string(month) + "-" + std::to_string(day));
    }
    return d;
}

namespace detail {
inline bool parse_int_field(std::string_view s, int& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}
}  // namespace detail

// ISO-8601 calendar date, `YYYY-MM-DD`. Month/day may be unpadded.
inline CivilDate parse_date(std::string_view text) {
    const auto bad = [&] {
        return Error(Errc::InvalidDate, "expected YYYY-MM-DD date, got '" + std::string(text) + "'");
    };
    const auto dash1 = text.find('-', 1);  // offset 1 keeps a leading '-' from matching
    if (dash1 == std::string_view::npos) throw bad();
    const auto dash2 = text.find('-', dash1 + 1);
    if (dash2 == std::string_view::npos) throw bad();
    int y = 0, m = 0, d = 0;
    if (!detail::parse_int_field(text.substr(0, dash1), y) ||
        !detail::parse_int_field(text.substr(dash1 + 1, dash2 - dash1 - 1), m) ||
        !detail::parse_int_field(text.substr(dash2 + 1), d)) {
        throw bad();
    }
    return make_date(y, m, d);
}

inline std::string format_date(CivilDate d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

}  // namespace lunasample
