#pragma once

#include <span>
#include <string>
#include <vector>

#include "lunasample/civil.hpp"
#include "lunasample/ephemeris.hpp"
#include "lunasample/error.hpp"

namespace lunasample {

// Single-integer day code: the decade selects the phase (0/10/20/30) and
// the units digit counts calendar days since that phase event. Every
// phase period is shorter than 10 days, so codes never leave their decade.
struct LunaIndex {
    Phase phase;
    int offset;  // days since the phase event, 0..9

    int code() const { return base_code(phase) + offset; }

    bool operator==(const LunaIndex&) const = default;
};

inline constexpr int kMaxLunaCode = 39;

inline Phase phase_of(int code) {
    if (code < 0 || code > kMaxLunaCode) {
        throw Error(Errc::CodeOutOfRange,
                    "luna code " + std::to_string(code) + " outside 0-" + std::to_string(kMaxLunaCode));
    }
    return static_cast<Phase>(code / 10);
}

// Fills in the per-day luna index for each date: the latest event at or
// before the date supplies the phase, days elapsed since it the offset.
// Dates must be strictly increasing and covered by the event sequence.
inline std::vector<LunaIndex> annotate_luna(std::span<const CivilDate> dates,
                                            std::span<const PhaseEvent> events) {
    std::vector<LunaIndex> out;
    out.reserve(dates.size());
    std::size_t ev = 0;
    long prev_day = 0;
    for (std::size_t i = 0; i < dates.size(); ++i) {
        const long day = day_number(dates[i]);
        if (i > 0 && day <= prev_day) {
            throw Error(Errc::UnsortedInput,
                        "dates not strictly increasing at " + format_date(dates[i]));
        }
        prev_day = day;
        if (events.empty() || day < day_number(events.front().date)) {
            throw Error(Errc::DateBeforeCoverage, format_date(dates[i]) +
                                                      " precedes the first phase event");
        }
        while (ev + 1 < events.size() && day_number(events[ev + 1].date) <= day) ++ev;
        const long offset = day - day_number(events[ev].date);
        if (offset >= 10) {
            throw Error(Errc::OffsetOverflow,
                        format_date(dates[i]) + " is " + std::to_string(offset) +
                            " days past the last covering phase event (table gap?)");
        }
        out.push_back(LunaIndex{events[ev].phase, static_cast<int>(offset)});
    }
    return out;
}

}  // namespace lunasample
