#pragma once

#include <chrono>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lunasample/civil.hpp"
#include "lunasample/error.hpp"

namespace lunasample {

/**
 * Quarter-phase events of the Moon.
 *
 * Phase tables are line-oriented text, one dated event per line:
 *
 *     1989,1,7,0 (New Moon)
 *     1989,1,14,10 (First)
 *
 * The fourth field is the phase code: New Moon 0, First Quarter 10,
 * Full Moon 20, Third Quarter 30. A trailing parenthesized label is
 * ignored. When no table is at hand, `generate_phase_events` produces
 * the same event stream from a mean-synodic-month model, accurate to
 * within one civil day of true quarter-phase dates.
 */

enum class Phase : int { NewMoon = 0, FirstQuarter = 1, FullMoon = 2, ThirdQuarter = 3 };

constexpr int phase_ordinal(Phase p) { return static_cast<int>(p); }
constexpr int base_code(Phase p) { return 10 * phase_ordinal(p); }
constexpr Phase next_phase(Phase p) { return static_cast<Phase>((phase_ordinal(p) + 1) % 4); }

constexpr std::string_view phase_name(Phase p) {
    switch (p) {
        case Phase::NewMoon: return "New Moon";
        case Phase::FirstQuarter: return "First Quarter";
        case Phase::FullMoon: return "Full Moon";
        case Phase::ThirdQuarter: return "Third Quarter";
    }
    return "?";
}

struct PhaseEvent {
    CivilDate date;
    Phase phase;

    bool operator==(const PhaseEvent&) const = default;
};

// Consecutive quarter phases are never closer than ~6.5 days nor farther
// than ~9 days; 6 allows for date truncation.
inline constexpr int kMinPhaseGapDays = 6;
inline constexpr int kMaxPhaseGapDays = 9;

// Checks strictly increasing dates, cyclic phase succession and 6-9 day
// gaps over a whole event sequence.
inline void validate_event_sequence(std::span<const PhaseEvent> events) {
    for (std::size_t i = 1; i < events.size(); ++i) {
        const auto& prev = events[i - 1];
        const auto& cur = events[i];
        const long gap = days_between(prev.date, cur.date);
        if (gap <= 0) {
            throw Error(Errc::OrderViolation,
                        "phase events out of order at " + format_date(cur.date));
        }
        if (cur.phase != next_phase(prev.phase)) {
            throw Error(Errc::OrderViolation,
                        "phase cycle broken at " + format_date(cur.date) + ": " +
                            std::string(phase_name(prev.phase)) + " followed by " +
                            std::string(phase_name(cur.phase)));
        }
        if (gap < kMinPhaseGapDays || gap > kMaxPhaseGapDays) {
            throw Error(Errc::GapViolation, "gap of " + std::to_string(gap) + " days before " +
                                                format_date(cur.date) + " (expected 6-9)");
        }
    }
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline PhaseEvent parse_phase_line(std::string_view line, std::size_t line_no) {
    const std::string where = "phase table line " + std::to_string(line_no);
    // Drop an optional trailing "(label)".
    if (const auto paren = line.find('('); paren != std::string_view::npos) {
        line = line.substr(0, paren);
    }
    int fields[4];
    std::string_view rest = line;
    for (int i = 0; i < 4; ++i) {
        const auto comma = rest.find(',');
        if ((i < 3) != (comma != std::string_view::npos)) {
            throw Error(Errc::MalformedRow, where + ": expected year,month,day,luna");
        }
        const auto token = trim(rest.substr(0, comma));
        if (!parse_int_field(token, fields[i])) {
            throw Error(Errc::MalformedRow,
                        where + ": non-numeric field '" + std::string(token) + "'");
        }
        if (comma != std::string_view::npos) rest = rest.substr(comma + 1);
    }
    const int luna = fields[3];
    if (luna != 0 && luna != 10 && luna != 20 && luna != 30) {
        throw Error(Errc::InvalidPhaseCode,
                    where + ": phase code " + std::to_string(luna) + " is not one of 0/10/20/30");
    }
    CivilDate date{};
    try {
        date = make_date(fields[0], fields[1], fields[2]);
    } catch (const Error& e) {
        throw Error(Errc::InvalidDate, where + ": " + e.what());
    }
    return PhaseEvent{date, static_cast<Phase>(luna / 10)};
}

}  // namespace detail

// Parses a phase-event table. Blank lines are skipped; trailing
// parenthesized labels are ignored. The resulting sequence is validated.
inline std::vector<PhaseEvent> parse_phase_table(std::string_view text) {
    std::vector<PhaseEvent> events;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const std::string_view raw =
            nl == std::string_view::npos ? text : text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        const auto line = detail::trim(raw);
        if (line.empty()) continue;
        events.push_back(detail::parse_phase_line(line, line_no));
    }
    validate_event_sequence(events);
    return events;
}

// Emits `year,month,day,luna` lines, labels dropped, `\n` endings.
inline std::string serialize_phase_table(std::span<const PhaseEvent> events) {
    std::string out;
    for (const auto& e : events) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%d,%u,%u,%d\n", static_cast<int>(e.date.year()),
                      static_cast<unsigned>(e.date.month()), static_cast<unsigned>(e.date.day()),
                      base_code(e.phase));
        out += buf;
    }
    return out;
}

/**
 * Mean-synodic-month phase model.
 *
 * Quarter instants lie at anchor + k * synodic/4 for integer k, with the
 * anchor a known new-moon instant (UTC). Instants are truncated to civil
 * dates. True quarter phases deviate from the mean series by well under a
 * day, so dates from this model land within one day of tabulated ones.
 */
class EphemerisModel {
public:
    static constexpr double kMeanSynodicMonthDays = 29.530588853;

    // Well-documented new moon of 2000-01-06 18:14 UTC.
    EphemerisModel()
        : EphemerisModel(CivilDate{std::chrono::year{2000}, std::chrono::January,
                                   std::chrono::day{6}},
                         std::chrono::minutes{18 * 60 + 14}, kMeanSynodicMonthDays) {}

    EphemerisModel(CivilDate anchor_new_moon, std::chrono::minutes anchor_time_utc,
                   double synodic_days) {
        if (!anchor_new_moon.ok()) {
            throw Error(Errc::InvalidDate, "ephemeris anchor date is invalid");
        }
        if (!(synodic_days > 29.0 && synodic_days < 30.0)) {
            throw Error(Errc::InvalidModel, "synodic period must lie in (29, 30) days, got " +
                                                std::to_string(synodic_days));
        }
        anchor_day_ = static_cast<double>(day_number(anchor_new_moon)) +
                      static_cast<double>(anchor_time_utc.count()) / 1440.0;
        synodic_days_ = synodic_days;
    }

    // Fractional day number (since 1970-01-01 UTC) of quarter instant k.
    // k = 0 is the anchor new moon; phase cycles with k mod 4.
    double quarter_instant(long k) const {
        return anchor_day_ + static_cast<double>(k) * synodic_days_ / 4.0;
    }

    double anchor_day() const { return anchor_day_; }
    double synodic_days() const { return synodic_days_; }

private:
    double anchor_day_;
    double synodic_days_;
};

// All quarter-phase events whose truncated civil date falls in [start, end].
inline std::vector<PhaseEvent> generate_phase_events(CivilDate start, CivilDate end,
                                                     const EphemerisModel& model = {}) {
    if (!start.ok() || !end.ok()) {
        throw Error(Errc::InvalidDate, "invalid date bound for phase generation");
    }
    if (day_number(start) > day_number(end)) {
        throw Error(Errc::InvalidRange, "start date " + format_date(start) + " is after end date " +
                                            format_date(end));
    }
    const double quarter = model.synodic_days() / 4.0;
    const long first_day = day_number(start);
    const long last_day = day_number(end);
    const long k_lo =
        static_cast<long>(std::floor((static_cast<double>(first_day) - model.anchor_day()) / quarter)) - 1;
    const long k_hi =
        static_cast<long>(std::ceil((static_cast<double>(last_day + 1) - model.anchor_day()) / quarter)) + 1;

    std::vector<PhaseEvent> events;
    for (long k = k_lo; k <= k_hi; ++k) {
        const long date_day = static_cast<long>(std::floor(model.quarter_instant(k)));
        if (date_day < first_day || date_day > last_day) continue;
        const int ordinal = static_cast<int>(((k % 4) + 4) % 4);
        events.push_back(PhaseEvent{from_day_number(date_day), static_cast<Phase>(ordinal)});
    }
    return events;
}

}  // namespace lunasample
