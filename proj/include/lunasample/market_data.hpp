#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lunasample/civil.hpp"
#include "lunasample/error.hpp"
#include "lunasample/text.hpp"

namespace lunasample {

// One trading day of an index, in index points.
struct DailyBar {
    CivilDate date;
    double open;
    double high;
    double low;
    double close;
    double volume;

    bool operator==(const DailyBar&) const = default;
};

enum class DiffKind {
    InterdayClose,      // close_t - close_{t-1}; first bar carries no diff
    IntradayOpenClose,  // close_t - open_t
};

constexpr std::string_view diff_kind_token(DiffKind k) {
    return k == DiffKind::InterdayClose ? "interday" : "intraday";
}

enum class Validation { Lenient, Strict };

struct OhlcvData {
    std::vector<DailyBar> bars;
    std::vector<std::string> warnings;  // lenient-mode OHLC inconsistencies
};

namespace detail {

inline double parse_price_field(std::string_view token, std::string_view where) {
    token = trim(token);
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw Error(Errc::MalformedRow,
                    std::string(where) + ": bad numeric field '" + std::string(token) + "'");
    }
    return v;
}

inline std::string bar_inconsistency(const DailyBar& b) {
    if (b.open < 0 || b.high < 0 || b.low < 0 || b.close < 0) return "negative price";
    if (b.volume < 0) return "negative volume";
    if (b.low > std::min(b.open, b.close)) return "low above open/close";
    if (b.high < std::max(b.open, b.close)) return "high below open/close";
    return {};
}

}  // namespace detail

inline constexpr std::string_view kOhlcvHeader = "date,open,high,low,close,volume";

// Parses OHLCV CSV with the exact header `date,open,high,low,close,volume`.
// Rows must be in strictly ascending date order. OHLC inconsistencies are
// collected as warnings in lenient mode and rejected in strict mode.
inline OhlcvData parse_ohlcv(std::string_view text, Validation mode = Validation::Lenient) {
    OhlcvData out;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (!text.empty() || line_no == 0) {
        ++line_no;
        const auto nl = text.find('\n');
        const std::string_view raw = nl == std::string_view::npos ? text : text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        const auto line = detail::trim(raw);
        if (!saw_header) {
            if (line != kOhlcvHeader) {
                throw Error(Errc::MalformedRow, "line 1: expected header '" +
                                                    std::string(kOhlcvHeader) + "'");
            }
            saw_header = true;
            continue;
        }
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);

        std::string_view fields[6];
        std::string_view rest = line;
        for (int i = 0; i < 6; ++i) {
            const auto comma = rest.find(',');
            if ((i < 5) != (comma != std::string_view::npos)) {
                throw Error(Errc::MalformedRow, where + ": expected 6 comma-separated fields");
            }
            fields[i] = rest.substr(0, comma);
            if (comma != std::string_view::npos) rest = rest.substr(comma + 1);
        }

        DailyBar bar{};
        try {
            bar.date = parse_date(detail::trim(fields[0]));
        } catch (const Error& e) {
            throw Error(Errc::MalformedRow, where + ": " + e.what());
        }
        bar.open = detail::parse_price_field(fields[1], where);
        bar.high = detail::parse_price_field(fields[2], where);
        bar.low = detail::parse_price_field(fields[3], where);
        bar.close = detail::parse_price_field(fields[4], where);
        bar.volume = detail::parse_price_field(fields[5], where);

        if (!out.bars.empty()) {
            const long gap = days_between(out.bars.back().date, bar.date);
            if (gap == 0) {
                throw Error(Errc::DuplicateDate, where + ": duplicate date " + format_date(bar.date));
            }
            if (gap < 0) {
                throw Error(Errc::UnsortedDates,
                            where + ": date " + format_date(bar.date) + " not in ascending order");
            }
        }
        if (const auto problem = detail::bar_inconsistency(bar); !problem.empty()) {
            if (mode == Validation::Strict) {
                throw Error(Errc::OhlcViolation,
                            where + " (" + format_date(bar.date) + "): " + problem);
            }
            out.warnings.push_back(where + " (" + format_date(bar.date) + "): " + problem);
        }
        out.bars.push_back(bar);
    }
    return out;
}

inline std::string serialize_ohlcv(std::span<const DailyBar> bars) {
    std::string out{kOhlcvHeader};
    out += '\n';
    for (const auto& b : bars) {
        out += format_date(b.date);
        out += ',';
        out += format_double(b.open);
        out += ',';
        out += format_double(b.high);
        out += ',';
        out += format_double(b.low);
        out += ',';
        out += format_double(b.close);
        out += ',';
        out += format_double(b.volume);
        out += '\n';
    }
    return out;
}

// Per-date daily point changes derived from a bar series.
class DiffSeries {
public:
    DiffSeries(DiffKind kind, std::vector<std::pair<CivilDate, double>> values)
        : kind_(kind), values_(std::move(values)) {}

    DiffKind kind() const { return kind_; }
    std::size_t size() const { return values_.size(); }
    std::span<const std::pair<CivilDate, double>> values() const { return values_; }

    std::optional<double> at(CivilDate date) const {
        const long want = day_number(date);
        auto it = std::lower_bound(values_.begin(), values_.end(), want,
                                   [](const auto& entry, long day) {
                                       return day_number(entry.first) < day;
                                   });
        if (it == values_.end() || day_number(it->first) != want) return std::nullopt;
        return it->second;
    }

private:
    DiffKind kind_;
    std::vector<std::pair<CivilDate, double>> values_;  // ascending by date
};

inline DiffSeries compute_diffs(std::span<const DailyBar> bars, DiffKind kind) {
    const std::size_t minimum = kind == DiffKind::InterdayClose ? 2 : 1;
    if (bars.size() < minimum) {
        throw Error(Errc::EmptyInput, "need at least " + std::to_string(minimum) +
                                          " bars for " + std::string(diff_kind_token(kind)) +
                                          " diffs, got " + std::to_string(bars.size()));
    }
    std::vector<std::pair<CivilDate, double>> values;
    if (kind == DiffKind::InterdayClose) {
        values.reserve(bars.size() - 1);
        for (std::size_t i = 1; i < bars.size(); ++i) {
            values.emplace_back(bars[i].date, bars[i].close - bars[i - 1].close);
        }
    } else {
        values.reserve(bars.size());
        for (const auto& b : bars) {
            values.emplace_back(b.date, b.close - b.open);
        }
    }
    return DiffSeries(kind, std::move(values));
}

}  // namespace lunasample
