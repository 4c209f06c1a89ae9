#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lunasample {

enum class Errc {
    // phase tables / ephemeris
    MalformedRow,
    InvalidPhaseCode,
    InvalidDate,
    OrderViolation,
    GapViolation,
    InvalidRange,
    InvalidModel,
    // luna annotation
    DateBeforeCoverage,
    OffsetOverflow,
    UnsortedInput,
    CodeOutOfRange,
    // market data
    DuplicateDate,
    UnsortedDates,
    OhlcViolation,
    EmptyInput,
    // fusion / aggregation
    CoverageGap,
    EmptyAfterFilter,
    // reporting
    EmptyReport,
    DimensionsTooSmall,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace lunasample
