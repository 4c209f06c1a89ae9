#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>

namespace lunasample {

// Shortest fixed-notation decimal that round-trips the exact double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
    if (ec != std::errc()) return "0";
    return std::string(buf, ptr);
}

// Fixed decimal with at most `max_places` fractional digits, trailing zeros
// (and a bare trailing dot) removed.
inline std::string format_decimal(double v, int max_places = 6) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.*f", max_places, v);
    std::string s(buf, buf + (n > 0 ? n : 0));
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

inline std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace lunasample
