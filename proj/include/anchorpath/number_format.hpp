#pragma once

// Canonical decimal rendering shared by the scenario writer and the CSV
// exporters. Values print as the shortest fixed-notation string that parses
// back to the same double.

#include <array>
#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

namespace anchorpath {

/// Shortest round-tripping fixed-notation decimal; integral values have no
/// fractional part ("0", "50", "8.3").
inline std::string format_shortest(double value) {
    std::array<char, 512> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed);
    if (ec != std::errc{}) {
        // Only reachable for non-finite values, which the domain types reject.
        auto [end2, ec2] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
        return std::string(buf.data(), end2);
    }
    return std::string(buf.data(), end);
}

/// Like format_shortest but always carries at least one fractional digit
/// ("1.0", "501.0", "276.078323503122").
inline std::string format_decimal(double value) {
    std::string s = format_shortest(value);
    if (s.find('.') == std::string::npos) s += ".0";
    return s;
}

/// Parses a full token as a double; returns false on any leftover characters.
inline bool parse_double(std::string_view token, double& out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace anchorpath
