#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glc::detail {

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::uint64_t require_uint(std::string_view s, std::string_view what) {
  auto v = parse_uint(s);
  if (!v) throw std::invalid_argument("expected nonnegative integer for " + std::string(what) +
                                      ", got '" + std::string(s) + "'");
  return *v;
}

/// Splits a line into whitespace-separated tokens after dropping any `#` comment.
inline std::vector<std::string> tokenize_line(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(std::move(t));
  return tokens;
}

}  // namespace glc::detail
