#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace testforge::strings {

std::string to_lower(std::string_view s);

/// Collapse whitespace runs to single spaces and trim. No case folding.
std::string normalize_text(std::string_view s);

bool contains_ci(std::string_view haystack, std::string_view needle);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Splits an absolute http(s) URL into origin ("https://host[:port]") and
/// root-relative path ("/a/b?q" with query kept, fragment dropped).
struct UrlParts {
  std::string origin;
  std::string path;  // always starts with "/"
};
std::optional<UrlParts> parse_absolute_url(std::string_view url);

bool is_absolute_url(std::string_view url);

/// Resolves a root-relative or absolute URL against a base origin.
std::string resolve_url(std::string_view base_url, std::string_view href);

}  // namespace testforge::strings
