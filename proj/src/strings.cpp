#include "testforge/strings.hpp"

#include <algorithm>
#include <cctype>

namespace testforge::strings {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string normalize_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;  // leading whitespace dropped
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(static_cast<char>(c));
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return true;
  std::string h = to_lower(haystack);
  std::string n = to_lower(needle);
  return h.find(n) != std::string::npos;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::optional<UrlParts> parse_absolute_url(std::string_view url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) return std::nullopt;
  std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https" && scheme != "sim") return std::nullopt;
  size_t host_start = scheme_end + 3;
  if (host_start >= url.size()) return std::nullopt;
  size_t path_start = url.find('/', host_start);
  UrlParts parts;
  if (path_start == std::string_view::npos) {
    parts.origin = std::string(url);
    parts.path = "/";
  } else {
    parts.origin = std::string(url.substr(0, path_start));
    parts.path = std::string(url.substr(path_start));
  }
  if (parts.origin.size() == host_start) return std::nullopt;  // empty host
  size_t frag = parts.path.find('#');
  if (frag != std::string::npos) parts.path.resize(frag);
  if (parts.path.empty()) parts.path = "/";
  return parts;
}

bool is_absolute_url(std::string_view url) {
  return parse_absolute_url(url).has_value();
}

std::string resolve_url(std::string_view base_url, std::string_view href) {
  if (is_absolute_url(href)) return std::string(href);
  auto base = parse_absolute_url(base_url);
  if (!base) return std::string(href);
  if (!href.empty() && href.front() == '/') return base->origin + std::string(href);
  // Relative path: resolve against the directory of the base path.
  std::string dir = base->path;
  size_t slash = dir.rfind('/');
  dir = dir.substr(0, slash + 1);
  return base->origin + dir + std::string(href);
}

}  // namespace testforge::strings
