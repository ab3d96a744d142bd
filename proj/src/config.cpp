#include "testforge/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "testforge/strings.hpp"

namespace testforge {

Result<ConfigFile> ConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return make_error(Errc::io_error, "cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Result<ConfigFile> ConfigFile::parse(const std::string& text) {
  ConfigFile cfg;
  std::string section;
  int lineno = 0;
  for (const auto& raw : strings::split(text, '\n')) {
    ++lineno;
    std::string line = strings::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        return make_error(Errc::schema_error,
                          "config line " + std::to_string(lineno) + ": unterminated section");
      }
      section = strings::trim(line.substr(1, line.size() - 2));
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      return make_error(Errc::schema_error,
                        "config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = strings::trim(line.substr(0, eq));
    std::string value = strings::trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) {
      return make_error(Errc::schema_error,
                        "config line " + std::to_string(lineno) + ": empty key");
    }
    if (!section.empty()) key = section + "." + key;
    cfg.entries_[key] = value;
  }
  return cfg;
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string ConfigFile::get_or(const std::string& key, const std::string& dflt) const {
  auto v = get(key);
  return v ? *v : dflt;
}

std::int64_t ConfigFile::get_int_or(const std::string& key, std::int64_t dflt) const {
  auto v = get(key);
  if (!v) return dflt;
  char* end = nullptr;
  long long parsed = std::strtoll(v->c_str(), &end, 10);
  if (end == v->c_str() || *end != '\0') return dflt;
  return parsed;
}

}  // namespace testforge
