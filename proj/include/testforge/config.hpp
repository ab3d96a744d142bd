#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "testforge/error.hpp"

namespace testforge {

/// Flat key=value config file. Lines are `key = value`, `#` starts a
/// comment, `[section]` headers prefix subsequent keys with `section.`.
class ConfigFile {
 public:
  static Result<ConfigFile> load(const std::string& path);
  static Result<ConfigFile> parse(const std::string& text);

  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& dflt) const;
  std::int64_t get_int_or(const std::string& key, std::int64_t dflt) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace testforge
