#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "testforge/error.hpp"

namespace testforge::css {

struct AttrTest {
  std::string name;
  std::optional<std::string> value;  // nullopt = presence test

  friend bool operator==(const AttrTest&, const AttrTest&) = default;
};

/// One compound: type + ids + classes + attribute tests, all of which must
/// hold on a single element.
struct Compound {
  std::optional<std::string> type;  // lowercase tag; nullopt for universal
  std::vector<std::string> ids;
  std::vector<std::string> classes;
  std::vector<AttrTest> attrs;

  bool matches(const std::string& tag,
               const std::map<std::string, std::string>& attributes) const;
  std::string to_string() const;

  friend bool operator==(const Compound&, const Compound&) = default;
};

/// Descendant chain, outermost compound first. The grammar subset covers
/// type, class, id, attribute ([name] / [name=v] / [name='v']) and the
/// descendant combinator.
struct Complex {
  std::vector<Compound> compounds;

  std::string to_string() const;

  friend bool operator==(const Complex&, const Complex&) = default;
};

Result<Complex> parse(std::string_view selector);

/// Selector shape for failure clustering: ids and attribute values are
/// wildcarded (`#login` -> `#*`, `a[href='/x']` -> `a[href=*]`), classes
/// and types kept.
std::string shape_of(std::string_view selector);

}  // namespace testforge::css
