#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "testforge/error.hpp"

namespace testforge::script {

inline constexpr const char* kSchemaTag = "testforge/1";

enum class ActionKind {
  navigate,
  click,
  fill,
  assert_text,
  assert_visible,
  wait,
  submit,
};

const char* action_kind_name(ActionKind k);
std::optional<ActionKind> action_kind_from_name(const std::string& name);

/// CSS selector plus optional disambiguation context. `css` is the base
/// selector; `context_prefix` restricts matches to descendants of the
/// prefix's matches; `text_hint` filters by normalized visible text.
struct Selector {
  std::string css;
  std::optional<std::string> context_prefix;
  std::optional<std::string> text_hint;

  /// Prefix and base joined with a descendant combinator.
  std::string flattened() const {
    return context_prefix ? *context_prefix + " " + css : css;
  }

  friend bool operator==(const Selector&, const Selector&) = default;
};

struct Action {
  ActionKind kind = ActionKind::navigate;
  std::string url;             // navigate
  Selector selector;           // click / fill / assert_* / submit
  std::string value;           // fill value, assert_text expected text
  std::int64_t duration_ms = 0;  // wait

  bool has_selector() const {
    return kind == ActionKind::click || kind == ActionKind::fill ||
           kind == ActionKind::assert_text || kind == ActionKind::assert_visible ||
           kind == ActionKind::submit;
  }

  friend bool operator==(const Action&, const Action&) = default;
};

struct Step {
  int index = 0;  // 1-based, contiguous within a script
  Action action;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const Step&, const Step&) = default;
};

enum class Provenance { generated, enhanced, manual };

const char* provenance_name(Provenance p);
std::optional<Provenance> provenance_from_name(const std::string& name);

struct TestScript {
  std::string id;
  std::string base_url;
  std::vector<Step> steps;
  Provenance provenance = Provenance::manual;

  friend bool operator==(const TestScript&, const TestScript&) = default;
};

/// Validates every type invariant (contiguous 1-based indices, payload
/// shape per action kind, base_url scheme+host, at least one step).
Result<void> validate_script(const TestScript& script);

/// Parses the canonical JSON document form. Unknown fields are rejected;
/// errors carry the JSON path of the offending field.
Result<TestScript> parse_script(const std::string& text);

/// Canonical serialization: 2-space indent, keys sorted, byte-stable.
/// parse_script inverts it.
std::string serialize_script(const TestScript& script);

/// Renumbers step indices to 1..n in place.
void renumber_steps(std::vector<Step>& steps);

}  // namespace testforge::script
