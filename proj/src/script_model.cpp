#include "testforge/script_model.hpp"

#include <nlohmann/json.hpp>

#include "testforge/css_selector.hpp"
#include "testforge/strings.hpp"

namespace testforge::script {

using nlohmann::json;

const char* action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::navigate: return "navigate";
    case ActionKind::click: return "click";
    case ActionKind::fill: return "fill";
    case ActionKind::assert_text: return "assert_text";
    case ActionKind::assert_visible: return "assert_visible";
    case ActionKind::wait: return "wait";
    case ActionKind::submit: return "submit";
  }
  return "unknown";
}

std::optional<ActionKind> action_kind_from_name(const std::string& name) {
  if (name == "navigate") return ActionKind::navigate;
  if (name == "click") return ActionKind::click;
  if (name == "fill") return ActionKind::fill;
  if (name == "assert_text") return ActionKind::assert_text;
  if (name == "assert_visible") return ActionKind::assert_visible;
  if (name == "wait") return ActionKind::wait;
  if (name == "submit") return ActionKind::submit;
  return std::nullopt;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::generated: return "generated";
    case Provenance::enhanced: return "enhanced";
    case Provenance::manual: return "manual";
  }
  return "unknown";
}

std::optional<Provenance> provenance_from_name(const std::string& name) {
  if (name == "generated") return Provenance::generated;
  if (name == "enhanced") return Provenance::enhanced;
  if (name == "manual") return Provenance::manual;
  return std::nullopt;
}

namespace {

Error schema_error(const std::string& path, const std::string& what) {
  return make_error(Errc::schema_error, path + ": " + what);
}

Result<void> check_keys(const json& obj, const std::string& path,
                        std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) return schema_error(path + "." + it.key(), "unknown field");
  }
  return {};
}

Result<std::string> require_string(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) return schema_error(path + "." + key, "missing field");
  const json& v = obj[key];
  if (!v.is_string()) return schema_error(path + "." + key, "expected string");
  return v.get<std::string>();
}

Result<Selector> parse_selector_json(const json& v, const std::string& path) {
  if (!v.is_object()) return schema_error(path, "expected object");
  if (auto bad = check_keys(v, path, {"css", "context_prefix", "text_hint"}); !bad.ok()) {
    return bad.error();
  }
  auto css = require_string(v, path, "css");
  if (!css.ok()) return css.error();
  Selector sel;
  sel.css = css.take();
  if (v.contains("context_prefix")) {
    if (!v["context_prefix"].is_string()) {
      return schema_error(path + ".context_prefix", "expected string");
    }
    sel.context_prefix = v["context_prefix"].get<std::string>();
  }
  if (v.contains("text_hint")) {
    if (!v["text_hint"].is_string()) return schema_error(path + ".text_hint", "expected string");
    sel.text_hint = v["text_hint"].get<std::string>();
  }
  return sel;
}

Result<Action> parse_action_json(const json& v, const std::string& path) {
  if (!v.is_object()) return schema_error(path, "expected object");
  auto kind_name = require_string(v, path, "kind");
  if (!kind_name.ok()) return kind_name.error();
  auto kind = action_kind_from_name(kind_name.value());
  if (!kind) return schema_error(path + ".kind", "unknown action kind '" + kind_name.value() + "'");

  Action action;
  action.kind = *kind;
  switch (*kind) {
    case ActionKind::navigate: {
      if (auto bad = check_keys(v, path, {"kind", "url"}); !bad.ok()) return bad.error();
      auto url = require_string(v, path, "url");
      if (!url.ok()) return url.error();
      action.url = url.take();
      break;
    }
    case ActionKind::click:
    case ActionKind::submit:
    case ActionKind::assert_visible: {
      if (auto bad = check_keys(v, path, {"kind", "selector"}); !bad.ok()) return bad.error();
      if (!v.contains("selector")) return schema_error(path + ".selector", "missing field");
      auto sel = parse_selector_json(v["selector"], path + ".selector");
      if (!sel.ok()) return sel.error();
      action.selector = sel.take();
      break;
    }
    case ActionKind::fill: {
      if (auto bad = check_keys(v, path, {"kind", "selector", "value"}); !bad.ok()) {
        return bad.error();
      }
      if (!v.contains("selector")) return schema_error(path + ".selector", "missing field");
      auto sel = parse_selector_json(v["selector"], path + ".selector");
      if (!sel.ok()) return sel.error();
      action.selector = sel.take();
      auto value = require_string(v, path, "value");  // empty allowed, absence not
      if (!value.ok()) return value.error();
      action.value = value.take();
      break;
    }
    case ActionKind::assert_text: {
      if (auto bad = check_keys(v, path, {"kind", "selector", "text"}); !bad.ok()) {
        return bad.error();
      }
      if (!v.contains("selector")) return schema_error(path + ".selector", "missing field");
      auto sel = parse_selector_json(v["selector"], path + ".selector");
      if (!sel.ok()) return sel.error();
      action.selector = sel.take();
      auto text = require_string(v, path, "text");
      if (!text.ok()) return text.error();
      action.value = text.take();
      break;
    }
    case ActionKind::wait: {
      if (auto bad = check_keys(v, path, {"kind", "duration_ms"}); !bad.ok()) return bad.error();
      if (!v.contains("duration_ms")) return schema_error(path + ".duration_ms", "missing field");
      if (!v["duration_ms"].is_number_integer()) {
        return schema_error(path + ".duration_ms", "expected integer");
      }
      action.duration_ms = v["duration_ms"].get<std::int64_t>();
      break;
    }
  }
  return action;
}

json selector_to_json(const Selector& sel) {
  json out = json::object();
  out["css"] = sel.css;
  if (sel.context_prefix) out["context_prefix"] = *sel.context_prefix;
  if (sel.text_hint) out["text_hint"] = *sel.text_hint;
  return out;
}

json action_to_json(const Action& action) {
  json out = json::object();
  out["kind"] = action_kind_name(action.kind);
  switch (action.kind) {
    case ActionKind::navigate:
      out["url"] = action.url;
      break;
    case ActionKind::click:
    case ActionKind::submit:
    case ActionKind::assert_visible:
      out["selector"] = selector_to_json(action.selector);
      break;
    case ActionKind::fill:
      out["selector"] = selector_to_json(action.selector);
      out["value"] = action.value;
      break;
    case ActionKind::assert_text:
      out["selector"] = selector_to_json(action.selector);
      out["text"] = action.value;
      break;
    case ActionKind::wait:
      out["duration_ms"] = action.duration_ms;
      break;
  }
  return out;
}

Result<void> validate_selector(const Selector& sel, const std::string& where) {
  if (sel.css.empty()) {
    return make_error(Errc::invariant_error, where + ": empty selector css");
  }
  if (auto parsed = css::parse(sel.css); !parsed.ok()) {
    return make_error(Errc::invariant_error, where + ": " + parsed.error().message);
  }
  if (sel.context_prefix) {
    if (auto parsed = css::parse(*sel.context_prefix); !parsed.ok()) {
      return make_error(Errc::invariant_error,
                        where + ": context_prefix: " + parsed.error().message);
    }
  }
  return {};
}

bool is_navigable_url(const std::string& url) {
  if (url.empty()) return false;
  if (url[0] == '/') return true;
  return strings::is_absolute_url(url);
}

}  // namespace

Result<void> validate_script(const TestScript& script) {
  if (script.id.empty()) return make_error(Errc::invariant_error, "script id is empty");
  auto base = strings::parse_absolute_url(script.base_url);
  if (!base) {
    return make_error(Errc::invariant_error,
                      "base_url must have scheme and host: '" + script.base_url + "'");
  }
  if (script.steps.empty()) return make_error(Errc::invariant_error, "script has no steps");
  int expected = 1;
  for (const auto& step : script.steps) {
    std::string where = "step " + std::to_string(step.index);
    if (step.index != expected) {
      return make_error(Errc::invariant_error,
                        "non-contiguous step index " + std::to_string(step.index) +
                            " (expected " + std::to_string(expected) + ")");
    }
    ++expected;
    const Action& a = step.action;
    switch (a.kind) {
      case ActionKind::navigate:
        if (!is_navigable_url(a.url)) {
          return make_error(Errc::invariant_error,
                            where + ": navigate url must be absolute or root-relative: '" +
                                a.url + "'");
        }
        break;
      case ActionKind::wait:
        if (a.duration_ms <= 0) {
          return make_error(Errc::invariant_error, where + ": wait duration must be > 0");
        }
        break;
      default:
        if (auto bad = validate_selector(a.selector, where); !bad.ok()) return bad.error();
        break;
    }
  }
  return {};
}

Result<TestScript> parse_script(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) return make_error(Errc::schema_error, "$: invalid JSON");
  if (!doc.is_object()) return make_error(Errc::schema_error, "$: expected object");

  if (auto bad = check_keys(doc, "$", {"base_url", "id", "provenance", "schema", "steps"});
      !bad.ok()) {
    return bad.error();
  }
  if (doc.contains("schema")) {
    if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kSchemaTag) {
      return schema_error("$.schema", std::string("expected \"") + kSchemaTag + "\"");
    }
  }

  TestScript script;
  auto id = require_string(doc, "$", "id");
  if (!id.ok()) return id.error();
  script.id = id.take();
  auto base_url = require_string(doc, "$", "base_url");
  if (!base_url.ok()) return base_url.error();
  script.base_url = base_url.take();
  auto prov_name = require_string(doc, "$", "provenance");
  if (!prov_name.ok()) return prov_name.error();
  auto prov = provenance_from_name(prov_name.value());
  if (!prov) return schema_error("$.provenance", "unknown provenance '" + prov_name.value() + "'");
  script.provenance = *prov;

  if (!doc.contains("steps")) return schema_error("$.steps", "missing field");
  if (!doc["steps"].is_array()) return schema_error("$.steps", "expected array");
  size_t step_no = 0;
  for (const json& sv : doc["steps"]) {
    std::string path = "$.steps[" + std::to_string(step_no++) + "]";
    if (!sv.is_object()) return schema_error(path, "expected object");
    if (auto bad = check_keys(sv, path, {"action", "index", "metadata"}); !bad.ok()) {
      return bad.error();
    }
    Step step;
    if (!sv.contains("index")) return schema_error(path + ".index", "missing field");
    if (!sv["index"].is_number_integer()) return schema_error(path + ".index", "expected integer");
    step.index = sv["index"].get<int>();
    if (!sv.contains("action")) return schema_error(path + ".action", "missing field");
    auto action = parse_action_json(sv["action"], path + ".action");
    if (!action.ok()) return action.error();
    step.action = action.take();
    if (sv.contains("metadata")) {
      if (!sv["metadata"].is_object()) return schema_error(path + ".metadata", "expected object");
      for (auto it = sv["metadata"].begin(); it != sv["metadata"].end(); ++it) {
        if (!it.value().is_string()) {
          return schema_error(path + ".metadata." + it.key(), "expected string");
        }
        step.metadata[it.key()] = it.value().get<std::string>();
      }
    }
    script.steps.push_back(std::move(step));
  }

  if (auto bad = validate_script(script); !bad.ok()) return bad.error();
  return script;
}

std::string serialize_script(const TestScript& script) {
  json doc = json::object();
  doc["schema"] = kSchemaTag;
  doc["id"] = script.id;
  doc["base_url"] = script.base_url;
  doc["provenance"] = provenance_name(script.provenance);
  json steps = json::array();
  for (const auto& step : script.steps) {
    json sv = json::object();
    sv["index"] = step.index;
    sv["action"] = action_to_json(step.action);
    if (!step.metadata.empty()) {
      json meta = json::object();
      for (const auto& [k, v] : step.metadata) meta[k] = v;
      sv["metadata"] = meta;
    }
    steps.push_back(std::move(sv));
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

void renumber_steps(std::vector<Step>& steps) {
  int index = 1;
  for (auto& step : steps) step.index = index++;
}

}  // namespace testforge::script
