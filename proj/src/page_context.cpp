#include "testforge/page_context.hpp"

#include <algorithm>

#include "testforge/css_selector.hpp"
#include "testforge/strings.hpp"

namespace testforge::page {

namespace {

constexpr int kMaxAncestry = 3;

bool is_interactive_tag(const std::string& tag) {
  return tag == "a" || tag == "button" || tag == "input" || tag == "select" ||
         tag == "textarea" || tag == "form";
}

bool style_hides(const std::map<std::string, std::string>& attrs) {
  auto it = attrs.find("style");
  if (it == attrs.end()) return false;
  std::string style = strings::to_lower(it->second);
  style.erase(std::remove_if(style.begin(), style.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              style.end());
  return style.find("display:none") != std::string::npos;
}

bool node_hides_subtree(const html::Node& node) {
  if (node.attrs.count("hidden")) return true;
  auto aria = node.attrs.find("aria-hidden");
  if (aria != node.attrs.end() && strings::to_lower(aria->second) == "true") return true;
  return style_hides(node.attrs);
}

bool compute_visible(const html::Document& dom, int node_idx) {
  const html::Node& node = dom.at(node_idx);
  auto type_attr = node.attrs.find("type");
  if (node.tag == "input" && type_attr != node.attrs.end() &&
      strings::to_lower(type_attr->second) == "hidden") {
    return false;
  }
  for (int cur = node_idx; cur > 0; cur = dom.at(cur).parent) {
    if (dom.at(cur).type == html::NodeType::element && node_hides_subtree(dom.at(cur))) {
      return false;
    }
  }
  return true;
}

bool compute_readonly(const html::Node& node) {
  return node.attrs.count("readonly") > 0 || node.attrs.count("disabled") > 0;
}

bool is_sectioning_tag(const std::string& tag) {
  return tag == "section" || tag == "article" || tag == "main" || tag == "aside" ||
         tag == "nav" || tag == "header" || tag == "footer";
}

bool is_heading_tag(const std::string& tag) {
  return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

std::string fragment_for(const html::Node& node) {
  auto id = node.attrs.find("id");
  if (id != node.attrs.end() && !id->second.empty()) return node.tag + "#" + id->second;
  auto aria = node.attrs.find("aria-label");
  if (aria != node.attrs.end() && !aria->second.empty()) {
    return node.tag + "[aria-label='" + aria->second + "']";
  }
  auto role = node.attrs.find("role");
  if (role != node.attrs.end() && !role->second.empty()) {
    return node.tag + "[role='" + role->second + "']";
  }
  auto cls = node.attrs.find("class");
  if (cls != node.attrs.end()) {
    auto names = strings::split(strings::normalize_text(cls->second), ' ');
    if (!names.empty() && !names[0].empty()) return node.tag + "." + names[0];
  }
  return node.tag;
}

std::optional<std::string> first_heading_text(const html::Document& dom, int node_idx) {
  for (int el : dom.elements_in_order(node_idx)) {
    if (is_heading_tag(dom.at(el).tag)) {
      std::string text = dom.text_content(el);
      if (!text.empty()) return text;
    }
  }
  return std::nullopt;
}

std::optional<AncestorContext> classify_ancestor(const html::Document& dom, int node_idx) {
  const html::Node& node = dom.at(node_idx);
  if (node.tag == "form") {
    auto aria = node.attrs.find("aria-label");
    if (aria != node.attrs.end() && !aria->second.empty()) {
      return AncestorContext{AncestorKind::form_label,
                             "form[aria-label='" + aria->second + "']", aria->second};
    }
    return AncestorContext{AncestorKind::form_element, fragment_for(node), ""};
  }
  if (node.tag == "label") {
    std::string text = dom.text_content(node_idx);
    if (!text.empty()) {
      return AncestorContext{AncestorKind::form_label, fragment_for(node), text};
    }
    return std::nullopt;
  }
  if (is_sectioning_tag(node.tag)) {
    if (auto heading = first_heading_text(dom, node_idx)) {
      return AncestorContext{AncestorKind::section_heading, fragment_for(node), *heading};
    }
    // Sectioning tag without a heading still counts as a landmark when it
    // carries an explicit role or label.
  }
  auto role = node.attrs.find("role");
  if (role != node.attrs.end() && !role->second.empty()) {
    return AncestorContext{AncestorKind::aria_landmark,
                           node.tag + "[role='" + role->second + "']", role->second};
  }
  auto aria = node.attrs.find("aria-label");
  if (aria != node.attrs.end() && !aria->second.empty()) {
    return AncestorContext{AncestorKind::aria_landmark,
                           node.tag + "[aria-label='" + aria->second + "']", aria->second};
  }
  return std::nullopt;
}

std::vector<AncestorContext> compute_ancestry(const html::Document& dom, int node_idx) {
  std::vector<AncestorContext> out;
  for (int cur = dom.at(node_idx).parent; cur > 0; cur = dom.at(cur).parent) {
    if (dom.at(cur).type != html::NodeType::element) continue;
    if (auto ctx = classify_ancestor(dom, cur)) {
      out.push_back(*ctx);
      if (out.size() == kMaxAncestry) break;
    }
  }
  return out;
}

bool node_matches_chain(const html::Document& dom, int node_idx,
                        const css::Complex& complex_sel) {
  const auto& compounds = complex_sel.compounds;
  if (compounds.empty()) return false;
  const html::Node& node = dom.at(node_idx);
  if (!compounds.back().matches(node.tag, node.attrs)) return false;
  // Remaining compounds must match strict ancestors, innermost-out.
  int level = static_cast<int>(compounds.size()) - 2;
  int cur = node.parent;
  while (level >= 0 && cur > 0) {
    const html::Node& anc = dom.at(cur);
    if (anc.type == html::NodeType::element &&
        compounds[static_cast<size_t>(level)].matches(anc.tag, anc.attrs)) {
      --level;
    }
    cur = anc.parent;
  }
  return level < 0;
}

}  // namespace

const char* ancestor_kind_name(AncestorKind k) {
  switch (k) {
    case AncestorKind::section_heading: return "section_heading";
    case AncestorKind::form_label: return "form_label";
    case AncestorKind::aria_landmark: return "aria_landmark";
    case AncestorKind::form_element: return "form_element";
  }
  return "unknown";
}

const ElementRecord* PageContext::find(int element_id) const {
  for (const auto& el : elements) {
    if (el.element_id == element_id) return &el;
  }
  return nullptr;
}

Result<PageContext> scrape_context(std::string_view html_text, const std::string& base_url,
                                   std::int64_t scraped_at) {
  auto base = strings::parse_absolute_url(base_url);
  if (!base) return make_error(Errc::invalid_base_url, "not an absolute URL: " + base_url);

  auto dom = std::make_shared<html::Document>(html::parse(html_text));
  if (dom->empty_of_content()) {
    return make_error(Errc::empty_document, "no body content in " + base_url);
  }

  PageContext ctx;
  ctx.url = base_url;
  ctx.scraped_at = scraped_at;
  ctx.dom = dom;

  int next_id = 0;
  for (int node_idx : dom->elements_in_order()) {
    const html::Node& node = dom->at(node_idx);
    bool inventoried = is_interactive_tag(node.tag) || node.attrs.count("role") ||
                       node.attrs.count("aria-label");
    if (!inventoried) continue;

    ElementRecord rec;
    rec.element_id = next_id++;
    rec.tag = node.tag;
    rec.attributes = node.attrs;
    rec.text = dom->text_content(node_idx);
    rec.ancestry = compute_ancestry(*dom, node_idx);
    rec.visible = compute_visible(*dom, node_idx);
    rec.readonly = compute_readonly(node);
    rec.node = node_idx;
    ctx.elements.push_back(std::move(rec));

    if (node.tag == "a") {
      auto href = node.attrs.find("href");
      if (href != node.attrs.end() && !href->second.empty()) {
        const std::string& target = href->second;
        if (target[0] == '#' || strings::starts_with(target, "javascript:") ||
            strings::starts_with(target, "mailto:")) {
          continue;
        }
        std::string resolved = strings::resolve_url(base_url, target);
        auto parts = strings::parse_absolute_url(resolved);
        if (parts && parts->origin == base->origin) {
          ctx.routes.insert(parts->path);
        }
      }
    }
  }
  return ctx;
}

Result<std::vector<AncestorContext>> element_ancestry(const PageContext& ctx, int element_id) {
  const ElementRecord* rec = ctx.find(element_id);
  if (!rec) {
    return make_error(Errc::unknown_element,
                      "no element with id " + std::to_string(element_id));
  }
  return rec->ancestry;
}

Result<std::vector<int>> match_selector(const PageContext& ctx, const script::Selector& sel) {
  auto parsed = css::parse(sel.css);
  if (!parsed.ok()) return parsed.error();
  css::Complex chain = parsed.take();
  if (sel.context_prefix) {
    auto prefix = css::parse(*sel.context_prefix);
    if (!prefix.ok()) return prefix.error();
    css::Complex combined = prefix.take();
    combined.compounds.insert(combined.compounds.end(), chain.compounds.begin(),
                              chain.compounds.end());
    chain = std::move(combined);
  }

  std::vector<int> out;
  for (const auto& el : ctx.elements) {
    if (!node_matches_chain(*ctx.dom, el.node, chain)) continue;
    if (sel.text_hint && el.text.find(*sel.text_hint) == std::string::npos) continue;
    out.push_back(el.element_id);
  }
  return out;
}

int match_count(const PageContext& ctx, const script::Selector& sel) {
  auto matched = match_selector(ctx, sel);
  return matched.ok() ? static_cast<int>(matched.value().size()) : 0;
}

}  // namespace testforge::page
