#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "testforge/error.hpp"
#include "testforge/html_parser.hpp"
#include "testforge/script_model.hpp"

namespace testforge::page {

enum class AncestorKind { section_heading, form_label, aria_landmark, form_element };

const char* ancestor_kind_name(AncestorKind k);

struct AncestorContext {
  AncestorKind kind;
  std::string selector_fragment;
  std::string label_text;

  friend bool operator==(const AncestorContext&, const AncestorContext&) = default;
};

struct ElementRecord {
  int element_id = 0;  // stable ordinal within the page, document order
  std::string tag;
  std::map<std::string, std::string> attributes;
  std::string text;  // normalized visible text
  std::vector<AncestorContext> ancestry;  // nearest first, capped at 3
  bool visible = true;
  bool readonly = false;
  int node = -1;  // arena index into the backing DOM snapshot
};

struct PageContext {
  std::string url;
  std::vector<ElementRecord> elements;
  std::set<std::string> routes;  // root-relative, same-origin only
  std::int64_t scraped_at = 0;
  std::shared_ptr<const html::Document> dom;

  const ElementRecord* find(int element_id) const;
};

/// Parses target-page HTML into the element inventory. Elements cover the
/// interactive tags (a, button, input, select, textarea, form) plus any
/// element carrying role or aria-label. Routes are deduplicated same-origin
/// anchor href paths.
Result<PageContext> scrape_context(std::string_view html_text, const std::string& base_url,
                                   std::int64_t scraped_at = 0);

Result<std::vector<AncestorContext>> element_ancestry(const PageContext& ctx, int element_id);

/// Document-order element ids matching the selector. context_prefix
/// restricts matches to descendants of prefix matches; text_hint filters
/// by normalized-text containment.
Result<std::vector<int>> match_selector(const PageContext& ctx, const script::Selector& sel);

/// Convenience: match count, 0 on parse failure.
int match_count(const PageContext& ctx, const script::Selector& sel);

}  // namespace testforge::page
