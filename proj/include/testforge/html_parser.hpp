#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace testforge::html {

enum class NodeType { document, element, text };

/// Arena-backed DOM snapshot. Node 0 is the document root; children hold
/// arena indices in document order.
struct Node {
  NodeType type = NodeType::element;
  std::string tag;  // lowercase, element nodes only
  std::map<std::string, std::string> attrs;
  std::string text;  // text nodes only
  int parent = -1;
  std::vector<int> children;
};

struct Document {
  std::vector<Node> nodes;

  const Node& at(int i) const { return nodes[static_cast<size_t>(i)]; }
  bool empty_of_content() const;

  /// Concatenated text of the subtree, whitespace-collapsed and trimmed.
  std::string text_content(int index) const;

  /// Element indices in document order, optionally below a subtree root.
  std::vector<int> elements_in_order(int root = 0) const;

  /// Serializes the subtree back to markup. Text is entity-escaped;
  /// attribute order follows the sorted attrs map.
  std::string serialize(int root = 0) const;
};

/// Error-tolerant parse: mismatched end tags are recovered, unclosed
/// elements close at EOF, void elements never nest. Never fails; worst
/// case yields a document of text nodes.
Document parse(std::string_view input);

bool is_void_element(const std::string& tag);

}  // namespace testforge::html
