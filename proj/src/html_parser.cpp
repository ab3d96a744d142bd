#include "testforge/html_parser.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "testforge/strings.hpp"

namespace testforge::html {

namespace {

const std::array<const char*, 14> kVoidElements = {
    "area", "base", "br",    "col",  "embed",  "hr",  "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

const std::array<const char*, 2> kRawTextElements = {"script", "style"};

bool is_raw_text(const std::string& tag) {
  for (const char* t : kRawTextElements) {
    if (tag == t) return true;
  }
  return false;
}

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    size_t semi = s.find(';', i);
    if (semi == std::string_view::npos || semi - i > 8) {
      out.push_back(s[i++]);
      continue;
    }
    std::string_view entity = s.substr(i + 1, semi - i - 1);
    if (entity == "amp") out.push_back('&');
    else if (entity == "lt") out.push_back('<');
    else if (entity == "gt") out.push_back('>');
    else if (entity == "quot") out.push_back('"');
    else if (entity == "apos") out.push_back('\'');
    else if (entity == "nbsp") out.push_back(' ');
    else if (!entity.empty() && entity[0] == '#') {
      long code = std::strtol(std::string(entity.substr(1)).c_str(), nullptr,
                              entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X') ? 16 : 10);
      if (code > 0 && code < 128) out.push_back(static_cast<char>(code));
      else out.push_back('?');
    } else {
      out.append(s.substr(i, semi - i + 1));
    }
    i = semi + 1;
  }
  return out;
}

std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_attr(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

class TreeBuilder {
 public:
  Document run(std::string_view in) {
    doc_.nodes.push_back(Node{NodeType::document, "", {}, "", -1, {}});
    open_.push_back(0);
    size_t i = 0;
    while (i < in.size()) {
      if (in[i] == '<') {
        if (strings::starts_with(in.substr(i), "<!--")) {
          size_t end = in.find("-->", i + 4);
          i = (end == std::string_view::npos) ? in.size() : end + 3;
          continue;
        }
        if (i + 1 < in.size() && (in[i + 1] == '!' || in[i + 1] == '?')) {
          size_t end = in.find('>', i);
          i = (end == std::string_view::npos) ? in.size() : end + 1;
          continue;
        }
        if (i + 1 < in.size() && in[i + 1] == '/') {
          i = handle_end_tag(in, i);
          continue;
        }
        if (i + 1 < in.size() &&
            (std::isalpha(static_cast<unsigned char>(in[i + 1])))) {
          i = handle_start_tag(in, i);
          continue;
        }
        // Stray '<': treat as text.
        append_text("<");
        ++i;
      } else {
        size_t next = in.find('<', i);
        if (next == std::string_view::npos) next = in.size();
        append_text(decode_entities(in.substr(i, next - i)));
        i = next;
      }
    }
    return std::move(doc_);
  }

 private:
  int top() const { return open_.back(); }

  void append_text(const std::string& text) {
    if (text.empty()) return;
    Node node;
    node.type = NodeType::text;
    node.text = text;
    node.parent = top();
    int idx = static_cast<int>(doc_.nodes.size());
    doc_.nodes.push_back(std::move(node));
    doc_.nodes[static_cast<size_t>(top())].children.push_back(idx);
  }

  size_t handle_start_tag(std::string_view in, size_t i) {
    size_t p = i + 1;
    size_t name_start = p;
    while (p < in.size() && (std::isalnum(static_cast<unsigned char>(in[p])) || in[p] == '-')) ++p;
    std::string tag = strings::to_lower(in.substr(name_start, p - name_start));

    std::map<std::string, std::string> attrs;
    bool self_closing = false;
    while (p < in.size() && in[p] != '>') {
      while (p < in.size() && std::isspace(static_cast<unsigned char>(in[p]))) ++p;
      if (p < in.size() && in[p] == '/') {
        self_closing = true;
        ++p;
        continue;
      }
      if (p >= in.size() || in[p] == '>') break;
      size_t attr_start = p;
      while (p < in.size() && in[p] != '=' && in[p] != '>' && in[p] != '/' &&
             !std::isspace(static_cast<unsigned char>(in[p]))) {
        ++p;
      }
      std::string name = strings::to_lower(in.substr(attr_start, p - attr_start));
      std::string value;
      while (p < in.size() && std::isspace(static_cast<unsigned char>(in[p]))) ++p;
      if (p < in.size() && in[p] == '=') {
        ++p;
        while (p < in.size() && std::isspace(static_cast<unsigned char>(in[p]))) ++p;
        if (p < in.size() && (in[p] == '"' || in[p] == '\'')) {
          char quote = in[p++];
          size_t vstart = p;
          while (p < in.size() && in[p] != quote) ++p;
          value = decode_entities(in.substr(vstart, p - vstart));
          if (p < in.size()) ++p;
        } else {
          size_t vstart = p;
          while (p < in.size() && in[p] != '>' &&
                 !std::isspace(static_cast<unsigned char>(in[p]))) {
            ++p;
          }
          value = decode_entities(in.substr(vstart, p - vstart));
        }
      }
      if (!name.empty() && attrs.find(name) == attrs.end()) {
        attrs[name] = value;
      }
    }
    if (p < in.size()) ++p;  // consume '>'

    if (!tag.empty()) {
      insert_element(tag, std::move(attrs), self_closing);
      if (is_raw_text(tag) && !self_closing) {
        // Raw text swallows everything until the matching end tag.
        std::string close = "</" + tag;
        size_t end = in.size();
        std::string lowered = strings::to_lower(in.substr(p));
        size_t rel = lowered.find(close);
        if (rel != std::string::npos) end = p + rel;
        pop_to_tag(tag);
        size_t close_end = in.find('>', end);
        return (close_end == std::string_view::npos) ? in.size() : close_end + 1;
      }
    }
    return p;
  }

  size_t handle_end_tag(std::string_view in, size_t i) {
    size_t p = i + 2;
    size_t name_start = p;
    while (p < in.size() && (std::isalnum(static_cast<unsigned char>(in[p])) || in[p] == '-')) ++p;
    std::string tag = strings::to_lower(in.substr(name_start, p - name_start));
    size_t end = in.find('>', p);
    p = (end == std::string_view::npos) ? in.size() : end + 1;
    pop_to_tag(tag);
    return p;
  }

  void insert_element(const std::string& tag, std::map<std::string, std::string> attrs,
                      bool self_closing) {
    // Sibling auto-close rules (simplified recovery).
    if (tag == "li" || tag == "option" || tag == "tr" || tag == "td" || tag == "th" ||
        tag == "p") {
      const Node& open_top = doc_.at(top());
      if (open_top.type == NodeType::element && open_top.tag == tag) {
        open_.pop_back();
      }
    }
    Node node;
    node.type = NodeType::element;
    node.tag = tag;
    node.attrs = std::move(attrs);
    node.parent = top();
    int idx = static_cast<int>(doc_.nodes.size());
    doc_.nodes.push_back(std::move(node));
    doc_.nodes[static_cast<size_t>(top())].children.push_back(idx);
    if (!self_closing && !is_void_element(tag)) {
      open_.push_back(idx);
    }
  }

  void pop_to_tag(const std::string& tag) {
    // Mismatched end tags with no open ancestor are ignored.
    for (size_t j = open_.size(); j-- > 1;) {
      if (doc_.at(open_[j]).tag == tag) {
        open_.resize(j);
        return;
      }
    }
  }

  Document doc_;
  std::vector<int> open_;
};

}  // namespace

bool is_void_element(const std::string& tag) {
  for (const char* t : kVoidElements) {
    if (tag == t) return true;
  }
  return false;
}

bool Document::empty_of_content() const {
  for (const auto& node : nodes) {
    if (node.type == NodeType::element) {
      const std::string& t = node.tag;
      if (t != "html" && t != "head" && t != "body") return false;
    } else if (node.type == NodeType::text) {
      if (!strings::normalize_text(node.text).empty()) return false;
    }
  }
  return true;
}

std::string Document::text_content(int index) const {
  std::string raw;
  std::vector<int> stack{index};
  // Depth-first, document order.
  std::vector<int> order;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    order.push_back(cur);
    const Node& node = at(cur);
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  for (int idx : order) {
    const Node& node = at(idx);
    if (node.type == NodeType::text) {
      raw += node.text;
      raw += ' ';
    }
  }
  return strings::normalize_text(raw);
}

std::vector<int> Document::elements_in_order(int root) const {
  std::vector<int> out;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    const Node& node = at(cur);
    if (cur != root && node.type == NodeType::element) out.push_back(cur);
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return out;
}

std::string Document::serialize(int root) const {
  std::ostringstream out;
  const Node& node = at(root);
  if (node.type == NodeType::text) {
    out << escape_text(node.text);
    return out.str();
  }
  bool is_element = node.type == NodeType::element;
  if (is_element) {
    out << '<' << node.tag;
    for (const auto& [name, value] : node.attrs) {
      out << ' ' << name << "=\"" << escape_attr(value) << '"';
    }
    out << '>';
  }
  for (int child : node.children) out << serialize(child);
  if (is_element && !is_void_element(node.tag)) out << "</" << node.tag << '>';
  return out.str();
}

Document parse(std::string_view input) {
  return TreeBuilder().run(input);
}

}  // namespace testforge::html
