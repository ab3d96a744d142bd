#include "testforge/css_selector.hpp"

#include <cctype>
#include <sstream>

#include "testforge/strings.hpp"

namespace testforge::css {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  Result<Complex> run() {
    Complex out;
    skip_ws();
    if (eof()) return make_error(Errc::selector_parse_error, "empty selector");
    while (!eof()) {
      auto compound = parse_compound();
      if (!compound.ok()) return compound.error();
      out.compounds.push_back(compound.take());
      bool had_ws = skip_ws();
      if (eof()) break;
      if (!had_ws) {
        return make_error(Errc::selector_parse_error,
                          err_at("expected descendant combinator"));
      }
    }
    return out;
  }

 private:
  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }

  bool skip_ws() {
    bool any = false;
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
      any = true;
    }
    return any;
  }

  std::string err_at(const std::string& what) const {
    return what + " at offset " + std::to_string(pos_) + " in '" + std::string(in_) + "'";
  }

  Result<std::string> parse_ident() {
    size_t start = pos_;
    while (!eof() && is_ident_char(peek())) ++pos_;
    if (pos_ == start) return make_error(Errc::selector_parse_error, err_at("expected identifier"));
    return std::string(in_.substr(start, pos_ - start));
  }

  Result<Compound> parse_compound() {
    Compound c;
    bool any = false;
    if (!eof() && peek() == '*') {
      ++pos_;
      any = true;
    } else if (!eof() && is_ident_char(peek())) {
      auto ident = parse_ident();
      if (!ident.ok()) return ident.error();
      c.type = strings::to_lower(ident.value());
      any = true;
    }
    while (!eof()) {
      char ch = peek();
      if (ch == '#') {
        ++pos_;
        auto ident = parse_ident();
        if (!ident.ok()) return ident.error();
        c.ids.push_back(ident.take());
        any = true;
      } else if (ch == '.') {
        ++pos_;
        auto ident = parse_ident();
        if (!ident.ok()) return ident.error();
        c.classes.push_back(ident.take());
        any = true;
      } else if (ch == '[') {
        ++pos_;
        auto attr = parse_attr();
        if (!attr.ok()) return attr.error();
        c.attrs.push_back(attr.take());
        any = true;
      } else {
        break;
      }
    }
    if (!any) return make_error(Errc::selector_parse_error, err_at("expected simple selector"));
    return c;
  }

  Result<AttrTest> parse_attr() {
    skip_ws();
    auto name = parse_ident();
    if (!name.ok()) return name.error();
    AttrTest t;
    t.name = strings::to_lower(name.value());
    skip_ws();
    if (eof()) return make_error(Errc::selector_parse_error, err_at("unterminated attribute"));
    if (peek() == ']') {
      ++pos_;
      return t;
    }
    if (peek() != '=') {
      return make_error(Errc::selector_parse_error, err_at("expected '=' or ']'"));
    }
    ++pos_;
    skip_ws();
    if (eof()) return make_error(Errc::selector_parse_error, err_at("unterminated attribute value"));
    std::string value;
    char ch = peek();
    if (ch == '\'' || ch == '"') {
      char quote = ch;
      ++pos_;
      size_t start = pos_;
      while (!eof() && peek() != quote) ++pos_;
      if (eof()) return make_error(Errc::selector_parse_error, err_at("unterminated quoted value"));
      value = std::string(in_.substr(start, pos_ - start));
      ++pos_;
    } else {
      size_t start = pos_;
      while (!eof() && peek() != ']' && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == start) return make_error(Errc::selector_parse_error, err_at("empty attribute value"));
      value = std::string(in_.substr(start, pos_ - start));
    }
    skip_ws();
    if (eof() || peek() != ']') {
      return make_error(Errc::selector_parse_error, err_at("expected ']'"));
    }
    ++pos_;
    t.value = value;
    return t;
  }

  std::string_view in_;
  size_t pos_ = 0;
};

std::vector<std::string> class_list(const std::map<std::string, std::string>& attributes) {
  auto it = attributes.find("class");
  if (it == attributes.end()) return {};
  std::vector<std::string> out;
  std::string cur;
  for (char c : it->second) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

bool Compound::matches(const std::string& tag,
                       const std::map<std::string, std::string>& attributes) const {
  if (type && *type != tag) return false;
  if (!ids.empty()) {
    auto it = attributes.find("id");
    if (it == attributes.end()) return false;
    for (const auto& id : ids) {
      if (it->second != id) return false;
    }
  }
  if (!classes.empty()) {
    auto present = class_list(attributes);
    for (const auto& cls : classes) {
      bool found = false;
      for (const auto& have : present) {
        if (have == cls) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  for (const auto& attr : attrs) {
    auto it = attributes.find(attr.name);
    if (it == attributes.end()) return false;
    if (attr.value && it->second != *attr.value) return false;
  }
  return true;
}

std::string Compound::to_string() const {
  std::ostringstream out;
  if (type) out << *type;
  for (const auto& id : ids) out << '#' << id;
  for (const auto& cls : classes) out << '.' << cls;
  for (const auto& attr : attrs) {
    out << '[' << attr.name;
    if (attr.value) out << "='" << *attr.value << "'";
    out << ']';
  }
  std::string s = out.str();
  return s.empty() ? "*" : s;
}

std::string Complex::to_string() const {
  std::string out;
  for (size_t i = 0; i < compounds.size(); ++i) {
    if (i > 0) out += ' ';
    out += compounds[i].to_string();
  }
  return out;
}

Result<Complex> parse(std::string_view selector) {
  return Parser(selector).run();
}

std::string shape_of(std::string_view selector) {
  auto parsed = parse(selector);
  if (!parsed.ok()) {
    // Unparseable input still needs a stable shape key.
    return "raw:" + strings::normalize_text(selector);
  }
  std::ostringstream out;
  bool first_compound = true;
  for (const auto& compound : parsed.value().compounds) {
    if (!first_compound) out << ' ';
    first_compound = false;
    std::string part;
    if (compound.type) part += *compound.type;
    for (size_t i = 0; i < compound.ids.size(); ++i) part += "#*";
    for (const auto& cls : compound.classes) part += "." + cls;
    for (const auto& attr : compound.attrs) {
      part += "[" + attr.name;
      if (attr.value) part += "=*";
      part += "]";
    }
    out << (part.empty() ? "*" : part);
  }
  return out.str();
}

}  // namespace testforge::css
