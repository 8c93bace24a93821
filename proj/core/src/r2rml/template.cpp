#include "fairkg/r2rml/mapping.hpp"

namespace fairkg::r2rml {

namespace {

void append_escaped(std::string& out, std::string_view text) {
  for (char c : text) {
    if (c == '{' || c == '}' || c == '\\') out += '\\';
    out += c;
  }
}

}  // namespace

Template parse_template(std::string_view text) {
  Template out;
  std::string current;
  bool in_column = false;
  std::size_t column_start = 0;
  const auto flush_literal = [&] {
    if (current.empty()) return;
    if (!out.segments.empty() && !out.segments.back().is_column) {
      out.segments.back().text += current;
    } else {
      out.segments.push_back({false, current});
    }
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\\') {
      if (i + 1 < text.size() && (text[i + 1] == '{' || text[i + 1] == '}' || text[i + 1] == '\\')) {
        current += text[++i];
      } else {
        current += c;
      }
      continue;
    }
    if (c == '{') {
      if (in_column) {
        throw Error(ErrorCode::UnbalancedBraces, "nested '{' in template '" + std::string(text) + "'",
                    std::nullopt, i + 1);
      }
      flush_literal();
      in_column = true;
      column_start = i;
      continue;
    }
    if (c == '}') {
      if (!in_column) {
        throw Error(ErrorCode::UnbalancedBraces, "unmatched '}' in template '" + std::string(text) + "'",
                    std::nullopt, i + 1);
      }
      if (current.empty()) {
        throw Error(ErrorCode::EmptyColumnName, "empty column reference in template '" +
                                                    std::string(text) + "'",
                    std::nullopt, column_start + 1);
      }
      out.segments.push_back({true, current});
      current.clear();
      in_column = false;
      continue;
    }
    current += c;
  }
  if (in_column) {
    throw Error(ErrorCode::UnbalancedBraces, "unterminated '{' in template '" + std::string(text) + "'",
                std::nullopt, column_start + 1);
  }
  flush_literal();
  if (out.columns().empty()) {
    throw Error(ErrorCode::NoColumnReference,
                "template '" + std::string(text) + "' references no column");
  }
  return out;
}

std::vector<std::string> Template::columns() const {
  std::vector<std::string> out;
  for (const auto& s : segments)
    if (s.is_column) out.push_back(s.text);
  return out;
}

std::string Template::render() const {
  std::string out;
  for (const auto& s : segments) {
    if (s.is_column) {
      out += '{';
      append_escaped(out, s.text);
      out += '}';
    } else {
      append_escaped(out, s.text);
    }
  }
  return out;
}

}  // namespace fairkg::r2rml
