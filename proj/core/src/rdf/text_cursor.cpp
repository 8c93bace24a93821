#include "rdf/text_cursor.hpp"

#include <cctype>

#include "fairkg/error.hpp"
#include "util/utf8.hpp"

namespace fairkg::rdf::detail {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_name_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || is_high(c);
}
int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

constexpr std::string_view kLocalEscapable = "_~.-!$&'()*+,;=/?#@%";

}  // namespace

bool is_name_start(char c) { return is_alpha(c) || c == '_' || is_high(c); }

TextCursor::TextCursor(std::string_view text) : text_(util::strip_bom(text)) {}

char TextCursor::get() {
  const char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    line_start_ = pos_;
  }
  return c;
}

void TextCursor::fail(const std::string& message) const { fail_at(line_, column(), message); }

void TextCursor::fail_at(std::size_t line, std::size_t column, const std::string& message) const {
  throw Error(ErrorCode::SyntaxError, message, line, column);
}

void TextCursor::skip_ws() {
  while (!eof()) {
    const char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      get();
    } else if (c == '#') {
      while (!eof() && peek() != '\n') get();
    } else {
      break;
    }
  }
}

void TextCursor::skip_blanks() {
  while (!eof() && (peek() == ' ' || peek() == '\t')) get();
}

bool TextCursor::consume(char c) {
  if (eof() || peek() != c) return false;
  get();
  return true;
}

bool TextCursor::consume_word(std::string_view word, bool case_insensitive) {
  if (pos_ + word.size() > text_.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char a = text_[pos_ + i];
    char b = word[i];
    if (case_insensitive) {
      a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
      b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
    }
    if (a != b) return false;
  }
  const char next = peek(word.size());
  if (is_name_char(next) || next == ':') return false;
  for (std::size_t i = 0; i < word.size(); ++i) get();
  return true;
}

void TextCursor::expect(char c) {
  if (eof()) fail(std::string("expected '") + c + "' but reached end of input");
  if (peek() != c) fail(std::string("expected '") + c + "' but found '" + peek() + "'");
  get();
}

void TextCursor::read_uchar(std::string& out, std::size_t digits) {
  char32_t cp = 0;
  for (std::size_t i = 0; i < digits; ++i) {
    const int v = hex_value(peek());
    if (eof() || v < 0) fail("invalid hexadecimal digit in \\u escape");
    get();
    cp = cp * 16 + static_cast<char32_t>(v);
  }
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("escape is not a Unicode scalar value");
  util::append_utf8(out, cp);
}

void TextCursor::read_echar_or_uchar(std::string& out, bool allow_echar) {
  get();  // backslash
  if (eof()) fail("dangling backslash");
  const char c = get();
  switch (c) {
    case 'u': read_uchar(out, 4); return;
    case 'U': read_uchar(out, 8); return;
    default: break;
  }
  if (!allow_echar) fail(std::string("invalid escape '\\") + c + "'");
  switch (c) {
    case 't': out += '\t'; break;
    case 'b': out += '\b'; break;
    case 'n': out += '\n'; break;
    case 'r': out += '\r'; break;
    case 'f': out += '\f'; break;
    case '"': out += '"'; break;
    case '\'': out += '\''; break;
    case '\\': out += '\\'; break;
    default: fail(std::string("invalid escape '\\") + c + "'");
  }
}

std::string TextCursor::read_iriref() {
  expect('<');
  std::string out;
  while (true) {
    if (eof()) fail("unterminated IRI");
    const char c = peek();
    if (c == '>') {
      get();
      return out;
    }
    if (c == '\\') {
      read_echar_or_uchar(out, false);
      continue;
    }
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
        c == '`') {
      fail("illegal character in IRI reference");
    }
    out += get();
  }
}

std::string TextCursor::read_string(bool allow_long) {
  const char q = peek();
  if (q != '"' && q != '\'') fail("expected a string literal");
  std::string out;
  if (allow_long && peek(1) == q && peek(2) == q) {
    get();
    get();
    get();
    while (true) {
      if (eof()) fail("unterminated long string");
      const char c = peek();
      if (c == q && peek(1) == q && peek(2) == q && peek(3) != q) {
        get();
        get();
        get();
        return out;
      }
      if (c == '\\') {
        read_echar_or_uchar(out, true);
      } else {
        out += get();
      }
    }
  }
  get();
  while (true) {
    if (eof()) fail("unterminated string");
    const char c = peek();
    if (c == q) {
      get();
      return out;
    }
    if (c == '\n' || c == '\r') fail("line break in string literal");
    if (c == '\\') {
      read_echar_or_uchar(out, true);
    } else {
      out += get();
    }
  }
}

std::string TextCursor::read_langtag() {
  expect('@');
  std::string out;
  while (is_alpha(peek())) out += get();
  if (out.empty()) fail("empty language tag");
  while (peek() == '-' && (is_alpha(peek(1)) || is_digit(peek(1)))) {
    out += get();
    while (is_alpha(peek()) || is_digit(peek())) out += get();
  }
  return out;
}

std::string TextCursor::read_blank_label() {
  expect('_');
  expect(':');
  std::string out;
  const char first = peek();
  if (!(is_name_start(first) || is_digit(first))) fail("invalid blank node label");
  out += get();
  while (!eof()) {
    const char c = peek();
    if (is_name_char(c)) {
      out += get();
    } else if (c == '.' && is_name_char(peek(1))) {
      out += get();
    } else {
      break;
    }
  }
  return out;
}

Name TextCursor::read_name() {
  Name name;
  if (is_name_start(peek())) {
    name.prefix += get();
    while (!eof()) {
      const char c = peek();
      if (is_name_char(c)) {
        name.prefix += get();
      } else if (c == '.' && is_name_char(peek(1))) {
        name.prefix += get();
      } else {
        break;
      }
    }
  }
  if (peek() != ':') {
    if (name.prefix.empty()) fail("expected a name");
    return name;
  }
  get();
  name.has_colon = true;
  const auto local_continues = [this](std::size_t ahead) {
    const char c = peek(ahead);
    return is_name_char(c) || c == ':' || c == '%' || c == '\\';
  };
  while (!eof()) {
    const char c = peek();
    if (is_name_char(c) || c == ':') {
      name.local += get();
    } else if (c == '.' && local_continues(1)) {
      name.local += get();
    } else if (c == '%') {
      if (hex_value(peek(1)) < 0 || hex_value(peek(2)) < 0) fail("invalid percent escape in name");
      name.local += get();
      name.local += get();
      name.local += get();
    } else if (c == '\\') {
      get();
      if (eof() || kLocalEscapable.find(peek()) == std::string_view::npos) {
        fail("invalid escape in local name");
      }
      name.local += get();
    } else {
      break;
    }
  }
  return name;
}

std::string TextCursor::read_number() {
  std::string out;
  if (peek() == '+' || peek() == '-') out += get();
  bool digits = false;
  while (is_digit(peek())) {
    out += get();
    digits = true;
  }
  if (peek() == '.' && is_digit(peek(1))) {
    out += get();
    while (is_digit(peek())) {
      out += get();
      digits = true;
    }
  }
  if (!digits) fail("expected a number");
  if ((peek() == 'e' || peek() == 'E') &&
      (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
    out += get();
    if (peek() == '+' || peek() == '-') out += get();
    while (is_digit(peek())) out += get();
  }
  return out;
}

}  // namespace fairkg::rdf::detail
